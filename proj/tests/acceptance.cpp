// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// usage: acceptance <path-to-heis-binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "heis/heis.hpp"

using namespace heis;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) { return text::format_double(v); }

RealElement random_real(Rng& rng, std::size_t n) {
    return {rng.uniform_vector(n, -10, 10), rng.uniform_vector(n, -10, 10), rng.uniform(-10, 10)};
}

// 1. Group axioms for H_n(R).
Outcome group_axioms() {
    const auto t0 = Clock::now();
    Rng rng(1001);
    double assoc = 0.0, inv = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const RealElement e(n);
        for (int i = 0; i < 10000; ++i) {
            const RealElement g = random_real(rng, n), h = random_real(rng, n), k = random_real(rng, n);
            assoc = std::max(assoc, max_abs_diff(mul(mul(g, h), k), mul(g, mul(h, k))));
            inv = std::max({inv, max_abs_diff(mul(g, inverse(g)), e), max_abs_diff(mul(inverse(g), g), e)});
        }
    }
    const double dt = seconds_since(t0);
    return {assoc <= 1e-9 && inv <= 1e-9 && dt < 5.0,
            "assoc " + fmt(assoc) + ", inverse " + fmt(inv) + ", " + fmt(dt) + " s"};
}

// 2. The stated (-x,-y,-t) leaves (0,0,-x.y); the corrected inverse gives e.
Outcome naive_inverse_regression() {
    Rng rng(1002);
    double naive_dev = 0.0, fixed_dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const RealElement g = random_real(rng, n);
        const RealElement naive = mul(g, naive_inverse(g));
        const RealElement expected(std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), -dot(g.x(), g.y()));
        naive_dev = std::max(naive_dev, max_abs_diff(naive, expected));
        fixed_dev = std::max(fixed_dev, max_abs_diff(mul(g, inverse(g)), RealElement(n)));
    }
    return {naive_dev <= 1e-12 && fixed_dev <= 1e-12,
            "naive product vs (0,0,-x.y) " + fmt(naive_dev) + ", corrected " + fmt(fixed_dev)};
}

// 3. Normal-form oracle.
Outcome normal_form_oracle() {
    const auto t0 = Clock::now();
    Rng rng(1003);
    std::size_t word_fail = 0, triple_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 3));
        Word w(n);
        const auto len = rng.integer(0, 50);
        for (Int j = 0; j < len; ++j) {
            Int e = 0;
            while (e == 0) e = rng.integer(-5, 5);
            const auto idx = static_cast<std::size_t>(rng.integer(1, static_cast<Int>(n)));
            const Int kind = rng.integer(0, 2);
            w.push_back(kind == 0 ? gen_a(idx, e) : kind == 1 ? gen_b(idx, e) : gen_c(e));
        }
        if (evaluate_word(normalize_word(w)) != evaluate_word(w)) ++word_fail;
    }
    for (int i = 0; i < 10000; ++i) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 3));
        const LatticeElement g(rng.integer_vector(n, -100, 100), rng.integer_vector(n, -100, 100),
                               rng.integer(-100, 100));
        if (evaluate_word(normal_form(g)) != g) ++triple_fail;
    }
    const double dt = seconds_since(t0);
    return {word_fail == 0 && triple_fail == 0 && dt < 10.0,
            std::to_string(word_fail) + " word mismatches, " + std::to_string(triple_fail) + " triple mismatches, " +
                fmt(dt) + " s"};
}

// 4. Relation checker.
Outcome relations() {
    std::size_t counterexamples = 0, instances = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto r = check_relations(n);
        counterexamples += r.counterexamples.size();
        instances += r.instances();
    }
    return {counterexamples == 0,
            std::to_string(instances) + " instances, " + std::to_string(counterexamples) + " counterexamples"};
}

GridFunction random_function(Rng& rng, const GridSpec& spec) {
    std::vector<Complex> v(spec.points());
    for (auto& c : v) c = rng.in_box(-1, 1);
    return {spec, std::move(v)};
}

// 5. Exact Weyl relation, exhaustive in p and q.
Outcome weyl() {
    const auto t0 = Clock::now();
    Rng rng(1005);
    double dev = 0.0;
    std::size_t cases = 0;
    for (std::size_t n : {1u, 2u}) {
        for (std::size_t N : {4u, 8u, 16u}) {
            const GridSpec spec(n, N);
            std::vector<GridFunction> fs;
            for (int i = 0; i < 10; ++i) fs.push_back(random_function(rng, spec));
            const std::size_t count = n == 1 ? N : N * N;
            for (std::size_t pi = 0; pi < count; ++pi) {
                QuantizedShift p{std::vector<Int>(n)};
                for (std::size_t a = 0, v = pi; a < n; ++a, v /= N) p.p[a] = static_cast<Int>(v % N);
                for (std::size_t qi = 0; qi < count; ++qi) {
                    QuantizedModulation q{std::vector<Int>(n)};
                    for (std::size_t a = 0, v = qi; a < n; ++a, v /= N) q.q[a] = static_cast<Int>(v % N);
                    const Complex alpha = weyl_alpha(p, q, spec);
                    for (const auto& f : fs) {
                        dev = std::max(dev, max_abs_diff(apply_U(q, apply_T(p, f)), apply_T(p, apply_U(q, apply_C(alpha, f)))));
                        ++cases;
                    }
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    return {dev <= 1e-12 && dt < 30.0, std::to_string(cases) + " cases, max deviation " + fmt(dev) + ", " + fmt(dt) + " s"};
}

// 6. Homomorphism and kernel of rep.
Outcome rep_hom_kernel() {
    Rng rng(1006);
    const GridSpec spec(1, 16);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const LatticeElement g({rng.integer(-32, 32)}, {rng.integer(-32, 32)}, rng.integer(-32, 32));
        const LatticeElement h({rng.integer(-32, 32)}, {rng.integer(-32, 32)}, rng.integer(-32, 32));
        const GridFunction f = random_function(rng, spec);
        dev = std::max(dev, max_abs_diff(rep(g, spec)(rep(h, spec)(f)), rep(mul(g, h), spec)(f)));
    }
    std::size_t kernel_wrong = 0;
    for (Int s = 0; s < 32; ++s) {
        const bool id = materialize(rep(LatticeElement({0}, {0}, s), spec), spec).distance_to_identity() <= 1e-12;
        if (id != (s % 16 == 0)) ++kernel_wrong;
    }
    return {dev <= 1e-12 && kernel_wrong == 0,
            "homomorphism deviation " + fmt(dev) + ", kernel mismatches " + std::to_string(kernel_wrong) + "/32"};
}

// 7. Second-order convergence of the commutator defect.
Outcome commutator_convergence() {
    auto defect = [](std::size_t N) {
        const GridSpec spec(1, N);
        const auto f = GridFunction::sample(spec, [L = spec.L()](std::span<const double> w) {
            return Complex{std::sin(2.0 * std::numbers::pi * w[0] / L), 0.0};
        });
        return commutator_defect(std::vector<double>{1.0}, LinearFunctional{{1.0}}, f);
    };
    bool ok = true;
    std::string detail;
    for (std::size_t N : {32u, 64u}) {
        const double ratio = defect(N) / defect(2 * N);
        ok = ok && ratio >= 3.5 && ratio <= 4.5;
        detail += "N=" + std::to_string(N) + " ratio " + fmt(ratio) + "; ";
    }
    return {ok, detail};
}

// 8. Siegel suite.
Outcome siegel() {
    const auto t0 = Clock::now();
    Rng rng(1008);
    double height_dev = 0.0, compose_dev = 0.0, equiv_dev = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const ComplexElement g = random_complex_element(rng, n, 10.0), gp = random_complex_element(rng, n, 10.0);
        const SiegelPoint p = random_siegel_point(rng, n, 10.0);
        const SiegelPoint moved = act(g, p);
        height_dev = std::max(height_dev, std::abs(height(moved) - height(p)));
        compose_dev = std::max(compose_dev, act_compose_deviation(g, gp, p));
        for (double r : {0.5, 1.0, 2.0, 10.0}) {
            const ComplexDilation d(r);
            equiv_dev = std::max(equiv_dev, max_abs_diff(domain_dilate(d, moved), act(cdilate(d, g), domain_dilate(d, p))));
        }
    }
    const double dt = seconds_since(t0);
    return {height_dev <= 1e-10 && compose_dev <= 1e-10 && equiv_dev <= 1e-10 && dt < 5.0,
            "height " + fmt(height_dev) + ", composition (relative) " + fmt(compose_dev) + ", equivariance " +
                fmt(equiv_dev) + ", " + fmt(dt) + " s"};
}

// 9. Coset reduction.
Outcome cosets() {
    Rng rng(1009);
    std::size_t outside = 0, not_idempotent = 0;
    double recompose = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const RealElement g = random_real(rng, n);
        const auto red = coset_reduce(g);
        if (!in_fundamental_domain(red.rep)) ++outside;
        recompose = std::max(recompose, max_abs_diff(mul(embed(red.gamma), g), red.rep));
        if (!coset_reduce(red.rep).gamma.is_identity()) ++not_idempotent;
    }
    return {outside == 0 && recompose <= 1e-12 && not_idempotent == 0,
            std::to_string(outside) + " outside the cube, recomposition " + fmt(recompose) + ", " +
                std::to_string(not_idempotent) + " non-idempotent"};
}

struct Proc {
    int code;
    std::string out;
};

Proc shell(const std::string& cmd) {
    Proc p{-1, {}};
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
    const int status = pclose(pipe);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

// 10. CLI determinism and exit codes.
Outcome cli(const std::string& exe) {
    const std::string q = "'" + exe + "'";
    const std::vector<std::string> checks = {
        q + " relcheck --n 3",
        q + " rep-check --n 1 --N 16 --trials 100 --seed 42",
        q + " rep-check --n 2 --N 8 --trials 20 --seed 7",
        q + " siegel-check --n 2 --trials 200 --seed 42",
        "HEIS_SEED=5 " + q + " siegel-check --n 1 --trials 50",
    };
    std::size_t nondeterministic = 0, failed = 0;
    for (const auto& c : checks) {
        const Proc a = shell(c), b = shell(c);
        if (a.out != b.out || a.code != b.code) ++nondeterministic;
        if (a.code != 0) ++failed;
    }
    struct Expect {
        std::string args;
        int code;
    };
    const std::vector<Expect> codes = {
        {"mul --n 2 '1,2;3,4;5' '0,0;0,0;0'", 0},
        {"norm --n 1 'b1 a1'", 0},
        {"frobnicate", 64},
        {"", 64},
        {"mul --n 1 '1;2' '1;2;3'", 2},
        {"mul --n 1 'x;2;3' '1;2;3'", 2},
        {"norm --n 2 'a1b1'", 2},
        {"mul --n abc '1;2;3' '1;2;3'", 2},
        {"siegel-act --n 1 '1;0' '0;1+2j'", 2},
        {"mul --n 1 '1,2;3,4;5' '0;0;0'", 3},
        {"norm --n 2 'b3'", 3},
        {"dilate --n 1 --r -1 '1;1;1'", 3},
        {"rep-check --n 1 --N 1", 3},
        {"siegel-check --n 1 --trials 0", 3},
    };
    std::size_t wrong_code = 0;
    std::string which;
    for (const auto& e : codes) {
        const Proc p = shell(q + " " + e.args);
        if (p.code != e.code) {
            ++wrong_code;
            which += " [" + e.args + " -> " + std::to_string(p.code) + "]";
        }
    }
    const Proc ok = shell(q + " norm --n 1 'b1 a1'");
    const bool norm_ok = ok.out == "a1 b1 c\n";
    return {nondeterministic == 0 && failed == 0 && wrong_code == 0 && norm_ok,
            std::to_string(checks.size()) + " check runs, " + std::to_string(nondeterministic) + " nondeterministic, " +
                std::to_string(failed) + " failing, " + std::to_string(wrong_code) + "/" +
                std::to_string(codes.size()) + " wrong exit codes" + which};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-heis>\n";
        return 64;
    }
    const std::string exe = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 group axioms H_n(R)", group_axioms},
        {"2 naive inverse regression", naive_inverse_regression},
        {"3 lattice normal-form oracle", normal_form_oracle},
        {"4 relation checker n=1..4", relations},
        {"5 exact Weyl relation", weyl},
        {"6 representation homomorphism and kernel", rep_hom_kernel},
        {"7 commutator second-order convergence", commutator_convergence},
        {"8 Siegel suite", siegel},
        {"9 coset reduction", cosets},
        {"10 CLI determinism and exit codes", [&] { return cli(exe); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " :: " << o.detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
