#pragma once

// Seeded property suites behind the CLI check verbs. Each suite draws its
// inputs from Rng(seed), so the same seed reproduces the report byte for byte.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "heis/lattice.hpp"
#include "heis/random.hpp"
#include "heis/schroedinger.hpp"
#include "heis/siegel.hpp"
#include "heis/text.hpp"

namespace heis {

struct SuiteMetric {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;

    bool ok() const { return value <= tolerance; }
};

struct SuiteReport {
    std::string title;
    std::vector<std::string> notes;
    std::vector<SuiteMetric> metrics;

    bool passed() const {
        return std::all_of(metrics.begin(), metrics.end(), [](const SuiteMetric& m) { return m.ok(); });
    }

    std::string render() const {
        std::string s = title + "\n";
        for (const auto& n : notes) s += n + "\n";
        for (const auto& m : metrics)
            s += m.name + ": max deviation " + text::format_double(m.value) + " (tolerance " +
                 text::format_double(m.tolerance) + ") " + (m.ok() ? "ok" : "FAIL") + "\n";
        s += std::string("status: ") + (passed() ? "PASS" : "FAIL") + "\n";
        return s;
    }
};

struct RepCheckOptions {
    std::size_t n = 1;
    std::size_t N = 16;
    double L = 1.0;
    double lambda = 1.0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

inline constexpr double rep_tolerance = 1e-12;

inline GridFunction random_grid_function(Rng& rng, const GridSpec& spec) {
    std::vector<Complex> v(spec.points());
    for (auto& c : v) c = rng.in_box(-1.0, 1.0);
    return {spec, std::move(v)};
}

/// Weyl relation in both orientations, additivity of T and U, centrality of
/// C, homomorphism and inverse of rep, and (for N^n <= 256) the kernel of rep
/// on the phase axis.
inline SuiteReport rep_check(const RepCheckOptions& opt) {
    if (opt.trials < 1) throw ParameterError("trials must be >= 1");
    const GridSpec spec(opt.n, opt.N, opt.L, opt.lambda);
    Rng rng(opt.seed);
    const auto N = static_cast<Int>(opt.N);

    SuiteReport report;
    report.title = "rep-check n=" + std::to_string(opt.n) + " N=" + std::to_string(opt.N) +
                   " L=" + text::format_double(opt.L) + " lambda=" + text::format_double(opt.lambda) +
                   " trials=" + std::to_string(opt.trials) + " seed=" + std::to_string(opt.seed);

    SuiteMetric weyl{"weyl U_y T_x = T_x U_y C_alpha", 0.0, rep_tolerance};
    SuiteMetric weyl_rev{"weyl T_x U_y = conj(alpha) U_y T_x", 0.0, rep_tolerance};
    SuiteMetric shift_add{"T_p T_p' = T_(p+p')", 0.0, rep_tolerance};
    SuiteMetric mod_add{"U_q U_q' = U_(q+q')", 0.0, rep_tolerance};
    SuiteMetric central{"C commutes with T and U", 0.0, rep_tolerance};
    SuiteMetric hom{"rep(g) rep(g') = rep(g g')", 0.0, rep_tolerance};
    SuiteMetric inv{"rep(g^-1) rep(g) = id", 0.0, rep_tolerance};

    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const LatticeElement g(rng.integer_vector(opt.n, -N, 2 * N), rng.integer_vector(opt.n, -N, 2 * N),
                               rng.integer(-N, 2 * N));
        const LatticeElement gp(rng.integer_vector(opt.n, -N, 2 * N), rng.integer_vector(opt.n, -N, 2 * N),
                                rng.integer(-N, 2 * N));
        const GridFunction f = random_grid_function(rng, spec);
        if (trial == 0) {
            report.notes.push_back("first input: g=" + text::format(g) + " g'=" + text::format(gp) +
                                   " f[0]=" + text::format_complex(f[0]));
        }

        const QuantizedShift p{g.k()}, pp{gp.k()};
        const QuantizedModulation q{g.l()}, qp{gp.l()};
        const Complex alpha = weyl_alpha(p, q, spec);

        const GridFunction ut = apply_U(q, apply_T(p, f));
        const GridFunction tu = apply_T(p, apply_U(q, f));
        weyl.value = std::max(weyl.value, max_abs_diff(ut, apply_T(p, apply_U(q, apply_C(alpha, f)))));
        weyl_rev.value = std::max(weyl_rev.value, max_abs_diff(tu, apply_C(std::conj(alpha), ut)));

        std::vector<Int> psum(opt.n), qsum(opt.n);
        for (std::size_t a = 0; a < opt.n; ++a) {
            psum[a] = checked::add(p.p[a], pp.p[a]);
            qsum[a] = checked::add(q.q[a], qp.q[a]);
        }
        shift_add.value = std::max(shift_add.value, max_abs_diff(apply_T(p, apply_T(pp, f)), apply_T({psum}, f)));
        mod_add.value = std::max(mod_add.value, max_abs_diff(apply_U(q, apply_U(qp, f)), apply_U({qsum}, f)));

        const Complex c = phase_of(g.m(), spec);
        central.value = std::max(central.value, max_abs_diff(apply_C(c, apply_T(p, f)), apply_T(p, apply_C(c, f))));
        central.value = std::max(central.value, max_abs_diff(apply_C(c, apply_U(q, f)), apply_U(q, apply_C(c, f))));

        hom.value = std::max(hom.value, max_abs_diff(rep(g, spec)(rep(gp, spec)(f)), rep(mul(g, gp), spec)(f)));
        inv.value = std::max(inv.value, max_abs_diff(rep(inverse(g), spec)(rep(g, spec)(f)), f));
    }
    report.metrics = {weyl, weyl_rev, shift_add, mod_add, central, hom, inv};

    if (spec.points() <= dense_limit) {
        // rep(0, 0, s) is the identity exactly when N divides s.
        SuiteMetric kernel{"kernel rep(0,0,s) = id iff s = 0 mod N, s in [0, 2N)", 0.0, 0.0};
        for (Int s = 0; s < 2 * N; ++s) {
            const LatticeElement g(std::vector<Int>(opt.n, 0), std::vector<Int>(opt.n, 0), s);
            const bool identity = materialize(rep(g, spec), spec).distance_to_identity() <= rep_tolerance;
            if (identity != (s % N == 0)) kernel.value += 1.0;
        }
        report.metrics.push_back(kernel);
    } else {
        report.notes.push_back("kernel: skipped (N^n > 256)");
    }
    return report;
}

struct SiegelCheckOptions {
    std::size_t n = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
};

inline constexpr double siegel_tolerance = 1e-10;

inline ComplexElement random_complex_element(Rng& rng, std::size_t n, double radius) {
    ComplexVector z(n);
    for (auto& v : z) v = rng.in_disk(radius);
    return {std::move(z), rng.uniform(-radius, radius)};
}

inline SiegelPoint random_siegel_point(Rng& rng, std::size_t n, double radius) {
    ComplexVector w(n);
    for (auto& v : w) v = rng.in_disk(radius);
    return {std::move(w), rng.in_disk(radius)};
}

inline SiegelPoint affine_combination(const SiegelPoint& p, const SiegelPoint& q, Complex s) {
    ComplexVector w(p.dim());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = p.w()[j] + s * (q.w()[j] - p.w()[j]);
    return {std::move(w), p.sigma() + s * (q.sigma() - p.sigma())};
}

/// Height invariance, composition, inverse, dilation equivariance, cmul
/// associativity and complex affinity of A_g. Inputs have component moduli
/// at most 10.
inline SuiteReport siegel_check(const SiegelCheckOptions& opt) {
    if (opt.trials < 1) throw ParameterError("trials must be >= 1");
    if (opt.n < 1) throw DimensionError("siegel-check needs n >= 1");
    Rng rng(opt.seed);
    constexpr double radius = 10.0;

    SuiteReport report;
    report.title = "siegel-check n=" + std::to_string(opt.n) + " trials=" + std::to_string(opt.trials) +
                   " seed=" + std::to_string(opt.seed);

    SuiteMetric height_inv{"height(A_g p) - height(p)", 0.0, siegel_tolerance};
    SuiteMetric compose{"A_g A_g' = A_(g g') (relative)", 0.0, compose_tolerance};
    SuiteMetric inverse_metric{"A_(g^-1) A_g = id (relative)", 0.0, compose_tolerance};
    SuiteMetric assoc{"cmul associativity", 0.0, siegel_tolerance};
    SuiteMetric two_sided{"g g^-1 = g^-1 g = e", 0.0, 0.0};
    SuiteMetric equivariance{"Delta_r A_g = A_(delta_r g) Delta_r, r in {0.5,1,2,10}", 0.0, siegel_tolerance};
    SuiteMetric hom{"delta_r(g g') = delta_r g delta_r g'", 0.0, siegel_tolerance};
    SuiteMetric affine{"A_g affine in (w, sigma) (relative)", 0.0, 1e-12};

    const ComplexElement e(opt.n);
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const ComplexElement g = random_complex_element(rng, opt.n, radius);
        const ComplexElement gp = random_complex_element(rng, opt.n, radius);
        const ComplexElement gpp = random_complex_element(rng, opt.n, radius);
        const SiegelPoint p = random_siegel_point(rng, opt.n, radius);
        const SiegelPoint q = random_siegel_point(rng, opt.n, radius);
        const Complex s = rng.in_box(-1.0, 1.0);
        if (trial == 0)
            report.notes.push_back("first input: g=" + text::format(g) + " g'=" + text::format(gp) +
                                   " p=" + text::format(p));

        const SiegelPoint moved = act(g, p);
        height_inv.value = std::max(height_inv.value, std::abs(height(moved) - height(p)));
        compose.value = std::max(compose.value, act_compose_deviation(g, gp, p));
        inverse_metric.value = std::max(inverse_metric.value, max_abs_diff(act(cinverse(g), moved), p) / magnitude_scale(moved));
        assoc.value = std::max(assoc.value, max_abs_diff(cmul(cmul(g, gp), gpp), cmul(g, cmul(gp, gpp))));
        two_sided.value = std::max(
            {two_sided.value, max_abs_diff(cmul(g, cinverse(g)), e), max_abs_diff(cmul(cinverse(g), g), e)});

        for (double r : {0.5, 1.0, 2.0, 10.0}) {
            const ComplexDilation d(r);
            equivariance.value = std::max(
                equivariance.value, max_abs_diff(domain_dilate(d, moved), act(cdilate(d, g), domain_dilate(d, p))));
            hom.value = std::max(hom.value, max_abs_diff(cdilate(d, cmul(g, gp)), cmul(cdilate(d, g), cdilate(d, gp))));
        }

        const SiegelPoint lhs = act(g, affine_combination(p, q, s));
        const SiegelPoint rhs = affine_combination(moved, act(g, q), s);
        affine.value = std::max(affine.value,
                                max_abs_diff(lhs, rhs) / std::max(magnitude_scale(lhs), magnitude_scale(rhs)));
    }
    report.metrics = {height_inv, compose, inverse_metric, assoc, two_sided, equivariance, hom, affine};
    return report;
}

}  // namespace heis
