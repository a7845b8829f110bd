#pragma once

// heis command-line front end. run() is the whole program minus main(), so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 ok, 2 malformed literal, 3 domain error (dimension or
// parameter), 4 property check failed, 64 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heis/heis.hpp"

namespace heis::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,
    exit_domain = 3,
    exit_check_failed = 4,
    exit_usage = 64,
};

inline constexpr const char* grammar_help = R"(Literal grammars (n is always given by --n and literals are checked against it):
  real element     x1,...,xn;y1,...,yn;t
  lattice element  k1,...,kn;l1,...,ln;m           integers
  complex element  z1,...,zn;t                      zj written re+imi, e.g. 1-0.5i
  Siegel point     w1,...,wn;sigma
  word             term (' ' term)*, term = a<j>[^e] | b<j>[^e] | c[^e], e a nonzero integer
Literals starting with '-' must follow a '--' separator.
Reals print with 17 significant digits.
Exit codes: 0 ok, 2 parse error, 3 domain error, 4 check failed, 64 usage.
Random checks use std::mt19937_64 seeded with --seed (default $HEIS_SEED, else 1).)";

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("HEIS_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 1;
}

inline std::vector<double> parse_real_list(const std::string& s, std::size_t n, const char* what) {
    std::vector<double> out;
    for (auto c : text::components(text::trim({s, 0}), n, what)) out.push_back(text::parse_double(c));
    return out;
}

inline std::string join_words(const std::vector<std::string>& parts, std::istream& in) {
    if (parts.empty()) return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Heisenberg group toolkit: real, integer and complex Heisenberg groups", "heis"};
    app.footer(grammar_help);
    app.require_subcommand(1);

    std::size_t n = 0;
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "dimension n >= 1")->required(); };

    std::vector<std::string> lits;
    std::vector<std::string> word_parts;
    double r = 1.0;
    Int bound = 1;
    std::size_t N = 16;
    double L = 1.0, lambda = 1.0;
    std::size_t trials = 100;
    std::uint64_t seed = default_seed();
    std::string nu_text, u_text, in_path, out_path;

    auto* mul_cmd = app.add_subcommand("mul", "product of two real elements");
    add_n(mul_cmd);
    mul_cmd->add_option("elements", lits, "g h")->required()->expected(2);

    auto* inv_cmd = app.add_subcommand("inv", "inverse (-x, -y, -t + x.y) of a real element");
    add_n(inv_cmd);
    inv_cmd->add_option("element", lits, "g")->required()->expected(1);

    auto* dilate_cmd = app.add_subcommand("dilate", "dilation (r x, r y, r^2 t)");
    add_n(dilate_cmd);
    dilate_cmd->add_option("--r", r, "dilation factor r > 0")->required();
    dilate_cmd->add_option("element", lits, "g")->required()->expected(1);

    auto* reduce_cmd = app.add_subcommand("reduce", "coset representative of H_n(Z) g in [0,1)^(2n+1)");
    add_n(reduce_cmd);
    reduce_cmd->add_option("element", lits, "g")->required()->expected(1);

    auto* parse_cmd = app.add_subcommand("parse", "tokenize a generator word (stdin if omitted)");
    add_n(parse_cmd);
    parse_cmd->add_option("word", word_parts, "word");

    auto* norm_cmd = app.add_subcommand("norm", "normal form a^k b^l c^m of a word (stdin if omitted)");
    add_n(norm_cmd);
    norm_cmd->add_option("word", word_parts, "word");

    auto* eval_cmd = app.add_subcommand("eval", "lattice element (k;l;m) denoted by a word (stdin if omitted)");
    add_n(eval_cmd);
    eval_cmd->add_option("word", word_parts, "word");

    auto* rel_cmd = app.add_subcommand("relcheck", "verify the defining relations of H_n(Z)");
    add_n(rel_cmd);
    rel_cmd->add_option("--bound", bound, "generator exponents range over [-bound, bound] \\ {0}");

    auto* rep_cmd = app.add_subcommand("rep-check", "seeded checks of the grid representation");
    add_n(rep_cmd);
    rep_cmd->add_option("--N", N, "samples per axis");
    rep_cmd->add_option("--L", L, "period length");
    rep_cmd->add_option("--lambda", lambda, "lambda > 0");
    rep_cmd->add_option("--trials", trials, "number of random trials");
    rep_cmd->add_option("--seed", seed, "generator seed");

    auto* comm_cmd = app.add_subcommand("commutator", "interior defect of D_nu M_mu - M_mu D_nu - mu(nu)");
    add_n(comm_cmd);
    comm_cmd->add_option("--N", N, "samples per axis (ignored with --in)");
    comm_cmd->add_option("--L", L, "period length (ignored with --in)");
    comm_cmd->add_option("--lambda", lambda, "lambda (ignored with --in)");
    comm_cmd->add_option("--nu", nu_text, "direction nu1,...,nun")->required();
    comm_cmd->add_option("--u", u_text, "mu(w) = w.u, u1,...,un")->required();
    comm_cmd->add_option("--in", in_path, "grid function file; default f(w) = prod_a sin(2 pi w_a / L)");
    comm_cmd->add_option("--out", out_path, "write the commutator (D M - M D) f here");

    auto* smul_cmd = app.add_subcommand("siegel-mul", "product of two complex elements");
    add_n(smul_cmd);
    smul_cmd->add_option("elements", lits, "g h")->required()->expected(2);

    auto* sact_cmd = app.add_subcommand("siegel-act", "apply A_g to a point of the Siegel domain");
    add_n(sact_cmd);
    sact_cmd->add_option("args", lits, "g p")->required()->expected(2);

    auto* scheck_cmd = app.add_subcommand("siegel-check", "seeded checks of the Siegel action");
    add_n(scheck_cmd);
    scheck_cmd->add_option("--trials", trials, "number of random trials");
    scheck_cmd->add_option("--seed", seed, "generator seed");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ConversionError& e) {
        err << "heis: " << e.what() << "\n";
        return exit_parse;
    } catch (const CLI::ParseError& e) {
        err << "heis: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    std::ostringstream buf;
    int code = exit_ok;
    try {
        if (n == 0) throw DimensionError("--n must be >= 1");

        if (mul_cmd->parsed()) {
            buf << text::format(mul(text::parse_real_element(lits[0], n), text::parse_real_element(lits[1], n)))
                << "\n";
        } else if (inv_cmd->parsed()) {
            buf << text::format(inverse(text::parse_real_element(lits[0], n))) << "\n";
        } else if (dilate_cmd->parsed()) {
            buf << text::format(dilate(Dilation(r), text::parse_real_element(lits[0], n))) << "\n";
        } else if (reduce_cmd->parsed()) {
            const auto red = coset_reduce(text::parse_real_element(lits[0], n));
            buf << "gamma: " << text::format(red.gamma) << "\n";
            buf << "rep: " << text::format(red.rep) << "\n";
        } else if (parse_cmd->parsed()) {
            buf << describe_tokens(parse_word(join_words(word_parts, in), n)) << "\n";
        } else if (norm_cmd->parsed()) {
            buf << to_string(normalize_word(parse_word(join_words(word_parts, in), n))) << "\n";
        } else if (eval_cmd->parsed()) {
            buf << text::format(evaluate_word(parse_word(join_words(word_parts, in), n))) << "\n";
        } else if (rel_cmd->parsed()) {
            const RelationReport report = check_relations(n, bound);
            buf << "relcheck n=" << n << " bound=" << bound << "\n";
            for (const auto& f : report.families)
                buf << f.name << ": " << f.instances << " instances, " << f.failures << " counterexamples\n";
            for (const auto& c : report.counterexamples)
                buf << "counterexample [" << c.family << "]: " << to_string(c.lhs) << " = "
                    << text::format(c.lhs_value) << " but " << to_string(c.rhs) << " = "
                    << text::format(c.rhs_value) << "\n";
            buf << "status: " << (report.all_hold() ? "PASS" : "FAIL") << "\n";
            if (!report.all_hold()) code = exit_check_failed;
        } else if (rep_cmd->parsed()) {
            const SuiteReport report = rep_check({n, N, L, lambda, trials, seed});
            buf << report.render();
            if (!report.passed()) code = exit_check_failed;
        } else if (comm_cmd->parsed()) {
            std::optional<GridFunction> f;
            if (!in_path.empty()) {
                std::ifstream is(in_path);
                if (!is) throw ParameterError("cannot open " + in_path);
                f = read_grid_function(is);
                if (f->spec().n() != n) throw DimensionError("--in grid has a different n");
            } else {
                const GridSpec spec(n, N, L, lambda);
                const double period = spec.L();
                f = GridFunction::sample(spec, [period](std::span<const double> w) {
                    double v = 1.0;
                    for (double x : w) v *= std::sin(2.0 * std::numbers::pi * x / period);
                    return Complex{v, 0.0};
                });
            }
            const auto nu = parse_real_list(nu_text, n, "nu");
            const LinearFunctional mu{parse_real_list(u_text, n, "u")};
            const double defect = commutator_defect(nu, mu, *f);
            buf << "commutator n=" << n << " N=" << f->spec().N() << " L=" << text::format_double(f->spec().L())
                << " h=" << text::format_double(f->spec().step()) << "\n";
            buf << "mu(nu): " << text::format_double(mu(nu)) << "\n";
            buf << "seam margin: " << seam_margin(nu) << "\n";
            buf << "interior defect: " << text::format_double(defect) << "\n";
            if (!out_path.empty()) {
                std::ofstream os(out_path);
                if (!os) throw ParameterError("cannot write " + out_path);
                write_grid_function(os, commutator(nu, mu, *f));
            }
        } else if (smul_cmd->parsed()) {
            buf << text::format(cmul(text::parse_complex_element(lits[0], n), text::parse_complex_element(lits[1], n)))
                << "\n";
        } else if (sact_cmd->parsed()) {
            const SiegelPoint p = text::parse_siegel_point(lits[1], n);
            const SiegelPoint q = act(text::parse_complex_element(lits[0], n), p);
            buf << text::format(q) << "\n";
            buf << "height: " << text::format_double(height(p)) << " -> " << text::format_double(height(q)) << " ("
                << to_string(classify(q)) << ")\n";
        } else if (scheck_cmd->parsed()) {
            const SuiteReport report = siegel_check({n, trials, seed});
            buf << report.render();
            if (!report.passed()) code = exit_check_failed;
        }
    } catch (const ParseError& e) {
        err << "heis: parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const Error& e) {
        err << "heis: " << e.what() << "\n";
        return exit_domain;
    }
    out << buf.str();
    return code;
}

}  // namespace heis::cli
