#pragma once

// Translation, modulation and phase operators on complex samples over the
// periodic grid ([0, L) ∩ hZ)^n, h = L / N.
//
// Parameters are quantized so every identity is exact on the grid:
//   shift       x = h p              (p integer)
//   modulation  y = q / (lambda L)   (q integer)
//   phase       t = s / (lambda N)   (s integer)
// With these choices lambda y . w = q . j / N at grid point w = h j, so
// T_p is a cyclic permutation and U_q is a diagonal of N-th roots of unity
// (the finite clock-and-shift pair).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <numbers>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heis/error.hpp"
#include "heis/lattice.hpp"

namespace heis {

using Complex = std::complex<double>;

class GridSpec {
public:
    static constexpr std::size_t default_max_points = std::size_t{1} << 20;

    GridSpec(std::size_t n, std::size_t N, double L = 1.0, double lambda = 1.0,
             std::size_t max_points = default_max_points)
        : n_(n), N_(N), L_(L), lambda_(lambda), points_(1) {
        if (n == 0) throw DimensionError("grid needs n >= 1");
        if (N < 2) throw ParameterError("grid needs N >= 2 samples per axis");
        if (!(L > 0.0) || !std::isfinite(L)) throw ParameterError("period L must be positive and finite");
        if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be positive and finite");
        for (std::size_t a = 0; a < n; ++a) {
            if (points_ > max_points / N) throw ParameterError("grid N^n exceeds the point limit");
            points_ *= N;
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t N() const noexcept { return N_; }
    double L() const noexcept { return L_; }
    double lambda() const noexcept { return lambda_; }
    double step() const noexcept { return L_ / static_cast<double>(N_); }
    std::size_t points() const noexcept { return points_; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::size_t n_;
    std::size_t N_;
    double L_;
    double lambda_;
    std::size_t points_;
};

/// Row-major multi-index: axis 0 varies slowest.
inline std::vector<std::size_t> unflatten(const GridSpec& spec, std::size_t flat) {
    std::vector<std::size_t> idx(spec.n());
    for (std::size_t a = spec.n(); a-- > 0;) {
        idx[a] = flat % spec.N();
        flat /= spec.N();
    }
    return idx;
}

inline std::size_t flatten(const GridSpec& spec, std::span<const std::size_t> idx) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < spec.n(); ++a) flat = flat * spec.N() + idx[a];
    return flat;
}

/// Advances a row-major multi-index by one; returns false after the last point.
inline bool next_index(std::vector<std::size_t>& idx, std::size_t N) {
    for (std::size_t a = idx.size(); a-- > 0;) {
        if (++idx[a] < N) return true;
        idx[a] = 0;
    }
    return false;
}

class GridFunction {
public:
    explicit GridFunction(GridSpec spec) : spec_(spec), values_(spec.points(), Complex{0.0, 0.0}) {}

    GridFunction(GridSpec spec, std::vector<Complex> values) : spec_(spec), values_(std::move(values)) {
        if (values_.size() != spec_.points())
            throw DimensionError("grid function has " + std::to_string(values_.size()) + " samples, expected " +
                                 std::to_string(spec_.points()));
        for (const auto& v : values_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ParameterError("grid function samples must be finite");
    }

    /// Samples f at the grid points w = h j.
    static GridFunction sample(const GridSpec& spec, const std::function<Complex(std::span<const double>)>& f) {
        std::vector<Complex> values(spec.points());
        std::vector<std::size_t> idx(spec.n(), 0);
        std::vector<double> w(spec.n());
        const double h = spec.step();
        std::size_t flat = 0;
        do {
            for (std::size_t a = 0; a < spec.n(); ++a) w[a] = h * static_cast<double>(idx[a]);
            values[flat++] = f(w);
        } while (next_index(idx, spec.N()));
        return {spec, std::move(values)};
    }

    /// Indicator of a single grid point.
    static GridFunction basis(const GridSpec& spec, std::size_t flat) {
        GridFunction e(spec);
        e.values_.at(flat) = 1.0;
        return e;
    }

    const GridSpec& spec() const noexcept { return spec_; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Complex& operator[](std::size_t i) const { return values_[i]; }

private:
    GridSpec spec_;
    std::vector<Complex> values_;
};

inline double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    if (!(a.spec() == b.spec())) throw DimensionError("grid functions live on different grids");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

struct QuantizedShift {
    std::vector<Int> p;
};

struct QuantizedModulation {
    std::vector<Int> q;
};

struct LinearFunctional {
    std::vector<double> u;

    double operator()(std::span<const double> w) const {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
        return s;
    }
};

namespace detail {

inline std::size_t mod_n(Int v, std::size_t N) {
    const auto n = static_cast<Int>(N);
    Int r = v % n;
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
}

inline void require_grid_dim(const GridSpec& spec, std::size_t got) {
    if (got != spec.n())
        throw DimensionError("expected a " + std::to_string(spec.n()) + "-vector, got " + std::to_string(got));
}

/// exp(2 pi i k / N); exact at multiples of a quarter turn.
inline Complex root_of_unity(std::size_t k, std::size_t N) {
    k %= N;
    if ((4 * k) % N == 0) {
        switch ((4 * k) / N) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
    return {std::cos(theta), std::sin(theta)};
}

inline std::vector<Complex> roots_of_unity(std::size_t N) {
    std::vector<Complex> r(N);
    for (std::size_t k = 0; k < N; ++k) r[k] = root_of_unity(k, N);
    return r;
}

/// (a . b) mod N without overflow.
inline std::size_t dot_mod(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t N) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = (s + static_cast<std::uint64_t>(mod_n(a[i], N)) * mod_n(b[i], N)) % N;
    return static_cast<std::size_t>(s);
}

}  // namespace detail

/// out[j] = f[j - p mod N]: the translate T_x f(w) = f(w - x), x = h p.
inline GridFunction apply_T(const QuantizedShift& shift, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    detail::require_grid_dim(spec, shift.p.size());
    const std::size_t N = spec.N();
    std::vector<std::size_t> offset(spec.n());
    for (std::size_t a = 0; a < spec.n(); ++a) offset[a] = (N - detail::mod_n(shift.p[a], N)) % N;

    std::vector<Complex> out(spec.points());
    std::vector<std::size_t> idx(spec.n(), 0);
    std::size_t flat = 0;
    do {
        std::size_t src = 0;
        for (std::size_t a = 0; a < spec.n(); ++a) src = src * N + (idx[a] + offset[a]) % N;
        out[flat++] = f[src];
    } while (next_index(idx, N));
    return {spec, std::move(out)};
}

/// out[j] = exp(2 pi i (q . j) / N) f[j]: the modulation U_y, y = q / (lambda L).
inline GridFunction apply_U(const QuantizedModulation& mod, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    detail::require_grid_dim(spec, mod.q.size());
    const std::size_t N = spec.N();
    const auto roots = detail::roots_of_unity(N);
    std::vector<std::size_t> q(spec.n());
    for (std::size_t a = 0; a < spec.n(); ++a) q[a] = detail::mod_n(mod.q[a], N);

    std::vector<Complex> out(spec.points());
    std::vector<std::size_t> idx(spec.n(), 0);
    std::size_t flat = 0;
    do {
        std::size_t phase = 0;
        for (std::size_t a = 0; a < spec.n(); ++a) phase = (phase + q[a] * idx[a]) % N;
        out[flat] = roots[phase] * f[flat];
        ++flat;
    } while (next_index(idx, N));
    return {spec, std::move(out)};
}

inline constexpr double unit_modulus_tolerance = 1e-12;

/// out = alpha f, |alpha| = 1.
inline GridFunction apply_C(Complex alpha, const GridFunction& f) {
    if (!(std::abs(std::abs(alpha) - 1.0) <= unit_modulus_tolerance))
        throw ParameterError("phase must have unit modulus");
    std::vector<Complex> out(f.values());
    for (auto& v : out) v *= alpha;
    return {f.spec(), std::move(out)};
}

/// The alpha with U_y T_x = T_x U_y C_alpha, i.e. exp(2 pi i lambda y . x) = exp(2 pi i (q . p) / N).
inline Complex weyl_alpha(const QuantizedShift& shift, const QuantizedModulation& mod, const GridSpec& spec) {
    detail::require_grid_dim(spec, shift.p.size());
    detail::require_grid_dim(spec, mod.q.size());
    return detail::root_of_unity(detail::dot_mod(mod.q, shift.p, spec.N()), spec.N());
}

/// Phase exp(2 pi i lambda t) for t = s / (lambda N).
inline Complex phase_of(Int s, const GridSpec& spec) { return detail::root_of_unity(detail::mod_n(s, spec.N()), spec.N()); }

/// T_p U_q C_alpha for the quantized triple g = (p, q, s), alpha = exp(2 pi i s / N).
///
/// Quantized triples multiply with the integer Heisenberg law, so
/// rep(g) rep(g') = rep(g g') holds exactly on the grid.
class GridOperator {
public:
    GridOperator(LatticeElement g, GridSpec spec) : g_(std::move(g)), spec_(spec) {
        detail::require_grid_dim(spec_, g_.dim());
    }

    const LatticeElement& element() const noexcept { return g_; }
    const GridSpec& spec() const noexcept { return spec_; }

    GridFunction operator()(const GridFunction& f) const {
        if (!(f.spec() == spec_)) throw DimensionError("operator applied to a function on another grid");
        return apply_T({g_.k()}, apply_U({g_.l()}, apply_C(phase_of(g_.m(), spec_), f)));
    }

private:
    LatticeElement g_;
    GridSpec spec_;
};

inline GridOperator rep(const LatticeElement& g, const GridSpec& spec) { return {g, spec}; }

/// Column-major dense matrix of an operator; column j is the image of the j-th basis function.
struct DenseOperator {
    std::size_t size = 0;
    std::vector<Complex> entries;

    Complex operator()(std::size_t row, std::size_t col) const { return entries[col * size + row]; }

    double distance_to_identity() const {
        double d = 0.0;
        for (std::size_t c = 0; c < size; ++c)
            for (std::size_t r = 0; r < size; ++r)
                d = std::max(d, std::abs((*this)(r, c) - (r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0})));
        return d;
    }
};

inline constexpr std::size_t dense_limit = 256;

/// Only for grids with at most dense_limit points.
template <class Operator>
DenseOperator materialize(const Operator& op, const GridSpec& spec) {
    if (spec.points() > dense_limit) throw ParameterError("dense materialization limited to N^n <= 256");
    DenseOperator m{spec.points(), std::vector<Complex>(spec.points() * spec.points())};
    for (std::size_t c = 0; c < spec.points(); ++c) {
        const GridFunction col = op(GridFunction::basis(spec, c));
        for (std::size_t r = 0; r < spec.points(); ++r) m.entries[c * m.size + r] = col[r];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Directional differentiation and multiplication by a linear functional.

/// Central-difference directional derivative: sum_a nu_a (f(w + h e_a) - f(w - h e_a)) / (2h), periodic.
inline GridFunction directional_derivative(std::span<const double> nu, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    detail::require_grid_dim(spec, nu.size());
    const std::size_t N = spec.N();
    const double inv2h = 1.0 / (2.0 * spec.step());

    std::vector<Complex> out(spec.points());
    std::vector<std::size_t> idx(spec.n(), 0), nb(spec.n());
    std::size_t flat = 0;
    do {
        Complex acc{0.0, 0.0};
        for (std::size_t a = 0; a < spec.n(); ++a) {
            if (nu[a] == 0.0) continue;
            nb = idx;
            nb[a] = (idx[a] + 1) % N;
            const Complex fwd = f[flatten(spec, nb)];
            nb[a] = (idx[a] + N - 1) % N;
            const Complex bwd = f[flatten(spec, nb)];
            acc += nu[a] * (fwd - bwd) * inv2h;
        }
        out[flat++] = acc;
    } while (next_index(idx, N));
    return {spec, std::move(out)};
}

/// out[j] = mu(h j) f[j].
inline GridFunction multiply(const LinearFunctional& mu, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    detail::require_grid_dim(spec, mu.u.size());
    std::vector<Complex> out(spec.points());
    std::vector<std::size_t> idx(spec.n(), 0);
    std::vector<double> w(spec.n());
    std::size_t flat = 0;
    do {
        for (std::size_t a = 0; a < spec.n(); ++a) w[a] = spec.step() * static_cast<double>(idx[a]);
        out[flat] = mu(w) * f[flat];
        ++flat;
    } while (next_index(idx, spec.N()));
    return {spec, std::move(out)};
}

/// D_nu(M_mu f) - M_mu(D_nu f).
inline GridFunction commutator(std::span<const double> nu, const LinearFunctional& mu, const GridFunction& f) {
    const GridFunction dm = directional_derivative(nu, multiply(mu, f));
    const GridFunction md = multiply(mu, directional_derivative(nu, f));
    std::vector<Complex> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dm[i] - md[i];
    return {f.spec(), std::move(out)};
}

/// Points excluded next to each wrap seam on axes with nu_a != 0:
/// max(1, ceil(|nu|)).
inline std::size_t seam_margin(std::span<const double> nu) {
    double norm2 = 0.0;
    for (double v : nu) norm2 += v * v;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(norm2))));
}

/// max |(D_nu M_mu - M_mu D_nu) f - mu(nu) f| over grid points away from the
/// wrap seams, where the non-periodic mu jumps.
inline double commutator_defect(std::span<const double> nu, const LinearFunctional& mu, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    detail::require_grid_dim(spec, nu.size());
    detail::require_grid_dim(spec, mu.u.size());
    const std::size_t N = spec.N();
    const std::size_t margin = seam_margin(nu);
    if (2 * margin >= N) throw ParameterError("grid too coarse: seam margin leaves no interior points");

    const GridFunction comm = commutator(nu, mu, f);
    const double mu_nu = mu(nu);
    double defect = 0.0;
    std::vector<std::size_t> idx(spec.n(), 0);
    std::size_t flat = 0;
    do {
        bool interior = true;
        for (std::size_t a = 0; a < spec.n() && interior; ++a)
            if (nu[a] != 0.0 && (idx[a] < margin || idx[a] >= N - margin)) interior = false;
        if (interior) defect = std::max(defect, std::abs(comm[flat] - mu_nu * f[flat]));
        ++flat;
    } while (next_index(idx, N));
    return defect;
}

// ---------------------------------------------------------------------------
// Text format: header "n N L lambda", then one "re im" line per sample in
// row-major order.

inline void write_grid_function(std::ostream& os, const GridFunction& f) {
    char buf[128];
    const GridSpec& s = f.spec();
    std::snprintf(buf, sizeof buf, "%zu %zu %.17g %.17g\n", s.n(), s.N(), s.L(), s.lambda());
    os << buf;
    for (const auto& v : f.values()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.real(), v.imag());
        os << buf;
    }
}

inline GridFunction read_grid_function(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("missing grid header", 0);
    std::istringstream header(line);
    long long n = 0, N = 0;
    double L = 0.0, lambda = 0.0;
    if (!(header >> n >> N >> L >> lambda) || n < 1 || N < 2)
        throw ParseError("malformed grid header on line " + std::to_string(line_no), 0);
    std::string extra;
    if (header >> extra) throw ParseError("trailing data in grid header on line " + std::to_string(line_no), 0);
    const GridSpec spec(static_cast<std::size_t>(n), static_cast<std::size_t>(N), L, lambda);

    std::vector<Complex> values;
    values.reserve(spec.points());
    while (next_line()) {
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        if (!(row >> re >> im) || (row >> extra))
            throw ParseError("malformed sample on line " + std::to_string(line_no), 0);
        values.emplace_back(re, im);
    }
    return {spec, std::move(values)};
}

}  // namespace heis
