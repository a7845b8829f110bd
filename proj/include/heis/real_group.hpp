#pragma once

// Real Heisenberg group H_n(R) = R^n x R^n x R with
//
//   (x, y, t) . (x', y', t') = (x + x', y + y', t + t' + x' . y)
//
// The inverse forced by this law is (-x, -y, -t + x . y). The naive
// (-x, -y, -t) only works when x . y = 0; naive_inverse() keeps it around so
// the discrepancy stays testable.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "heis/error.hpp"
#include "heis/lattice.hpp"

namespace heis {

class RealElement {
public:
    /// Identity (0, 0, 0) of H_n(R).
    explicit RealElement(std::size_t n) : x_(n, 0.0), y_(n, 0.0), t_(0.0) {
        if (n == 0) throw DimensionError("element needs n >= 1");
    }

    RealElement(std::vector<double> x, std::vector<double> y, double t)
        : x_(std::move(x)), y_(std::move(y)), t_(t) {
        if (x_.empty()) throw DimensionError("element needs n >= 1");
        if (x_.size() != y_.size())
            throw DimensionError("x and y blocks differ in length: " + std::to_string(x_.size()) + " vs " +
                                 std::to_string(y_.size()));
        for (std::size_t i = 0; i < x_.size(); ++i)
            if (!std::isfinite(x_[i]) || !std::isfinite(y_[i]))
                throw ParameterError("element components must be finite");
        if (!std::isfinite(t_)) throw ParameterError("element components must be finite");
    }

    std::size_t dim() const noexcept { return x_.size(); }
    const std::vector<double>& x() const noexcept { return x_; }
    const std::vector<double>& y() const noexcept { return y_; }
    double t() const noexcept { return t_; }

    friend bool operator==(const RealElement&, const RealElement&) = default;

private:
    std::vector<double> x_;
    std::vector<double> y_;
    double t_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline RealElement mul(const RealElement& g, const RealElement& h) {
    require_same_dim(g.dim(), h.dim());
    const std::size_t n = g.dim();
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = g.x()[i] + h.x()[i];
        y[i] = g.y()[i] + h.y()[i];
    }
    return {std::move(x), std::move(y), g.t() + h.t() + dot(h.x(), g.y())};
}

inline RealElement inverse(const RealElement& g) {
    const std::size_t n = g.dim();
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = -g.x()[i];
        y[i] = -g.y()[i];
    }
    return {std::move(x), std::move(y), -g.t() + dot(g.x(), g.y())};
}

/// (-x, -y, -t). Not an inverse under mul(): g . naive_inverse(g) = (0, 0, -x . y).
inline RealElement naive_inverse(const RealElement& g) {
    const std::size_t n = g.dim();
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = -g.x()[i];
        y[i] = -g.y()[i];
    }
    return {std::move(x), std::move(y), -g.t()};
}

/// Scale factor r > 0 of the dilation (x, y, t) -> (r x, r y, r^2 t).
class Dilation {
public:
    explicit Dilation(double r) : r_(r) {
        if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("dilation factor must be positive and finite");
    }

    double r() const noexcept { return r_; }

private:
    double r_;
};

inline Dilation compose(Dilation a, Dilation b) { return Dilation(a.r() * b.r()); }

inline RealElement dilate(Dilation d, const RealElement& g) {
    const double r = d.r();
    std::vector<double> x(g.x()), y(g.y());
    for (auto& v : x) v *= r;
    for (auto& v : y) v *= r;
    return {std::move(x), std::move(y), r * r * g.t()};
}

/// Inclusion H_n(Z) -> H_n(R).
inline RealElement embed(const LatticeElement& g) {
    std::vector<double> x(g.k().begin(), g.k().end());
    std::vector<double> y(g.l().begin(), g.l().end());
    return {std::move(x), std::move(y), static_cast<double>(g.m())};
}

struct CosetReduction {
    LatticeElement gamma;
    RealElement rep;
};

namespace detail {

inline double clamp_unit(double v) {
    if (v < 0.0) return 0.0;
    if (v >= 1.0) return std::nextafter(1.0, 0.0);
    return v;
}

inline Int floor_to_int(double v) {
    const double f = std::floor(v);
    if (!(f >= -9.2e18 && f <= 9.2e18)) throw OverflowError("coset translator exceeds 64-bit range");
    return static_cast<Int>(f);
}

}  // namespace detail

/// Representative of the coset H_n(Z) g in the half-open cube [0, 1)^(2n+1).
///
/// With gamma = (k, l, m) acting on the left, gamma . g = (x + k, y + l,
/// t + m + x . l), so k and l are fixed componentwise and m last. When the
/// exact value lies in [0, 1) but rounds to 1.0 the component is clamped to
/// the largest double below 1.
inline CosetReduction coset_reduce(const RealElement& g) {
    const std::size_t n = g.dim();
    std::vector<Int> k(n), l(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = -detail::floor_to_int(g.x()[i]);
        l[i] = -detail::floor_to_int(g.y()[i]);
    }
    double xl = 0.0;
    for (std::size_t i = 0; i < n; ++i) xl += g.x()[i] * static_cast<double>(l[i]);
    const Int m = -detail::floor_to_int(g.t() + xl);

    LatticeElement gamma(std::move(k), std::move(l), m);
    const RealElement raw = mul(embed(gamma), g);
    std::vector<double> x(raw.x()), y(raw.y());
    for (auto& v : x) v = detail::clamp_unit(v);
    for (auto& v : y) v = detail::clamp_unit(v);
    return {std::move(gamma), RealElement(std::move(x), std::move(y), detail::clamp_unit(raw.t()))};
}

inline bool in_fundamental_domain(const RealElement& g) {
    auto unit = [](double v) { return v >= 0.0 && v < 1.0; };
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!unit(g.x()[i]) || !unit(g.y()[i])) return false;
    return unit(g.t());
}

/// Largest componentwise absolute difference.
inline double max_abs_diff(const RealElement& a, const RealElement& b) {
    require_same_dim(a.dim(), b.dim());
    double d = std::abs(a.t() - b.t());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        d = std::max(d, std::abs(a.x()[i] - b.x()[i]));
        d = std::max(d, std::abs(a.y()[i] - b.y()[i]));
    }
    return d;
}

}  // namespace heis
