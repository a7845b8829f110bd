#pragma once

// Complex Heisenberg group C^n x R with
//
//   (z, t) . (z', t') = (z + z', t + t' + 2 Im sum_j z_j conj(z'_j))
//
// acting on the Siegel upper half-space U = {(w, sigma) : Im sigma > |w|^2}
// by the complex-affine maps
//
//   A_(z,t)(w, sigma) = (w + z, sigma + t + i|z|^2 + 2i sum_j w_j conj(z_j)).
//
// The height Im sigma - |w|^2 is invariant under every A_(z,t), so the action
// preserves U and its boundary; the dilation (w, sigma) -> (r w, r^2 sigma)
// scales it by r^2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "heis/error.hpp"

namespace heis {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

namespace detail {

inline bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

inline void require_same_cdim(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

/// sum_j a_j conj(b_j)
inline Complex hermitian(const ComplexVector& a, const ComplexVector& b) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
    return s;
}

inline double norm2(const ComplexVector& a) {
    double s = 0.0;
    for (const auto& v : a) s += std::norm(v);
    return s;
}

}  // namespace detail

class ComplexElement {
public:
    explicit ComplexElement(std::size_t n) : z_(n), t_(0.0) {
        if (n == 0) throw DimensionError("element needs n >= 1");
    }

    ComplexElement(ComplexVector z, double t) : z_(std::move(z)), t_(t) {
        if (z_.empty()) throw DimensionError("element needs n >= 1");
        if (!std::all_of(z_.begin(), z_.end(), detail::finite) || !std::isfinite(t_))
            throw ParameterError("element components must be finite");
    }

    std::size_t dim() const noexcept { return z_.size(); }
    const ComplexVector& z() const noexcept { return z_; }
    double t() const noexcept { return t_; }

    friend bool operator==(const ComplexElement&, const ComplexElement&) = default;

private:
    ComplexVector z_;
    double t_;
};

class SiegelPoint {
public:
    SiegelPoint(ComplexVector w, Complex sigma) : w_(std::move(w)), sigma_(sigma) {
        if (w_.empty()) throw DimensionError("point needs n >= 1");
        if (!std::all_of(w_.begin(), w_.end(), detail::finite) || !detail::finite(sigma_))
            throw ParameterError("point components must be finite");
    }

    std::size_t dim() const noexcept { return w_.size(); }
    const ComplexVector& w() const noexcept { return w_; }
    Complex sigma() const noexcept { return sigma_; }

    friend bool operator==(const SiegelPoint&, const SiegelPoint&) = default;

private:
    ComplexVector w_;
    Complex sigma_;
};

class ComplexDilation {
public:
    explicit ComplexDilation(double r) : r_(r) {
        if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("dilation factor must be positive and finite");
    }

    double r() const noexcept { return r_; }

private:
    double r_;
};

inline ComplexElement cmul(const ComplexElement& g, const ComplexElement& h) {
    detail::require_same_cdim(g.dim(), h.dim());
    ComplexVector z(g.dim());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = g.z()[j] + h.z()[j];
    return {std::move(z), g.t() + h.t() + 2.0 * detail::hermitian(g.z(), h.z()).imag()};
}

/// (-z, -t); a genuine inverse here because sum_j z_j conj(z_j) is real.
inline ComplexElement cinverse(const ComplexElement& g) {
    ComplexVector z(g.z());
    for (auto& v : z) v = -v;
    return {std::move(z), -g.t()};
}

inline ComplexElement cdilate(ComplexDilation d, const ComplexElement& g) {
    ComplexVector z(g.z());
    for (auto& v : z) v *= d.r();
    return {std::move(z), d.r() * d.r() * g.t()};
}

inline constexpr double boundary_tolerance = 1e-12;

/// Im sigma - |w|^2
inline double height(const SiegelPoint& p) { return p.sigma().imag() - detail::norm2(p.w()); }

enum class Region { Interior, Boundary, Outside };

inline Region classify(const SiegelPoint& p, double tol = boundary_tolerance) {
    const double h = height(p);
    if (h > tol) return Region::Interior;
    if (h < -tol) return Region::Outside;
    return Region::Boundary;
}

/// Member of the closed domain U ∪ ∂U.
inline bool in_closure(const SiegelPoint& p, double tol = boundary_tolerance) { return height(p) >= -tol; }

inline const char* to_string(Region r) {
    switch (r) {
        case Region::Interior: return "interior";
        case Region::Boundary: return "boundary";
        case Region::Outside: return "outside";
    }
    return "?";
}

/// A_(z,t)(w, sigma)
inline SiegelPoint act(const ComplexElement& g, const SiegelPoint& p) {
    detail::require_same_cdim(g.dim(), p.dim());
    ComplexVector w(p.dim());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = p.w()[j] + g.z()[j];
    const Complex i{0.0, 1.0};
    const Complex sigma = p.sigma() + g.t() + i * detail::norm2(g.z()) + 2.0 * i * detail::hermitian(p.w(), g.z());
    return {std::move(w), sigma};
}

/// Delta_r(w, sigma) = (r w, r^2 sigma)
inline SiegelPoint domain_dilate(ComplexDilation d, const SiegelPoint& p) {
    ComplexVector w(p.w());
    for (auto& v : w) v *= d.r();
    return {std::move(w), d.r() * d.r() * p.sigma()};
}

/// Largest componentwise deviation between two points.
inline double max_abs_diff(const SiegelPoint& a, const SiegelPoint& b) {
    detail::require_same_cdim(a.dim(), b.dim());
    double d = std::abs(a.sigma() - b.sigma());
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.w()[j] - b.w()[j]));
    return d;
}

inline double max_abs_diff(const ComplexElement& a, const ComplexElement& b) {
    detail::require_same_cdim(a.dim(), b.dim());
    double d = std::abs(a.t() - b.t());
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.z()[j] - b.z()[j]));
    return d;
}

/// Largest component magnitude of a point, at least 1.
inline double magnitude_scale(const SiegelPoint& p) {
    double m = std::max(1.0, std::abs(p.sigma()));
    for (const auto& v : p.w()) m = std::max(m, std::abs(v));
    return m;
}

inline constexpr double compose_tolerance = 1e-12;

/// Deviation between A_g(A_g'(p)) and A_(g g')(p), relative to max(1, magnitudes).
inline double act_compose_deviation(const ComplexElement& g, const ComplexElement& gp, const SiegelPoint& p) {
    const SiegelPoint nested = act(g, act(gp, p));
    const SiegelPoint direct = act(cmul(g, gp), p);
    const double scale = std::max(magnitude_scale(nested), magnitude_scale(direct));
    return max_abs_diff(nested, direct) / scale;
}

inline bool act_compose_check(const ComplexElement& g, const ComplexElement& gp, const SiegelPoint& p) {
    return act_compose_deviation(g, gp, p) <= compose_tolerance;
}

}  // namespace heis
