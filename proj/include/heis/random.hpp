#pragma once

// Reproducible sampling for the property checks.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not (their algorithms are left to
// the library), so the mappings to doubles and integers are done here:
//   uniform(a, b)  = a + (b - a) * (x >> 11) * 2^-53
//   integer(lo,hi) = lo + x mod (hi - lo + 1)

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "heis/lattice.hpp"

namespace heis {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [a, b).
    double uniform(double a, double b) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }

    /// Uniform in [lo, hi]; the modulo bias is below 2^-40 for the ranges used here.
    Int integer(Int lo, Int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<Int>(next() % span);
    }

    std::vector<double> uniform_vector(std::size_t n, double a, double b) {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform(a, b);
        return v;
    }

    std::vector<Int> integer_vector(std::size_t n, Int lo, Int hi) {
        std::vector<Int> v(n);
        for (auto& x : v) x = integer(lo, hi);
        return v;
    }

    /// Uniform in the closed disk of radius r.
    std::complex<double> in_disk(double r) {
        const double rho = r * std::sqrt(uniform(0.0, 1.0));
        const double theta = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(rho, theta);
    }

    /// Real and imaginary parts uniform in [a, b).
    std::complex<double> in_box(double a, double b) { return {uniform(a, b), uniform(a, b)}; }

private:
    std::mt19937_64 engine_;
};

}  // namespace heis
