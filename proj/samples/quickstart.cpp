// Tour of the library: products, the lattice normal form, the Weyl relation
// on a grid and the Siegel action.

#include <iostream>

#include "heis/heis.hpp"

int main() {
    using namespace heis;

    const RealElement g({1.0}, {2.0}, 3.0);
    std::cout << "g^-1        = " << text::format(inverse(g)) << "\n";
    std::cout << "g (-x,-y,-t) = " << text::format(mul(g, naive_inverse(g))) << "\n";

    const auto red = coset_reduce(RealElement({1.5}, {-0.25}, 2.3));
    std::cout << "coset rep   = " << text::format(red.rep) << " via gamma " << text::format(red.gamma) << "\n";

    std::cout << "b1 a1       = " << to_string(normalize_word(parse_word("b1 a1", 1))) << "\n";

    const GridSpec spec(1, 8);
    const GridFunction f = GridFunction::sample(spec, [](std::span<const double> w) { return Complex{w[0], 0.0}; });
    const QuantizedShift p{{1}};
    const QuantizedModulation q{{3}};
    const Complex alpha = weyl_alpha(p, q, spec);
    std::cout << "alpha       = " << text::format_complex(alpha) << ", Weyl deviation "
              << max_abs_diff(apply_U(q, apply_T(p, f)), apply_T(p, apply_U(q, apply_C(alpha, f)))) << "\n";

    const SiegelPoint x({Complex(0.5, 0.0)}, Complex(0.0, 1.0));
    const SiegelPoint y = act(ComplexElement({Complex(1.0, -1.0)}, 2.0), x);
    std::cout << "A_g(x)      = " << text::format(y) << ", height " << height(x) << " -> " << height(y) << "\n";
}
