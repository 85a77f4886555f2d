#include "kaprekar/variants.hpp"

#include <stdexcept>
#include <utility>

namespace kaprekar::variants {

DigitVector transposition_step(const DigitVector& n) {
    if (is_excluded(n))
        throw std::domain_error("transposition_step: input " + n.to_string() +
                                " has all digits equal (excluded)");
    DigitVector x = order_desc(n);
    std::vector<int> swapped = x.digits();
    std::swap(swapped.front(), swapped.back());
    return subtract(x, DigitVector(std::move(swapped), n.base()));
}

DigitVector variant_fixed_point(int width, int base) {
    if (base != 10)
        throw std::domain_error("variant_fixed_point: defined for base 10");
    if (width < 3)
        throw std::domain_error(
            "variant_fixed_point: no balance point for width 2 (the process "
            "coincides with the routine there, which has none)");
    std::vector<int> digits(static_cast<std::size_t>(width), 9);
    digits.front() = 4;
    digits.back() = 5;
    return DigitVector(std::move(digits), base);
}

int variant_class_step(int alpha, int width, int base) {
    if (base != 10) throw std::domain_error("variant_class_step: defined for base 10");
    if (width < 3) throw std::domain_error("variant_class_step: width must be >= 3");
    if (alpha <= 0 || alpha > 9)
        throw std::domain_error("variant_class_step: alpha out of range (0, 9]");
    return alpha >= 6 ? alpha - 1 : 10 - alpha;
}

dynamics::ClassGraph variant_class_graph(int width, int base) {
    if (base != 10) throw std::domain_error("variant_class_graph: defined for base 10");
    if (width < 3) throw std::domain_error("variant_class_graph: width must be >= 3");
    dynamics::ClassGraph g;
    g.width = width;
    g.base = base;
    for (int a = 1; a <= 9; ++a) g.nodes.emplace_back(a);
    for (int a = 1; a <= 9; ++a) {
        int next = variant_class_step(a, width, base);
        g.successor.push_back(static_cast<std::size_t>(next - 1));
        g.via.push_back(a >= 6 ? "K1" : "K2");
    }
    return g;
}

}  // namespace kaprekar::variants
