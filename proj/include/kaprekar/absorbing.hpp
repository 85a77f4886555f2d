#pragma once
// Absorbing sets B_w: the exact image sets of the step map, a digit-shape
// membership predicate for widths 4-5, and the exhaustive equivalence check
// between the two.

#include "kaprekar/digit_vector.hpp"
#include "kaprekar/report.hpp"

namespace kaprekar::absorbing {

/// The exact image set {K(n) : n non-excluded}, deduplicated and sorted.
/// Closed under the step map.
struct ImageSet {
    int width = 0;
    int base = 10;
    std::vector<DigitVector> members;

    bool contains(const DigitVector& n) const;
    std::string to_text() const;  // newline-delimited digit strings
};

/// Membership in B_w by digit shape, widths 4-5, base 10. Tests the digit
/// sequence exactly as the step map produces it (membership is not
/// permutation-closed). A number is an image iff either
///   width 4: (a, b, 8-b, 10-a) with a >= b+1, or (a, 9, 9, 9-a) with a <= 8
///   width 5: (a, b, 9, 8-b, 10-a) with a >= b+1, or (a, 9, 9, 9, 9-a) with a <= 8
/// In both cases the first form has an anti-image of class (a, b+1) and the
/// second one of class (a+1, 0).
bool image_predicate(const DigitVector& n);

ImageSet enumerate_image_set(int width, int base);

/// Every member's image must again be a member.
VerificationReport check_closure(const ImageSet& set);

/// Compares {n : image_predicate(n)} with the enumerated image set; both
/// difference sets are reported (expected empty). Widths 4-5, base 10.
VerificationReport check_predicate_equivalence(int width);

}  // namespace kaprekar::absorbing
