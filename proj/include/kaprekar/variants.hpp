#pragma once
// Extreme-digit transposition process: like the routine, but the subtrahend
// is the sorted number with only its first and last digits swapped. Works
// for any width; for widths 2 and 3 it coincides with the routine itself.

#include "kaprekar/dynamics.hpp"

namespace kaprekar::variants {

/// X = order_desc(n); Y = X with extreme digits swapped; returns X - Y.
/// The image is always (α-1, 9...9, 10-α) where α = alpha_of(n).
DigitVector transposition_step(const DigitVector& n);

/// The balance point 4 9...9 5 (width-2 nines). Widths >= 3, base 10;
/// width 2 has no balance point, so it is rejected.
DigitVector variant_fixed_point(int width, int base = 10);

/// Class step on alpha: alpha-1 for alpha >= 6, 10-alpha otherwise.
/// Independent of the width (>= 3).
int variant_class_step(int alpha, int width, int base = 10);

/// Functional graph of the transposition class step (9 nodes, base 10);
/// identical in structure for every width >= 3.
dynamics::ClassGraph variant_class_graph(int width, int base = 10);

}  // namespace kaprekar::variants
