#pragma once
// Parametric classes: the (alpha) / (alpha, beta) invariants that determine
// a number's image under the routine.

#include <optional>

#include "kaprekar/digit_vector.hpp"

namespace kaprekar {

/// The parametric class of a number. alpha is the spread of the sorted
/// digits (largest minus smallest); beta, present for widths 4 and 5, is the
/// difference of the next-inner sorted pair. All numbers sharing a class
/// share their image.
struct ParamVector {
    int alpha = 0;
    std::optional<int> beta;

    ParamVector() = default;
    explicit ParamVector(int a) : alpha(a) {}
    ParamVector(int a, int b) : alpha(a), beta(b) {}

    bool operator==(const ParamVector&) const = default;
    auto operator<=>(const ParamVector&) const = default;

    std::string to_string() const;  // "(9,3)" or "(9)"
};

ParamVector parse_params(std::string_view text);

/// 0 < alpha <= base-1; beta present exactly for widths 4-5, 0 <= beta <= alpha.
bool is_feasible(const ParamVector& p, int width, int base);

/// Class of a non-excluded number of width 2-5. With digits sorted
/// descending, alpha = first - last; beta = second - second-to-last
/// (widths 4 and 5 only).
ParamVector extract_params(const DigitVector& n);

}  // namespace kaprekar
