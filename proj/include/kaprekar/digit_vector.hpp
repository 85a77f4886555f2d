#pragma once
// Exact fixed-width digit-vector arithmetic in an arbitrary radix.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kaprekar {

/// A fixed-width sequence of digits in a given radix, most significant first.
/// Every digit lies in [0, base); width and base are fixed at construction.
/// Equality is digit-sequence equality: 0001 != 1000.
class DigitVector {
public:
    DigitVector(std::vector<int> digits, int base);

    int base() const { return base_; }
    int width() const { return static_cast<int>(digits_.size()); }
    int digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& digits() const { return digits_; }

    bool operator==(const DigitVector&) const = default;
    auto operator<=>(const DigitVector&) const = default;

    /// "0999" for base <= 10; dot-separated decimal values otherwise ("53.99").
    std::string to_string() const;

private:
    int base_;
    std::vector<int> digits_;
};

/// Builds a width-digit number, left-padding with zeros.
DigitVector make_number(const std::vector<int>& digits, int base, int width);

/// Parses the format produced by DigitVector::to_string. The two-argument
/// form takes the width from the text; the three-argument form left-pads.
DigitVector parse_number(std::string_view text, int base);
DigitVector parse_number(std::string_view text, int base, int width);

/// Digits sorted in descending order. Idempotent.
DigitVector order_desc(const DigitVector& n);

/// True iff all digits are equal (repdigits, including zero). These numbers
/// are outside the reference set: the step map would send them to zero.
bool is_excluded(const DigitVector& n);

int digit_sum(const DigitVector& n);

/// Largest digit minus smallest digit.
int alpha_of(const DigitVector& n);

/// Positional subtraction with borrow propagation; requires x >= y.
DigitVector subtract(const DigitVector& x, const DigitVector& y);

/// One round of the routine: sort digits descending (X), reverse (Y),
/// return X - Y. Throws on excluded input.
DigitVector kaprekar_step(const DigitVector& n);

/// Visits every width-digit vector in the given base, in ascending order.
template <typename F>
void for_each_number(int width, int base, F&& fn) {
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    while (true) {
        fn(DigitVector(digits, base));
        int i = width - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == base - 1) {
            digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
    }
}

}  // namespace kaprekar
