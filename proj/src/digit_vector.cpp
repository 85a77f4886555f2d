#include "kaprekar/digit_vector.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kaprekar {

DigitVector::DigitVector(std::vector<int> digits, int base)
    : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw std::invalid_argument("DigitVector: base must be >= 2");
    if (digits_.size() < 2) throw std::invalid_argument("DigitVector: width must be >= 2");
    for (int d : digits_) {
        if (d < 0 || d >= base_)
            throw std::invalid_argument("DigitVector: digit " + std::to_string(d) +
                                        " out of range for base " + std::to_string(base_));
    }
}

std::string DigitVector::to_string() const {
    std::string out;
    if (base_ <= 10) {
        out.reserve(digits_.size());
        for (int d : digits_) out.push_back(static_cast<char>('0' + d));
    } else {
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (i) out.push_back('.');
            out += std::to_string(digits_[i]);
        }
    }
    return out;
}

DigitVector make_number(const std::vector<int>& digits, int base, int width) {
    if (width < 2) throw std::invalid_argument("make_number: width must be >= 2");
    if (digits.size() > static_cast<std::size_t>(width))
        throw std::invalid_argument("make_number: sequence longer than width");
    std::vector<int> padded(static_cast<std::size_t>(width), 0);
    std::copy(digits.begin(), digits.end(),
              padded.begin() + (static_cast<std::size_t>(width) - digits.size()));
    return DigitVector(std::move(padded), base);
}

namespace {

std::vector<int> parse_digits(std::string_view text, int base) {
    std::vector<int> digits;
    if (text.empty()) throw std::invalid_argument("parse_number: empty input");
    if (base <= 10) {
        for (char c : text) {
            if (c < '0' || c >= '0' + base)
                throw std::invalid_argument("parse_number: invalid digit '" +
                                            std::string(1, c) + "'");
            digits.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view tok = text.substr(pos, dot == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : dot - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("parse_number: invalid digit token '" +
                                            std::string(tok) + "'");
            digits.push_back(value);
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    }
    return digits;
}

}  // namespace

DigitVector parse_number(std::string_view text, int base) {
    return DigitVector(parse_digits(text, base), base);
}

DigitVector parse_number(std::string_view text, int base, int width) {
    return make_number(parse_digits(text, base), base, width);
}

DigitVector order_desc(const DigitVector& n) {
    std::vector<int> digits = n.digits();
    std::sort(digits.begin(), digits.end(), std::greater<int>());
    return DigitVector(std::move(digits), n.base());
}

bool is_excluded(const DigitVector& n) {
    const auto& d = n.digits();
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
}

int digit_sum(const DigitVector& n) {
    const auto& d = n.digits();
    return std::accumulate(d.begin(), d.end(), 0);
}

int alpha_of(const DigitVector& n) {
    auto [lo, hi] = std::minmax_element(n.digits().begin(), n.digits().end());
    return *hi - *lo;
}

DigitVector subtract(const DigitVector& x, const DigitVector& y) {
    if (x.base() != y.base() || x.width() != y.width())
        throw std::invalid_argument("subtract: mismatched base or width");
    std::vector<int> out(static_cast<std::size_t>(x.width()), 0);
    int borrow = 0;
    for (int i = x.width() - 1; i >= 0; --i) {
        int d = x.digit(i) - y.digit(i) - borrow;
        if (d < 0) {
            d += x.base();
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[static_cast<std::size_t>(i)] = d;
    }
    if (borrow != 0) throw std::domain_error("subtract: minuend smaller than subtrahend");
    return DigitVector(std::move(out), x.base());
}

DigitVector kaprekar_step(const DigitVector& n) {
    if (is_excluded(n))
        throw std::domain_error("kaprekar_step: input " + n.to_string() +
                                " has all digits equal (excluded)");
    DigitVector x = order_desc(n);
    std::vector<int> rev(x.digits().rbegin(), x.digits().rend());
    return subtract(x, DigitVector(std::move(rev), n.base()));
}

}  // namespace kaprekar
