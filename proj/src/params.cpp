#include "kaprekar/params.hpp"

#include <charconv>
#include <stdexcept>

namespace kaprekar {

std::string ParamVector::to_string() const {
    std::string out = "(" + std::to_string(alpha);
    if (beta) out += "," + std::to_string(*beta);
    out += ")";
    return out;
}

ParamVector parse_params(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (c != ' ') compact.push_back(c);
    if (compact.size() < 3 || compact.front() != '(' || compact.back() != ')')
        throw std::invalid_argument("parse_params: expected \"(a)\" or \"(a,b)\"");
    std::string_view body(compact.data() + 1, compact.size() - 2);
    auto read_int = [](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("parse_params: bad integer '" + std::string(tok) + "'");
        return value;
    };
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) return ParamVector(read_int(body));
    return ParamVector(read_int(body.substr(0, comma)), read_int(body.substr(comma + 1)));
}

bool is_feasible(const ParamVector& p, int width, int base) {
    if (p.alpha <= 0 || p.alpha > base - 1) return false;
    bool wants_beta = (width >= 4);
    if (wants_beta != p.beta.has_value()) return false;
    if (p.beta && (*p.beta < 0 || *p.beta > p.alpha)) return false;
    return true;
}

ParamVector extract_params(const DigitVector& n) {
    int w = n.width();
    if (w < 2 || w > 5)
        throw std::domain_error("extract_params: parameterization is defined for widths 2-5");
    if (is_excluded(n))
        throw std::domain_error("extract_params: " + n.to_string() +
                                " has all digits equal (alpha would be 0)");
    DigitVector s = order_desc(n);
    int alpha = s.digit(0) - s.digit(w - 1);
    if (w <= 3) return ParamVector(alpha);
    return ParamVector(alpha, s.digit(1) - s.digit(w - 2));
}

}  // namespace kaprekar
