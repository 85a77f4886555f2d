#include "kaprekar/absorbing.hpp"

#include <algorithm>
#include <stdexcept>

namespace kaprekar::absorbing {

bool ImageSet::contains(const DigitVector& n) const {
    return std::binary_search(members.begin(), members.end(), n);
}

std::string ImageSet::to_text() const {
    std::string out;
    for (const DigitVector& m : members) {
        out += m.to_string();
        out += '\n';
    }
    return out;
}

bool image_predicate(const DigitVector& n) {
    if (n.base() != 10 || (n.width() != 4 && n.width() != 5))
        throw std::domain_error("image_predicate: defined for widths 4-5, base 10");
    if (n.width() == 4) {
        int a = n.digit(0), b = n.digit(1), c = n.digit(2), d = n.digit(3);
        if (a + d == 10 && b + c == 8 && a >= b + 1) return true;
        return a + d == 9 && b == 9 && c == 9 && a <= 8;
    }
    int a = n.digit(0), b = n.digit(1), c = n.digit(2), d = n.digit(3), e = n.digit(4);
    if (a + e == 10 && c == 9 && b + d == 8 && a >= b + 1) return true;
    return b == 9 && c == 9 && d == 9 && a + e == 9 && a <= 8;
}

ImageSet enumerate_image_set(int width, int base) {
    if (width < 2 || width > 5)
        throw std::invalid_argument("enumerate_image_set: width must be 2-5");
    ImageSet set{width, base, {}};
    for_each_number(width, base, [&](const DigitVector& n) {
        if (is_excluded(n)) return;
        set.members.push_back(kaprekar_step(n));
    });
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()),
                      set.members.end());
    return set;
}

VerificationReport check_closure(const ImageSet& set) {
    VerificationReport report;
    report.title = "image-set closure, width " + std::to_string(set.width) + ", base " +
                   std::to_string(set.base);
    for (const DigitVector& m : set.members) {
        ++report.cases_checked;
        if (is_excluded(m)) {
            report.mismatches.push_back("member " + m.to_string() +
                                        " is a repdigit; the step map leaves the set there");
            continue;
        }
        DigitVector next = kaprekar_step(m);
        if (!set.contains(next))
            report.mismatches.push_back("step of member " + m.to_string() + " is " +
                                        next.to_string() + ", not a member");
    }
    return report;
}

VerificationReport check_predicate_equivalence(int width) {
    if (width != 4 && width != 5)
        throw std::domain_error("check_predicate_equivalence: widths 4-5 only");
    VerificationReport report;
    report.title = "B" + std::to_string(width) + " predicate vs enumerated image set";
    if (width == 5)
        report.deviations = {
            "width-5 membership of the (a, b, 9, 8-b, 10-a) form uses a >= b+1; the "
            "opposite orientation a <= b+1 admits numbers with no anti-image and is "
            "rejected by this exhaustive check."};
    ImageSet set = enumerate_image_set(width, 10);
    for_each_number(width, 10, [&](const DigitVector& n) {
        ++report.cases_checked;
        bool by_predicate = image_predicate(n);
        bool by_enumeration = set.contains(n);
        if (by_predicate && !by_enumeration)
            report.mismatches.push_back("predicate admits " + n.to_string() +
                                        " but it has no anti-image");
        if (!by_predicate && by_enumeration)
            report.mismatches.push_back("predicate misses the image " + n.to_string());
    });
    return report;
}

}  // namespace kaprekar::absorbing
