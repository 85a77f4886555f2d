// Built-in K_i tables. Each row is one descending arrangement of the image
// digits; its existence conditions are the inequalities that force that
// arrangement. Every row is checked against the brute-force oracle by
// verify_table (and by the test suite, exhaustively).

#include <stdexcept>

#include "kaprekar/param_maps.hpp"

namespace kaprekar {

namespace {

using C = LinearConstraint;
constexpr Relation GE = Relation::greater_equal;
constexpr Relation LE = Relation::less_equal;
constexpr Relation EQ = Relation::equal;

C alpha_ge(long long k) { return {-k, 1, 0, GE}; }
C alpha_le(long long k) { return {-k, 1, 0, LE}; }
C beta_ge(long long k) { return {-k, 0, 1, GE}; }
C beta_le(long long k) { return {-k, 0, 1, LE}; }
C sum_ge(long long k) { return {-k, 1, 1, GE}; }    // α + β >= k
C sum_le(long long k) { return {-k, 1, 1, LE}; }
C diff_ge(long long k) { return {-k, 1, -1, GE}; }  // α - β >= k
C diff_le(long long k) { return {-k, 1, -1, LE}; }
C alpha_eq(long long k) { return {-k, 1, 0, EQ}; }
C beta_eq(long long k) { return {-k, 0, 1, EQ}; }

KiFunction two_param(std::string id, std::string label, AffineRule a, AffineRule b,
                     std::vector<LinearConstraint> dom, bool beta_zero = false) {
    return {std::move(id), std::move(label), {a, b}, std::move(dom), beta_zero};
}

KiFunction one_param(std::string id, std::string label, AffineRule a,
                     std::vector<LinearConstraint> dom) {
    return {std::move(id), std::move(label), {a, std::nullopt}, std::move(dom), false};
}

KiTable width4_table() {
    KiTable t{4, 10, {}, {}};
    t.functions = {
        two_param("K1", "P1 (1 2 3 4)", {-10, 2, 0}, {-10, 0, 2}, {diff_ge(1), beta_ge(5)}),
        two_param("K2", "P2 (1 3 2 4)", {-10, 2, 0}, {10, 0, -2},
                  {alpha_ge(6), beta_le(5), sum_ge(11)}),
        two_param("K5", "P5 (3 1 4 2)", {10, 0, -2}, {-10, 2, 0}, {alpha_ge(5), sum_le(9)}),
        two_param("K6", "P6 (3 4 1 2)", {10, 0, -2}, {10, -2, 0}, {alpha_le(5), diff_ge(1)}),
        two_param("K9", "P9 (1 2 4 3)", {-9, 1, 1}, {-11, 1, 1}, {diff_le(1), sum_ge(11)}),
        two_param("K10", "P10 (1 4 2 3)", {-9, 1, 1}, {11, -1, -1},
                  {alpha_ge(5), beta_ge(5), sum_le(11)}),
        two_param("K13", "P13 (4 1 3 2)", {11, -1, -1}, {-9, 1, 1},
                  {alpha_le(5), beta_le(5), sum_ge(9)}),
        two_param("K14", "P14 (4 3 1 2)", {11, -1, -1}, {9, -1, -1},
                  {diff_ge(0), diff_le(1), sum_le(9)}),
        two_param("K17", "P17 (1 3 4 2)", {1, 1, -1}, {-1, 1, -1},
                  {diff_ge(1), sum_ge(9), sum_le(11)}),
        two_param("K18", "P18 (1 4 3 2)", {1, 1, -1}, {1, -1, 1},
                  {alpha_ge(5), beta_le(5), diff_ge(0), diff_le(1)}),
        two_param("K21", "P21 (4 1 2 3)", {1, -1, 1}, {1, 1, -1}, {alpha_eq(5), beta_eq(5)}),
        two_param("K25", "P25 (1 2)", {-1, 1, 0}, {10, -1, 0}, {alpha_ge(6), alpha_le(9)},
                  true),
        two_param("K26", "P26 (2 1)", {10, -1, 0}, {-1, 1, 0}, {alpha_ge(1), alpha_le(5)},
                  true),
    };
    return t;
}

// Width 5: the sorted image always leads with a 9, so alpha' = 9 - (last
// sorted digit) and beta' = (second sorted digit) - (fourth sorted digit).
// Same arrangements and existence conditions as width 4, different images.
KiTable width5_table() {
    KiTable t{5, 10, {}, {}};
    t.functions = {
        two_param("K1", "P1 (1 2 3 4)", {-1, 1, 0}, {-9, 1, 1},
                  {diff_ge(1), beta_ge(5), beta_le(8)}),
        two_param("K2", "P2 (1 3 2 4)", {-1, 1, 0}, {1, 1, -1},
                  {alpha_ge(6), beta_ge(2), beta_le(5), sum_ge(11)}),
        two_param("K5", "P5 (3 1 4 2)", {10, 0, -1}, {-1, 1, -1}, {alpha_ge(5), sum_le(9)}),
        two_param("K6", "P6 (3 4 1 2)", {10, 0, -1}, {9, -1, -1}, {alpha_le(5), diff_ge(1)}),
        two_param("K9", "P9 (1 2 4 3)", {0, 0, 1}, {-10, 2, 0}, {diff_le(1), sum_ge(11)}),
        two_param("K10", "P10 (1 4 2 3)", {0, 0, 1}, {1, 1, -1},
                  {alpha_ge(5), beta_ge(5), sum_le(11)}),
        two_param("K13", "P13 (4 1 3 2)", {10, 0, -1}, {1, -1, 1},
                  {alpha_le(5), beta_le(5), sum_ge(9)}),
        two_param("K14", "P14 (4 3 1 2)", {10, 0, -1}, {10, -2, 0},
                  {diff_ge(0), diff_le(1), sum_le(9)}),
        two_param("K17", "P17 (1 3 4 2)", {10, 0, -1}, {-10, 2, 0},
                  {diff_ge(1), sum_ge(9), sum_le(11)}),
        two_param("K18", "P18 (1 4 3 2)", {10, 0, -1}, {-9, 1, 1},
                  {alpha_ge(5), beta_le(5), diff_ge(0), diff_le(1)}),
        two_param("K21", "P21 (4 1 2 3)", {0, 0, 1}, {11, -1, -1}, {alpha_eq(5), beta_eq(5)}),
        two_param("K25", "P25 (1 2)", {-1, 1, 0}, {10, -1, 0}, {alpha_ge(6), alpha_le(9)},
                  true),
        two_param("K26", "P26 (2 1)", {10, -1, 0}, {-1, 1, 0}, {alpha_ge(1), alpha_le(5)},
                  true),
    };
    t.deviations = {
        "K25 domain uses 6 <= α <= 9: with a strict lower bound (6 < α) class (6,0) "
        "has no applicable function, while its oracle image is (5,4) = K25(6,0)."};
    return t;
}

KiTable width3_table() {
    KiTable t{3, 10, {}, {}};
    t.functions = {
        one_param("K1", "P12 (1 2)", {-1, 1, 0}, {alpha_ge(6), alpha_le(9)}),
        one_param("K2", "P21 (2 1)", {10, -1, 0}, {alpha_ge(1), alpha_le(5)}),
    };
    return t;
}

// Width 2, any base b: the image of class α is (α-1, b-α), so
// α' = |2α - (b+1)|. The pivot 2α = b+1 can only land on an integer when b
// is odd; that class's image is then a repdigit, outside the reference set,
// and neither branch covers it.
KiTable width2_table(int base) {
    KiTable t{2, base, {}, {}};
    std::vector<LinearConstraint> k1dom, k2dom;
    if (base % 2 == 0) {
        k1dom = {alpha_ge(base / 2 + 1), alpha_le(base - 1)};
        k2dom = {alpha_ge(1), alpha_le(base / 2)};
    } else {
        k1dom = {C{-(base + 2LL), 2, 0, GE}, alpha_le(base - 1)};  // 2α > b+1
        k2dom = {alpha_ge(1), C{-static_cast<long long>(base), 2, 0, LE}};  // 2α < b+1
    }
    t.functions = {
        one_param("K1", "P12 (1 2)", {-(base + 1LL), 2, 0}, std::move(k1dom)),
        one_param("K2", "P21 (2 1)", {base + 1LL, -2, 0}, std::move(k2dom)),
    };
    return t;
}

}  // namespace

KiTable builtin_table(int width, int base) {
    if (width == 2 && base >= 3) return width2_table(base);
    if (base == 10) {
        if (width == 3) return width3_table();
        if (width == 4) return width4_table();
        if (width == 5) return width5_table();
    }
    throw std::invalid_argument("builtin_table: unsupported (width, base) = (" +
                                std::to_string(width) + ", " + std::to_string(base) + ")");
}

}  // namespace kaprekar
