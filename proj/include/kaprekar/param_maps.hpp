#pragma once
// Arrangement-indexed transformation functions K_i: affine images of the
// class parameters, valid on domains of linear inequalities. One function
// per possible descending arrangement of the image's digits. Built-in
// tables cover widths 2-5 in base 10 and width 2 in any base >= 3, and an
// exhaustive oracle cross-checks every row.

#include "kaprekar/params.hpp"
#include "kaprekar/report.hpp"

namespace kaprekar {

/// c0 + c_alpha * alpha + c_beta * beta
struct AffineRule {
    long long c0 = 0;
    long long c_alpha = 0;
    long long c_beta = 0;

    long long eval(const ParamVector& p) const;
    bool operator==(const AffineRule&) const = default;
    std::string to_string() const;  // e.g. "2α - 10"
};

struct AffineImage {
    AffineRule alpha_rule;
    std::optional<AffineRule> beta_rule;

    ParamVector apply(const ParamVector& p) const;
    bool operator==(const AffineImage&) const = default;
    std::string to_string() const;  // "(10 - 2β, 2α - 10)"
};

enum class Relation { greater_equal, less_equal, equal };

/// c0 + c_alpha * alpha + c_beta * beta REL 0
struct LinearConstraint {
    long long c0 = 0;
    long long c_alpha = 0;
    long long c_beta = 0;
    Relation relation = Relation::greater_equal;

    bool satisfied(const ParamVector& p) const;
    bool operator==(const LinearConstraint&) const = default;
    std::string to_string() const;  // "α + β >= 11"
};

/// One symbolic transformation function. `domain` holds the digit-ordering
/// conditions; two-parameter functions additionally belong to either the
/// beta = 0 branch or the beta >= 1 branch, which full_domain() makes
/// explicit as a leading constraint.
struct KiFunction {
    std::string id;                 // "K1" .. "K26"
    std::string permutation_label;  // arrangement of the image digits, e.g. "P5 (3 1 4 2)"
    AffineImage image;
    std::vector<LinearConstraint> domain;
    bool beta_zero_branch = false;

    std::vector<LinearConstraint> full_domain() const;
    bool contains(const ParamVector& p) const;
};

struct KiTable {
    int width = 0;
    int base = 10;
    std::vector<KiFunction> functions;
    /// Notes on rows where a plausible alternate formulation is rejected by
    /// the exhaustive oracle. Surfaced by verify_table with the reasoning.
    std::vector<std::string> deviations;

    const KiFunction& function(const std::string& id) const;  // throws on unknown id
};

/// Supported shapes: (2, base >= 3), (3, 10), (4, 10), (5, 10).
KiTable builtin_table(int width, int base);

/// All feasible classes, sorted lexicographically.
std::vector<ParamVector> feasible_classes(int width, int base);

/// Canonical number of a class: digits (α, β, 0, ...) for widths 4-5,
/// (α, 0, ...) for the single-parameter widths.
DigitVector representative(const ParamVector& p, int width, int base);

/// The number a class steps to. Closed form of the routine on classes:
///   width 2:            (α-1, base-α)
///   width >= 3, β-less: (α-1, 9...9, 10-α)
///   widths 4-5, β > 0:  (α, β-1, [9,] 9-β, 10-α)
///   widths 4-5, β = 0:  (α-1, 9, 9, [9,] 10-α)
DigitVector class_image(const ParamVector& p, int width, int base);

/// Ids of every function whose domain contains p, in table order.
std::vector<std::string> classify(const KiTable& table, const ParamVector& p);

/// Evaluates f's affine image. Throws if p is outside f's domain.
ParamVector apply_map(const KiFunction& f, const ParamVector& p);

struct ClassStep {
    ParamVector image;
    std::string via;  // id of the applied function
};

/// Image of the first applicable function (all applicable functions agree on
/// their overlaps; verify_table checks that exhaustively).
ClassStep step_class_via(const KiTable& table, const ParamVector& p);
ParamVector step_class(const KiTable& table, const ParamVector& p);

/// Checks every feasible class against the brute-force oracle
/// extract_params(kaprekar_step(representative(p))): image mismatches,
/// classes with no applicable function, and disagreeing overlaps.
VerificationReport verify_table(const KiTable& table);

/// Number-level exhaustive check: step_class agrees with
/// extract_params(kaprekar_step(n)) for every non-excluded n.
VerificationReport verify_oracle_agreement(const KiTable& table);

/// Plain-text rendering, one row per function: id, arrangement, image,
/// domain. Suitable for human diffing.
std::string table_report(const KiTable& table);

}  // namespace kaprekar
