#include "kaprekar/param_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace kaprekar {

namespace {

long long beta_or_zero(const ParamVector& p) { return p.beta ? *p.beta : 0; }

// Renders c_alpha*α + c_beta*β + c0 with positive terms first: "10 - 2β".
std::string render_affine(long long c0, long long ca, long long cb) {
    struct Term {
        long long coef;
        const char* sym;
    };
    std::vector<Term> terms;
    if (ca != 0) terms.push_back({ca, "α"});
    if (cb != 0) terms.push_back({cb, "β"});
    if (c0 != 0 || terms.empty()) terms.push_back({c0, ""});
    std::stable_partition(terms.begin(), terms.end(),
                          [](const Term& t) { return t.coef > 0; });
    std::string out;
    for (const Term& t : terms) {
        long long mag = t.coef < 0 ? -t.coef : t.coef;
        if (out.empty()) {
            if (t.coef < 0) out += "-";
        } else {
            out += t.coef < 0 ? " - " : " + ";
        }
        if (mag != 1 || t.sym[0] == '\0') out += std::to_string(mag);
        out += t.sym;
    }
    return out;
}

}  // namespace

long long AffineRule::eval(const ParamVector& p) const {
    return c0 + c_alpha * p.alpha + c_beta * beta_or_zero(p);
}

std::string AffineRule::to_string() const { return render_affine(c0, c_alpha, c_beta); }

ParamVector AffineImage::apply(const ParamVector& p) const {
    int a = static_cast<int>(alpha_rule.eval(p));
    if (!beta_rule) return ParamVector(a);
    return ParamVector(a, static_cast<int>(beta_rule->eval(p)));
}

std::string AffineImage::to_string() const {
    std::string out = "(" + alpha_rule.to_string();
    if (beta_rule) out += ", " + beta_rule->to_string();
    return out + ")";
}

bool LinearConstraint::satisfied(const ParamVector& p) const {
    long long v = c0 + c_alpha * p.alpha + c_beta * beta_or_zero(p);
    switch (relation) {
        case Relation::greater_equal: return v >= 0;
        case Relation::less_equal: return v <= 0;
        case Relation::equal: return v == 0;
    }
    return false;
}

std::string LinearConstraint::to_string() const {
    // Variable terms on the left, the constant moved to the right.
    std::string lhs = render_affine(0, c_alpha, c_beta);
    const char* rel = relation == Relation::greater_equal
                          ? " >= "
                          : (relation == Relation::less_equal ? " <= " : " = ");
    return lhs + rel + std::to_string(-c0);
}

std::vector<LinearConstraint> KiFunction::full_domain() const {
    std::vector<LinearConstraint> all;
    if (image.beta_rule) {
        if (beta_zero_branch)
            all.push_back({0, 0, 1, Relation::equal});  // β = 0
        else
            all.push_back({-1, 0, 1, Relation::greater_equal});  // β >= 1
    }
    all.insert(all.end(), domain.begin(), domain.end());
    return all;
}

bool KiFunction::contains(const ParamVector& p) const {
    if (image.beta_rule.has_value() != p.beta.has_value()) return false;
    if (image.beta_rule) {
        if (beta_zero_branch != (*p.beta == 0)) return false;
    }
    return std::all_of(domain.begin(), domain.end(),
                       [&](const LinearConstraint& c) { return c.satisfied(p); });
}

const KiFunction& KiTable::function(const std::string& id) const {
    for (const KiFunction& f : functions)
        if (f.id == id) return f;
    throw std::invalid_argument("KiTable: unknown function id '" + id + "'");
}

std::vector<ParamVector> feasible_classes(int width, int base) {
    if (width < 2 || width > 5)
        throw std::invalid_argument("feasible_classes: width must be 2-5");
    std::vector<ParamVector> out;
    if (width <= 3) {
        for (int a = 1; a <= base - 1; ++a) out.emplace_back(a);
    } else {
        for (int a = 1; a <= base - 1; ++a)
            for (int b = 0; b <= a; ++b) out.emplace_back(a, b);
    }
    return out;
}

DigitVector representative(const ParamVector& p, int width, int base) {
    if (!is_feasible(p, width, base))
        throw std::domain_error("representative: class " + p.to_string() +
                                " is not feasible for width " + std::to_string(width));
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    digits[0] = p.alpha;
    if (p.beta) digits[1] = *p.beta;
    return DigitVector(std::move(digits), base);
}

DigitVector class_image(const ParamVector& p, int width, int base) {
    int a = p.alpha;
    if (a <= 0 || a > base - 1)
        throw std::domain_error("class_image: class " + p.to_string() +
                                " has alpha outside (0, base-1]");
    if (!p.beta) {
        // Single-parameter classes: the routine for widths 2-3, and the
        // transposition process for any width >= 3.
        if (width == 2) return DigitVector({a - 1, base - a}, base);
        if (base != 10)
            throw std::domain_error("class_image: widths >= 3 are defined for base 10");
        std::vector<int> digits(static_cast<std::size_t>(width), 9);
        digits.front() = a - 1;
        digits.back() = 10 - a;
        return DigitVector(std::move(digits), base);
    }
    if (base != 10 || (width != 4 && width != 5))
        throw std::domain_error("class_image: two-parameter classes need width 4-5, base 10");
    if (*p.beta < 0 || *p.beta > a)
        throw std::domain_error("class_image: class " + p.to_string() +
                                " has beta outside [0, alpha]");
    int b = *p.beta;
    if (b > 0) {
        if (width == 4) return DigitVector({a, b - 1, 9 - b, 10 - a}, 10);
        return DigitVector({a, b - 1, 9, 9 - b, 10 - a}, 10);
    }
    if (width == 4) return DigitVector({a - 1, 9, 9, 10 - a}, 10);
    return DigitVector({a - 1, 9, 9, 9, 10 - a}, 10);
}

std::vector<std::string> classify(const KiTable& table, const ParamVector& p) {
    if (!is_feasible(p, table.width, table.base))
        throw std::domain_error("classify: class " + p.to_string() + " is not feasible");
    std::vector<std::string> ids;
    for (const KiFunction& f : table.functions)
        if (f.contains(p)) ids.push_back(f.id);
    return ids;
}

ParamVector apply_map(const KiFunction& f, const ParamVector& p) {
    if (f.image.beta_rule.has_value() != p.beta.has_value())
        throw std::domain_error("apply_map: " + f.id + " and class " + p.to_string() +
                                " have mismatched parameter counts");
    if (!f.contains(p))
        throw std::domain_error("apply_map: class " + p.to_string() +
                                " is outside the domain of " + f.id);
    return f.image.apply(p);
}

ClassStep step_class_via(const KiTable& table, const ParamVector& p) {
    if (!is_feasible(p, table.width, table.base))
        throw std::domain_error("step_class: class " + p.to_string() + " is not feasible");
    for (const KiFunction& f : table.functions)
        if (f.contains(p)) return {f.image.apply(p), f.id};
    throw std::domain_error("step_class: no applicable function for class " + p.to_string());
}

ParamVector step_class(const KiTable& table, const ParamVector& p) {
    return step_class_via(table, p).image;
}

VerificationReport verify_table(const KiTable& table) {
    VerificationReport report;
    report.title = "K_i table vs oracle, width " + std::to_string(table.width) + ", base " +
                   std::to_string(table.base);
    report.deviations = table.deviations;
    for (const ParamVector& p : feasible_classes(table.width, table.base)) {
        ++report.cases_checked;
        std::vector<const KiFunction*> applicable;
        for (const KiFunction& f : table.functions)
            if (f.contains(p)) applicable.push_back(&f);

        DigitVector image = kaprekar_step(representative(p, table.width, table.base));
        if (is_excluded(image)) {
            // Image is a repdigit, outside the reference set (odd-base pivot
            // class); there is legitimately no applicable function.
            if (applicable.empty()) {
                report.totality_violations.push_back(
                    "class " + p.to_string() + ": image " + image.to_string() +
                    " is a repdigit, outside the reference set; no applicable function");
            } else {
                report.mismatches.push_back("class " + p.to_string() + ": image " +
                                            image.to_string() +
                                            " is a repdigit but functions still apply");
            }
            continue;
        }
        ParamVector oracle = extract_params(image);
        if (applicable.empty()) {
            report.totality_violations.push_back("class " + p.to_string() +
                                                 ": no applicable function; oracle image " +
                                                 oracle.to_string());
            continue;
        }
        for (const KiFunction* f : applicable) {
            ParamVector predicted = f->image.apply(p);
            if (predicted != oracle)
                report.mismatches.push_back(f->id + " at " + p.to_string() + ": table gives " +
                                            predicted.to_string() + ", oracle gives " +
                                            oracle.to_string());
        }
        for (std::size_t i = 1; i < applicable.size(); ++i) {
            ParamVector first = applicable[0]->image.apply(p);
            ParamVector other = applicable[i]->image.apply(p);
            if (first != other)
                report.overlap_disagreements.push_back(
                    applicable[0]->id + " and " + applicable[i]->id + " disagree at " +
                    p.to_string() + ": " + first.to_string() + " vs " + other.to_string());
        }
    }
    return report;
}

VerificationReport verify_oracle_agreement(const KiTable& table) {
    VerificationReport report;
    report.title = "step_class vs oracle over all numbers, width " +
                   std::to_string(table.width) + ", base " + std::to_string(table.base);
    for_each_number(table.width, table.base, [&](const DigitVector& n) {
        if (is_excluded(n)) return;
        ++report.cases_checked;
        ParamVector p = extract_params(n);
        DigitVector next = kaprekar_step(n);
        if (is_excluded(next)) {
            report.notes.push_back("trajectory of " + n.to_string() +
                                   " leaves the reference set at " + next.to_string());
            return;
        }
        ParamVector oracle = extract_params(next);
        ParamVector predicted;
        try {
            predicted = step_class(table, p);
        } catch (const std::domain_error& e) {
            report.mismatches.push_back(std::string(e.what()) + " (from " + n.to_string() +
                                        ")");
            return;
        }
        if (predicted != oracle)
            report.mismatches.push_back("class " + p.to_string() + " of " + n.to_string() +
                                        ": step_class gives " + predicted.to_string() +
                                        ", oracle gives " + oracle.to_string());
    });
    return report;
}

std::string table_report(const KiTable& table) {
    std::string out = "K_i functions, width " + std::to_string(table.width) + ", base " +
                      std::to_string(table.base) + " (" +
                      std::to_string(table.functions.size()) + " functions)\n";
    bool two_param = table.width >= 4;
    int section = 0;  // 0 = none yet, 1 = β > 0, 2 = β = 0
    for (const KiFunction& f : table.functions) {
        if (two_param) {
            int wanted = f.beta_zero_branch ? 2 : 1;
            if (section != wanted) {
                out += f.beta_zero_branch ? "  -- β = 0 --\n" : "  -- β > 0 --\n";
                section = wanted;
            }
        }
        out += "  " + f.id;
        out.append(f.id.size() < 4 ? 4 - f.id.size() : 1, ' ');
        out += f.permutation_label;
        out.append(f.permutation_label.size() < 16 ? 16 - f.permutation_label.size() : 1, ' ');
        out += f.image.to_string() + "   ";
        for (std::size_t i = 0; i < f.domain.size(); ++i) {
            if (i) out += ", ";
            out += f.domain[i].to_string();
        }
        out += "\n";
    }
    for (const std::string& d : table.deviations) out += "  note: " + d + "\n";
    return out;
}

}  // namespace kaprekar
