#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kaprekar {

/// Outcome of an exhaustive conformance check. Mismatches, totality
/// violations and overlap disagreements fail the check; deviations are
/// documented, accepted differences and do not.
struct VerificationReport {
    std::string title;
    std::size_t cases_checked = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> totality_violations;
    std::vector<std::string> overlap_disagreements;
    std::vector<std::string> deviations;
    std::vector<std::string> notes;

    bool ok() const {
        return mismatches.empty() && totality_violations.empty() &&
               overlap_disagreements.empty();
    }
    std::string to_string() const;
};

}  // namespace kaprekar
