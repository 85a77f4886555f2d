#include "kaprekar/report.hpp"

namespace kaprekar {

namespace {

void append_section(std::string& out, const std::string& label,
                    const std::vector<std::string>& items, bool show_empty) {
    if (items.empty()) {
        if (show_empty) out += "  " + label + ": none\n";
        return;
    }
    out += "  " + label + " (" + std::to_string(items.size()) + "):\n";
    for (const auto& item : items) out += "    - " + item + "\n";
}

}  // namespace

std::string VerificationReport::to_string() const {
    std::string out = title + "\n";
    out += "  cases checked: " + std::to_string(cases_checked) + "\n";
    append_section(out, "mismatches", mismatches, true);
    append_section(out, "totality violations", totality_violations, false);
    append_section(out, "overlap disagreements", overlap_disagreements, false);
    append_section(out, "documented deviations", deviations, false);
    append_section(out, "notes", notes, false);
    out += ok() ? "  result: OK\n" : "  result: FAILED\n";
    return out;
}

}  // namespace kaprekar
