#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kashina {

/// Outcome of one named identity check. Failures carry a witness describing
/// the first violating instance.
struct CheckResult {
    std::string check;
    bool passed = false;
    std::string witness; // empty when passed
};

struct ValidationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    void add(const std::string& check, bool passed, const std::string& witness = "") {
        checks.push_back({check, passed, passed ? std::string{} : witness});
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.passed) ++n;
        return n;
    }

    const CheckResult* find(const std::string& check) const {
        for (const auto& c : checks)
            if (c.check == check) return &c;
        return nullptr;
    }
};

} // namespace kashina
