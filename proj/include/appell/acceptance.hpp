#pragma once

#include <string>
#include <vector>

namespace appell::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// one line per sub-check or finding
    std::vector<std::string> details;
};

/// Criteria 1 .. 10 at their default orders; each is evaluated
/// independently and exceptions are recorded as failures.
std::vector<CriterionResult> run_all();

CriterionResult run_one(int id);

/// "PASS [n] title" or "FAIL [n] title", then indented details.
std::string format(const CriterionResult& r, bool with_details = true);

} // namespace appell::acceptance
