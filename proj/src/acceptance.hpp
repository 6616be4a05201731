#pragma once
#include <string>
#include <vector>

namespace em {

struct AcceptanceResult {
    int id;
    bool pass;
    std::string detail;
};

// Criteria 1-10; each entry reports one pass/fail with a short reason.
std::vector<AcceptanceResult> run_acceptance();

} // namespace em
