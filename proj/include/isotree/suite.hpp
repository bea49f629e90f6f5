#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotree {

struct CriterionOutcome {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs one acceptance criterion (1..7).
CriterionOutcome run_criterion(int id);

/// Runs every criterion, printing one PASS/FAIL line each to `out`.
std::vector<CriterionOutcome> run_acceptance_suite(std::ostream& out);

}  // namespace isotree
