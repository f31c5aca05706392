#pragma once

#include <string>
#include <vector>

namespace invg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Number of acceptance criteria.
inline constexpr int kCriteriaCount = 16;

std::string criterion_name(int id);
CriterionResult run_criterion(int id);
// Runs the listed criteria (all when empty), in ascending id order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

}  // namespace invg
