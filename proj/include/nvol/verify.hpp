#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nvol {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    nlohmann::json checks = nlohmann::json::array();  // [{label, pass, value, expected, ...}]
};

/// Criterion ids for a suite name: paper-table, identities, convergence, all.
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);
nlohmann::json to_report(const std::vector<CriterionResult>& results);

}  // namespace nvol
