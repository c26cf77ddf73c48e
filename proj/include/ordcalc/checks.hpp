#pragma once

#include <string>
#include <vector>

namespace ordcalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures; // counterexample certificates
    double seconds = 0.0;
};

// Named property suites, runnable individually or as "all". The first
// eight names are the acceptance criteria.
std::vector<std::string> check_names();

// tool_path is the path of the command-line binary, used by the
// determinism check; empty disables that check's subprocess portion.
CheckResult run_check(const std::string& name, const std::string& tool_path = "");

std::vector<CheckResult> run_all_checks(const std::string& tool_path = "");

std::string check_results_json(const std::vector<CheckResult>& results);

} // namespace ordcalc
