#pragma once

#include <string>
#include <vector>

namespace holes {

enum class SuiteLevel
{
    fast, ///< reduced corpus sizes
    full,
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> warnings;
    double seconds = 0;
    double limit_seconds = 0;
};

/// Runs the acceptance battery, or only the listed criteria. A criterion
/// passes when every check holds and it finishes within its time limit.
std::vector<CriterionResult> run_acceptance(SuiteLevel level, const std::vector<int>& only = {});

/// One line: status, id, name, detail and timing.
std::string format_result(const CriterionResult& result);

} // namespace holes
