#include <cstdlib>
#include <iostream>

#include "holes/acceptance.hpp"

int main()
{
    bool ok = true;
    for (const auto& result : holes::run_acceptance(holes::SuiteLevel::full)) {
        std::cout << holes::format_result(result) << std::endl;
        ok = ok && result.passed;
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
