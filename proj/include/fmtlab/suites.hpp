#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fmtlab
{
    struct SuiteOptions
    {
        /// Caps the largest family parameter a suite uses; 0 keeps the defaults.
        int size = 0;
        /// Worker threads for a suite's independent checks.
        int jobs = 1;
    };

    /// Line-oriented result: "FAIL <suite> <witness>" per counterexample,
    /// informational lines otherwise, in a deterministic order.
    struct SuiteReport
    {
        std::string name;
        bool passed = true;
        std::vector<std::string> lines;
    };

    auto suite_names() -> std::vector<std::string>;

    /// Throws std::invalid_argument for an unknown suite.
    auto run_suite(std::string_view name, const SuiteOptions & options = {}) -> SuiteReport;

    /// Runs the tasks on up to jobs threads; results keep task order.
    auto run_parallel(const std::vector<std::function<auto () -> std::vector<std::string>>> & tasks, int jobs)
        -> std::vector<std::vector<std::string>>;
}
