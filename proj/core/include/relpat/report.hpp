#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relpat {

struct SuiteResult {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    double seconds = 0.0;
};

struct RunReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool all_passed() const noexcept;
};

RunReport run_report(std::uint64_t seed);

} // namespace relpat
