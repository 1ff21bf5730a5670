#pragma once

// One-stop verification battery: every structural fact the library leans on,
// re-derived at a given n and reported pass/fail/skipped with a
// counterexample payload on failure.  Reports serialize to stable JSON.

#include <string>
#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag {

enum class Depth { fast, full };

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string witness;  // populated only on failure
};

struct VerifyReport {
    int n = 0;
    Depth depth = Depth::fast;
    std::vector<CheckResult> checks;

    bool all_passed() const;  // skipped entries do not count against
};

// Runs the battery at this n.  `full` raises the exhaustive-search guards;
// checks whose guard is still exceeded are reported as skipped, never
// silently dropped.
VerifyReport verify_structure(int n, Depth depth);

// Swap-statistic histogram s(0..n-1) plus its structural facts; reused by
// verify_structure and the CLI table printer.
struct SwapNumberTable {
    int n = 0;
    std::vector<BigInt> counts;
};

SwapNumberTable swap_numbers(int n);

const char* to_string(CheckStatus status);
const char* to_string(Depth depth);

// Serialized with sorted keys and fixed indentation, so equal reports are
// byte-identical across runs.
std::string report_to_json(const VerifyReport& report, int indent = 2);

}  // namespace zigzag
