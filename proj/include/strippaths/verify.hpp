#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "strippaths/path.hpp"

namespace strippaths {

using PathMap = std::function<LatticePath(const LatticePath&, int)>;

struct VerifyOptions {
    /// Bounds for the suites that sweep every strip family A_{n,k}, B_{n,k}.
    std::size_t n_max = 12;
    int k_max = 5;
    /// Run independent (n, k) cells concurrently. Results are aggregated in sweep order.
    bool parallel = true;
    /// Maps under test; empty means the library's a_to_b / b_to_a.
    PathMap a_to_b;
    PathMap b_to_a;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    /// First failure in sweep order, starting with the offending path string when there is one.
    std::string counterexample;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool passed() const noexcept;
    const SuiteResult* first_failure() const noexcept;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument if k_max < 1 or n_max exceeds kMaxPathLength.
VerifyReport run_verification(const VerifyOptions& options);

/// "PASS <name> (<checks> checks)" or "FAIL <name>: <counterexample>", one line per suite.
std::string format_report(const VerifyReport& report);

}  // namespace strippaths
