#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nano {

/// Outcome of one acceptance criterion.
struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::string witness;  // counterexample in notation, empty when none
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// theta-phi, u-hat, gamma-degree, linking, arnold, moves
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name. Randomized parts draw from `seed` only.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 20240601);

/// Rank over the rationals of an integer matrix (rows of equal length).
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace nano
