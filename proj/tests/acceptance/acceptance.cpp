// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <cstdlib>
#include <iostream>
#include <map>

#include "nano/verify.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    std::map<int, nano::CheckResult> by_criterion;
    for (const auto& suite : nano::suite_names()) {
        for (auto& check : nano::run_suite(suite, seed).checks) by_criterion.emplace(check.criterion, check);
    }
    int failures = 0;
    for (int criterion = 1; criterion <= 12; ++criterion) {
        auto it = by_criterion.find(criterion);
        if (it == by_criterion.end()) {
            std::cout << "[FAIL] criterion " << criterion << ": no check registered\n";
            ++failures;
            continue;
        }
        const auto& c = it->second;
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion << " (" << c.name << "): " << c.detail
                  << '\n';
        if (!c.witness.empty()) std::cout << "       witness: " << c.witness << '\n';
        failures += !c.passed;
    }
    std::cout << (12 - failures) << "/12 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
