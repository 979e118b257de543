#pragma once

#include <cstdint>

namespace nano {

/// Calls f(mask) for every r-element subset of {0, .., n-1}, in increasing
/// numeric order of the mask (Gosper's hack). Requires n < 64.
template <class F>
void for_each_subset_of_size(unsigned n, unsigned r, F&& f) {
    if (r > n) return;
    if (r == 0) {
        f(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    while (mask < limit) {
        f(mask);
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

}  // namespace nano
