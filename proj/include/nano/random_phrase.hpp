#pragma once

#include <cstddef>
#include <random>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"

namespace nano {

/// Uniformly shuffled Gauss phrase with `rank` letters spread over `n`
/// components (random cut points), random projections, and `singular`
/// randomly chosen singular letters.
CanonicalForm random_form(std::mt19937_64& rng, std::size_t rank, std::size_t n, const Alphabet& alphabet,
                          std::size_t singular = 0);

}  // namespace nano
