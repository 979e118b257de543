#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/formal_sum.hpp"
#include "nano/nanophrase.hpp"

namespace nano {

/// Largest rank for which the full 2^rank subphrase set is enumerated.
inline constexpr std::size_t kDefaultMaxRank = 24;

using PhraseSum = FormalSum<CanonicalForm>;
using ClassSum = FormalSum<CyclicClass>;

/// All 2^rank subphrases (q obtained by deleting letter pairs), by keep-mask
/// over the canonical letter order from the full mask down to 0: p comes
/// first, the trivial phrase last.
std::vector<CanonicalForm> subphrases(const CanonicalForm& p, std::size_t max_rank = kDefaultMaxRank);

/// Same enumeration on a named phrase; letter names and projections survive.
std::vector<Nanophrase> subphrases(const Nanophrase& p, std::size_t max_rank = kDefaultMaxRank);

/// p -> sum of all subphrases of p, extended linearly.
PhraseSum theta(const PhraseSum& s, std::size_t max_rank = kDefaultMaxRank);

/// p -> sum over q of (-1)^(rank p - rank q) q, extended linearly. Inverse of theta.
PhraseSum phi(const PhraseSum& s, std::size_t max_rank = kDefaultMaxRank);

/// Projection to cyclic classes: re-keys every term by its class.
ClassSum project_to_classes(const PhraseSum& s, const Alphabet& alphabet);

/// Number of subphrases of v isomorphic to w. Both must be non-singular with
/// the same component count.
std::int64_t pair(const CanonicalForm& w, const CanonicalForm& v);

/// Bilinear extension of pair().
std::int64_t pair(const PhraseSum& w, const PhraseSum& v);

/// <[w], v>: number of subphrases of v cyclically equivalent to w.
std::int64_t pair_class(const CanonicalForm& w, const CanonicalForm& v, const Alphabet& alphabet);

}  // namespace nano
