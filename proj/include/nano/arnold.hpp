#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/nanophrase.hpp"

namespace nano {

// Compare a Rational only with another Rational. With Boost 1.74 in C++20
// mode, mixed comparisons such as `r == 2` recurse without end through the
// rewritten operator candidates.
using Rational = boost::rational<std::int64_t>;

/// An unsigned Gauss word in first-occurrence normal form, e.g. ABAB = {0,1,0,1}.
class GaussPattern {
public:
    /// From letters such as "AABB"; any consistent naming is accepted.
    static GaussPattern parse(std::string_view letters);

    const std::vector<int>& word() const noexcept { return word_; }
    std::size_t rank() const noexcept { return word_.size() / 2; }
    std::string text() const;

    bool operator==(const GaussPattern&) const = default;

private:
    std::vector<int> word_;
};

namespace patterns {
GaussPattern aabb();
GaussPattern abba();
GaussPattern abab();
}  // namespace patterns

/// +1 for "+", -1 for "-". The alphabet must be the signed one.
int sign_of(SymbolId symbol, const Alphabet& alphabet);

/// Checks that w is a non-singular 1-component word over {+, -}; throws
/// DomainError naming `operation` otherwise.
void require_signed_word(const CanonicalForm& w, const Alphabet& alphabet, const char* operation);

/// Signed count of subwords of w isomorphic (as Gauss words) to v; each
/// subword weighs (-1)^(number of its negative letters).
std::int64_t signed_pairing(const GaussPattern& v, const CanonicalForm& w, const Alphabet& alphabet);

struct ArnoldValues {
    Rational j_plus;
    Rational j_minus;
    Rational strangeness;

    bool operator==(const ArnoldValues&) const = default;
};

/// Polyak-type formulas extended to signed words. They are invariants only
/// on words of spherical curves, but evaluate on any signed word.
Rational j_plus(const CanonicalForm& w, const Alphabet& alphabet);
Rational j_minus(const CanonicalForm& w, const Alphabet& alphabet);
Rational strangeness(const CanonicalForm& w, const Alphabet& alphabet);
ArnoldValues arnold_invariants(const CanonicalForm& w, const Alphabet& alphabet);

/// "p/q" in lowest terms, always with a denominator.
std::string to_string(const Rational& r);

/// A1 A1 A2 A2 ... Ai Ai over the signed alphabet, all "+" (or all "-").
Nanophrase standard_curve(std::size_t i, bool negative = false);

/// Genus of the closed oriented surface obtained by capping the boundary of
/// a regular neighbourhood of the curve that the signed word describes
/// (face tracing on its ribbon graph). Genus 0 means the word is the Gauss
/// word of a curve on the sphere.
std::size_t surface_genus(const CanonicalForm& w, const Alphabet& alphabet);

}  // namespace nano
