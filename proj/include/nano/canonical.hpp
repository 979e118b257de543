#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nano/alphabet.hpp"
#include "nano/nanophrase.hpp"

namespace nano {

struct Projection {
    SymbolId symbol;
    bool singular = false;

    bool operator==(const Projection&) const = default;
};

/// Isomorphism-class representative of a nanophrase.
///
/// Letters are numbered 0, 1, 2, ... in order of first occurrence, reading
/// component 1 left to right, then component 2, and so on. Two nanophrases
/// over the same alphabet are isomorphic iff their forms are equal.
///
/// Forms are totally ordered: skeleton lexicographically, then the symbol
/// sequence (declaration order), then the singular flags.
class CanonicalForm {
public:
    using Component = std::vector<int>;

    /// The trivial phrase with n empty components.
    explicit CanonicalForm(std::size_t n = 1) : skeleton_(n) {}

    /// Renumbers by first occurrence. Components may use any ids below
    /// projections.size(); ids that do not occur are dropped. Each id that
    /// does occur must occur exactly twice.
    static CanonicalForm relabel(std::span<const Component> components,
                                 std::span<const Projection> projections);

    const std::vector<Component>& skeleton() const noexcept { return skeleton_; }
    const std::vector<Projection>& letters() const noexcept { return letters_; }
    std::size_t rank() const noexcept { return letters_.size(); }
    std::size_t component_count() const noexcept { return skeleton_.size(); }
    std::size_t singular_count() const noexcept;

    /// Keeps the letters whose bit is set in `keep` (bit k = letter k).
    /// Because letters are already in first-occurrence order, the result is
    /// canonical without a further relabeling pass.
    CanonicalForm restrict_to(std::uint64_t keep) const;

    /// Same skeleton, projections replaced.
    CanonicalForm with_letters(std::vector<Projection> letters) const;

    std::strong_ordering operator<=>(const CanonicalForm& other) const;
    bool operator==(const CanonicalForm&) const = default;

    std::size_t hash() const noexcept;

private:
    std::vector<Component> skeleton_;
    std::vector<Projection> letters_;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept { return f.hash(); }
};

CanonicalForm canonical_iso_form(const Nanophrase& p);

/// A representative nanophrase with generated letter names A, B, C, ...
Nanophrase to_nanophrase(const CanonicalForm& form, const Alphabet& alphabet);

bool is_isomorphic(const Nanophrase& p, const Nanophrase& q);

inline long long delta(const CanonicalForm& p, const CanonicalForm& q) noexcept {
    return static_cast<long long>(p.rank()) - static_cast<long long>(q.rank());
}

}  // namespace nano
