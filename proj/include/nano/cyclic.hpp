#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/formal_sum.hpp"
#include "nano/nanophrase.hpp"

namespace nano {

/// Cyclic equivalence class (isomorphisms plus nu-shift moves), held as the
/// minimum canonical form over the full shift orbit.
class CyclicClass {
public:
    /// `orbit_minimum` must already be the minimum of its orbit; use
    /// cyclic_canonical() to obtain one from an arbitrary form.
    explicit CyclicClass(CanonicalForm orbit_minimum) : rep_(std::move(orbit_minimum)) {}

    const CanonicalForm& representative() const noexcept { return rep_; }
    std::size_t rank() const noexcept { return rep_.rank(); }
    std::size_t component_count() const noexcept { return rep_.component_count(); }

    std::strong_ordering operator<=>(const CyclicClass&) const = default;
    bool operator==(const CyclicClass&) const = default;

private:
    CanonicalForm rep_;
};

struct CyclicClassHash {
    std::size_t operator()(const CyclicClass& c) const noexcept { return c.representative().hash(); }
};

/// nu-shift move on component `i` (0-based). Components of length 0 or 1
/// are left alone; otherwise the leading letter moves to the end and its
/// projection goes through nu when its twin stays in the same component.
/// Singular letters keep their star.
Nanophrase shift_component(const Nanophrase& p, std::size_t i);
CanonicalForm shift_component(const CanonicalForm& p, std::size_t i, const Alphabet& alphabet);

/// All isomorphism classes reachable by shift moves, sorted ascending.
std::vector<CanonicalForm> cyclic_orbit(const CanonicalForm& p, const Alphabet& alphabet);
std::vector<CanonicalForm> cyclic_orbit(const Nanophrase& p);

CyclicClass cyclic_canonical(const CanonicalForm& p, const Alphabet& alphabet);
CyclicClass cyclic_canonical(const Nanophrase& p);

/// [w]: every member of the orbit with coefficient 1.
FormalSum<CanonicalForm> orbit_sum(const CanonicalForm& w, const Alphabet& alphabet);

/// Memoizing wrapper around cyclic_canonical for hot enumeration loops.
/// Not thread-safe; give each worker its own.
class CyclicCache {
public:
    explicit CyclicCache(const Alphabet& alphabet) : alphabet_(alphabet) {}

    const CyclicClass& operator()(const CanonicalForm& form);
    const Alphabet& alphabet() const noexcept { return alphabet_; }

private:
    const Alphabet& alphabet_;
    std::unordered_map<CanonicalForm, CyclicClass, CanonicalFormHash> memo_;
};

}  // namespace nano
