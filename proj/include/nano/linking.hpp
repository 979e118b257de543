#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/formal_sum.hpp"

namespace nano {

/// Symmetric n x n matrix. Off-diagonal entries live in the free abelian
/// group on alpha; diagonal entries in alpha modulo a = nu(a), keyed by the
/// order-minimal symbol of each nu-orbit. Zero coefficients are not stored.
class LinkingMatrix {
public:
    using Entry = std::map<SymbolId, std::int64_t>;

    explicit LinkingMatrix(std::size_t n = 0) : n_(n), upper_(n * (n + 1) / 2) {}

    std::size_t size() const noexcept { return n_; }
    const Entry& at(std::size_t i, std::size_t j) const { return upper_.at(index(i, j)); }

    /// Adds `coefficient` to the coefficient of `key` in entry (i, j) = (j, i).
    void add(std::size_t i, std::size_t j, SymbolId key, std::int64_t coefficient);

    bool is_zero() const noexcept;

    LinkingMatrix& operator+=(const LinkingMatrix& other);
    LinkingMatrix& operator-=(const LinkingMatrix& other);
    friend LinkingMatrix operator+(LinkingMatrix a, const LinkingMatrix& b) { return a += b; }
    friend LinkingMatrix operator-(LinkingMatrix a, const LinkingMatrix& b) { return a -= b; }

    bool operator==(const LinkingMatrix&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<Entry> upper_;
};

inline std::size_t rank_invariant(const CanonicalForm& p) noexcept { return p.rank(); }

/// The constant invariant 1.
inline std::int64_t iota(const CanonicalForm&) noexcept { return 1; }

/// Linear extension of iota: the coefficient sum.
template <class Key>
std::int64_t iota(const FormalSum<Key>& s) {
    return s.total();
}

LinkingMatrix linking_matrix(const CanonicalForm& p, const Alphabet& alphabet);

/// Linking matrix together with iota; a universal degree-1 invariant.
struct DegreeOneValue {
    LinkingMatrix linking;
    std::int64_t iota = 0;

    bool is_zero() const noexcept { return iota == 0 && linking.is_zero(); }
    bool operator==(const DegreeOneValue&) const = default;

    friend DegreeOneValue operator+(DegreeOneValue a, const DegreeOneValue& b) {
        a.linking += b.linking;
        a.iota += b.iota;
        return a;
    }
    friend DegreeOneValue operator-(DegreeOneValue a, const DegreeOneValue& b) {
        a.linking -= b.linking;
        a.iota -= b.iota;
        return a;
    }
};

DegreeOneValue universal_degree1(const CanonicalForm& p, const Alphabet& alphabet);

}  // namespace nano
