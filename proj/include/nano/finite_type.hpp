#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/formal_sum.hpp"

namespace nano {

inline constexpr std::size_t kMaxSingular = 20;
inline constexpr std::uint64_t kMaxEnumeratedForms = 5'000'000;

/// w*: every letter made singular, projections kept.
CanonicalForm star_all(const CanonicalForm& w);
Nanophrase star_all(const Nanophrase& w);

struct Resolution {
    int sign;
    CanonicalForm phrase;
};

/// Expansion of a singular phrase into non-singular ones: for every subset S
/// of the singular letters, the letters in S become ordinary and the others
/// are deleted, with sign (-1)^(s - |S|). The first entry keeps every letter.
std::vector<Resolution> resolutions(const CanonicalForm& p);

/// Zero test for invariant values: a member `is_zero()` when present,
/// otherwise comparison with a value-initialized V.
template <class V>
bool is_zero(const V& v) {
    if constexpr (requires { { v.is_zero() } -> std::convertible_to<bool>; }) {
        return v.is_zero();
    } else {
        return v == V{};
    }
}

/// Value of the singular extension of u at p (u evaluated on every
/// resolution, signs applied).
template <class F>
auto extend_invariant(F&& u, const CanonicalForm& p) {
    auto terms = resolutions(p);
    auto acc = u(terms.front().phrase);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].sign > 0) {
            acc = acc + u(terms[i].phrase);
        } else {
            acc = acc - u(terms[i].phrase);
        }
    }
    return acc;
}

/// Singular extension evaluated by applying the defining rule
/// u(xA*yA*z) = u(xAyAz) - u(xyz) one letter at a time, in the given order
/// of singular letter ids. Used to check independence of the order.
template <class F>
auto extend_invariant_sequential(F&& u, const CanonicalForm& p, std::span<const int> order) {
    if (order.empty()) {
        if (p.singular_count() != 0)
            throw DomainError("extend_invariant", "resolution order does not cover every singular letter");
        return u(p);
    }
    const int letter = order.front();
    if (letter < 0 || static_cast<std::size_t>(letter) >= p.rank() || !p.letters()[letter].singular)
        throw DomainError("extend_invariant", "resolution order names a non-singular letter");

    auto letters = p.letters();
    letters[letter].singular = false;
    CanonicalForm kept = p.with_letters(std::move(letters));

    // Deleting a letter shifts the ids of the letters after it down by one.
    std::vector<int> rest;
    for (int id : order.subspan(1)) rest.push_back(id);
    std::vector<int> rest_after_delete;
    for (int id : rest) rest_after_delete.push_back(id > letter ? id - 1 : id);
    const std::uint64_t all = (p.rank() >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << p.rank()) - 1;
    CanonicalForm deleted = p.restrict_to(all & ~(std::uint64_t{1} << letter));

    auto a = extend_invariant_sequential(u, kept, rest);
    auto b = extend_invariant_sequential(u, deleted, rest_after_delete);
    return a - b;
}

/// Value of the universal degree-m invariant: coefficient of each cyclic
/// class of rank <= m.
class InvariantVector {
public:
    InvariantVector(std::size_t degree, std::size_t components) : degree_(degree), components_(components) {}

    void add(const CyclicClass& c, std::int64_t coefficient);
    std::int64_t coefficient(const CyclicClass& c) const { return terms_.coefficient(c); }
    const FormalSum<CyclicClass>& terms() const noexcept { return terms_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t component_count() const noexcept { return components_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Keeps only the classes of rank <= degree.
    InvariantVector truncated(std::size_t degree) const;

    InvariantVector& operator+=(const InvariantVector& other);
    InvariantVector& operator-=(const InvariantVector& other);
    friend InvariantVector operator+(InvariantVector a, const InvariantVector& b) { return a += b; }
    friend InvariantVector operator-(InvariantVector a, const InvariantVector& b) { return a -= b; }
    friend InvariantVector operator-(InvariantVector a);

    bool operator==(const InvariantVector&) const = default;

private:
    std::size_t degree_;
    std::size_t components_;
    FormalSum<CyclicClass> terms_;
};

/// Universal finite type invariant of degree m: counts subphrases of p of
/// rank <= m by cyclic class.
InvariantVector gamma(const CanonicalForm& p, std::size_t m, const Alphabet& alphabet);
InvariantVector gamma(const CanonicalForm& p, std::size_t m, CyclicCache& cache);

/// Visits every canonical form of exactly `rank` letters and `n` components
/// whose letters are all non-singular.
void enumerate_forms(std::size_t rank, std::size_t n, const Alphabet& alphabet,
                     const std::function<void(const CanonicalForm&)>& visit,
                     const char* operation = "enumerate_forms");

/// As enumerate_forms, then every way of making exactly `singular` letters singular.
void enumerate_singular_forms(std::size_t rank, std::size_t n, std::size_t singular,
                              const Alphabet& alphabet,
                              const std::function<void(const CanonicalForm&)>& visit,
                              const char* operation = "enumerate_singular_forms");

/// Number of forms enumerate_forms would visit (saturating).
std::uint64_t count_forms(std::size_t rank, std::size_t n, std::size_t alphabet_size);

/// All cyclic classes of rank <= m with n components, sorted.
std::vector<CyclicClass> enumerate_basis(std::size_t m, std::size_t n, const Alphabet& alphabet);

struct DegreeReport {
    bool holds = true;
    std::optional<CanonicalForm> witness;
    std::uint64_t checked = 0;
};

/// Exhaustively checks that the extension of u vanishes on every phrase
/// with exactly m+1 singular letters, n components and rank <= max_rank.
/// Stops at the first non-vanishing phrase and returns it as the witness.
template <class F>
DegreeReport check_degree_at_most(F&& u, std::size_t m, std::size_t max_rank, std::size_t n,
                                  const Alphabet& alphabet) {
    DegreeReport report;
    for (std::size_t r = m + 1; r <= max_rank && report.holds; ++r) {
        enumerate_singular_forms(
            r, n, m + 1, alphabet,
            [&](const CanonicalForm& p) {
                if (!report.holds) return;
                ++report.checked;
                if (!is_zero(extend_invariant(u, p))) {
                    report.holds = false;
                    report.witness = p;
                }
            },
            "check_degree_at_most");
    }
    return report;
}

/// True iff the extension of u is non-zero on w* for some w of rank m: the
/// hint is tried first, then every basis representative of rank m.
template <class F>
bool check_degree_exact(F&& u, std::size_t m, std::size_t n, const Alphabet& alphabet,
                        const std::optional<CanonicalForm>& hint = std::nullopt) {
    if (hint) {
        if (hint->rank() != m || hint->component_count() != n)
            throw DomainError("check_degree_exact", "hint must have rank m and n components");
        if (!is_zero(extend_invariant(u, star_all(*hint)))) return true;
    }
    for (const auto& cls : enumerate_basis(m, n, alphabet)) {
        if (cls.rank() != m) continue;
        if (!is_zero(extend_invariant(u, star_all(cls.representative())))) return true;
    }
    return false;
}

}  // namespace nano
