#include "nano/algebra.hpp"

#include <unordered_set>

#include "nano/error.hpp"
#include "nano/subsets.hpp"

namespace nano {
namespace {

void check_capacity(const char* op, std::size_t rank, std::size_t max_rank) {
    const std::size_t hard = 62;
    const std::size_t limit = std::min(max_rank, hard);
    if (rank > limit)
        throw CapacityError(op, "rank", static_cast<long long>(limit), static_cast<long long>(rank));
}

void check_pairable(const char* op, const CanonicalForm& w, const CanonicalForm& v) {
    if (w.component_count() != v.component_count())
        throw DomainError(op, "component count mismatch (" + std::to_string(w.component_count()) +
                                  " vs " + std::to_string(v.component_count()) + ")");
    if (w.singular_count() != 0 || v.singular_count() != 0)
        throw DomainError(op, "arguments must be non-singular");
}

}  // namespace

std::vector<CanonicalForm> subphrases(const CanonicalForm& p, std::size_t max_rank) {
    check_capacity("subphrases", p.rank(), max_rank);
    const std::uint64_t full = (std::uint64_t{1} << p.rank()) - 1;
    std::vector<CanonicalForm> out;
    out.reserve(full + 1);
    for (std::uint64_t keep = full + 1; keep-- > 0;) out.push_back(p.restrict_to(keep));
    return out;
}

std::vector<Nanophrase> subphrases(const Nanophrase& p, std::size_t max_rank) {
    const std::size_t k = rank(p);
    check_capacity("subphrases", k, max_rank);
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    std::vector<Nanophrase> out;
    out.reserve(full + 1);
    for (std::uint64_t keep = full + 1; keep-- > 0;) {
        std::vector<std::size_t> renumber(k, 0);
        std::vector<LetterEntry> letters;
        for (std::size_t i = 0; i < k; ++i) {
            if ((keep >> i) & 1U) {
                renumber[i] = letters.size();
                letters.push_back(p.letter(i));
            }
        }
        std::vector<Nanophrase::Component> components(p.component_count());
        for (std::size_t c = 0; c < p.component_count(); ++c)
            for (auto id : p.components()[c])
                if ((keep >> id) & 1U) components[c].push_back(renumber[id]);
        out.emplace_back(p.alphabet(), std::move(letters), std::move(components));
    }
    return out;
}

PhraseSum theta(const PhraseSum& s, std::size_t max_rank) {
    return s.extend([max_rank](const CanonicalForm& p) {
        PhraseSum image;
        for (auto& q : subphrases(p, max_rank)) image.add(q, 1);
        return image;
    });
}

PhraseSum phi(const PhraseSum& s, std::size_t max_rank) {
    return s.extend([max_rank](const CanonicalForm& p) {
        PhraseSum image;
        for (auto& q : subphrases(p, max_rank)) image.add(q, (delta(p, q) % 2 == 0) ? 1 : -1);
        return image;
    });
}

ClassSum project_to_classes(const PhraseSum& s, const Alphabet& alphabet) {
    CyclicCache cache(alphabet);
    return s.rekey([&cache](const CanonicalForm& p) { return cache(p); });
}

std::int64_t pair(const CanonicalForm& w, const CanonicalForm& v) {
    check_pairable("pair", w, v);
    check_capacity("pair", v.rank(), 62);
    std::int64_t count = 0;
    for_each_subset_of_size(static_cast<unsigned>(v.rank()), static_cast<unsigned>(w.rank()),
                            [&](std::uint64_t keep) {
                                if (v.restrict_to(keep) == w) ++count;
                            });
    return count;
}

std::int64_t pair(const PhraseSum& w, const PhraseSum& v) {
    std::int64_t total = 0;
    for (const auto& [a, ca] : w)
        for (const auto& [b, cb] : v) total += ca * cb * pair(a, b);
    return total;
}

std::int64_t pair_class(const CanonicalForm& w, const CanonicalForm& v, const Alphabet& alphabet) {
    check_pairable("pair_class", w, v);
    check_capacity("pair_class", v.rank(), 62);
    auto orbit = cyclic_orbit(w, alphabet);
    std::unordered_set<CanonicalForm, CanonicalFormHash> members(orbit.begin(), orbit.end());
    std::int64_t count = 0;
    for_each_subset_of_size(static_cast<unsigned>(v.rank()), static_cast<unsigned>(w.rank()),
                            [&](std::uint64_t keep) {
                                if (members.contains(v.restrict_to(keep))) ++count;
                            });
    return count;
}

}  // namespace nano
