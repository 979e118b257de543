#include "nano/finite_type.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "nano/subsets.hpp"

namespace nano {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = saturating_mul(r, n - k + i) / i;
    return r;
}

// Gauss sequences of length 2k in first-occurrence normal form, in
// lexicographic order.
void gauss_sequences(std::size_t k, std::vector<int>& seq, std::vector<int>& count, int opened,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (seq.size() == 2 * k) {
        visit(seq);
        return;
    }
    for (int id = 0; id < opened; ++id) {
        if (count[id] != 1) continue;
        count[id] = 2;
        seq.push_back(id);
        gauss_sequences(k, seq, count, opened, visit);
        seq.pop_back();
        count[id] = 1;
    }
    if (static_cast<std::size_t>(opened) < k) {
        count[opened] = 1;
        seq.push_back(opened);
        gauss_sequences(k, seq, count, opened + 1, visit);
        seq.pop_back();
        count[opened] = 0;
    }
}

// Cut points 0 <= c_1 <= ... <= c_{n-1} <= length.
void splits(std::size_t length, std::size_t n, std::vector<std::size_t>& cuts,
            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (cuts.size() + 1 == n) {
        visit(cuts);
        return;
    }
    const std::size_t from = cuts.empty() ? 0 : cuts.back();
    for (std::size_t c = from; c <= length; ++c) {
        cuts.push_back(c);
        splits(length, n, cuts, visit);
        cuts.pop_back();
    }
}

}  // namespace

CanonicalForm star_all(const CanonicalForm& w) {
    if (w.singular_count() != 0) throw DomainError("star_all", "input already has singular letters");
    auto letters = w.letters();
    for (auto& l : letters) l.singular = true;
    return w.with_letters(std::move(letters));
}

Nanophrase star_all(const Nanophrase& w) {
    if (w.singular_count() != 0) throw DomainError("star_all", "input already has singular letters");
    auto letters = w.letters();
    for (auto& l : letters) l.singular = true;
    return Nanophrase(w.alphabet(), std::move(letters), w.components());
}

std::vector<Resolution> resolutions(const CanonicalForm& p) {
    std::vector<int> singular;
    for (std::size_t k = 0; k < p.rank(); ++k)
        if (p.letters()[k].singular) singular.push_back(static_cast<int>(k));
    const std::size_t s = singular.size();
    if (s > kMaxSingular)
        throw CapacityError("resolutions", "singular letter count", static_cast<long long>(kMaxSingular),
                            static_cast<long long>(s));

    std::uint64_t ordinary = 0;
    for (std::size_t k = 0; k < p.rank(); ++k)
        if (!p.letters()[k].singular) ordinary |= std::uint64_t{1} << k;

    auto plain = p.letters();
    for (auto& l : plain) l.singular = false;
    const CanonicalForm resolved = p.with_letters(std::move(plain));

    std::vector<Resolution> out;
    out.reserve(std::size_t{1} << s);
    const std::uint64_t subsets = std::uint64_t{1} << s;
    for (std::uint64_t chosen = subsets; chosen-- > 0;) {
        std::uint64_t keep = ordinary;
        int size = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if ((chosen >> j) & 1U) {
                keep |= std::uint64_t{1} << singular[j];
                ++size;
            }
        }
        const int sign = ((static_cast<int>(s) - size) % 2 == 0) ? 1 : -1;
        out.push_back({sign, resolved.restrict_to(keep)});
    }
    return out;
}

void InvariantVector::add(const CyclicClass& c, std::int64_t coefficient) {
    if (c.rank() > degree_)
        throw DomainError("gamma", "class of rank " + std::to_string(c.rank()) + " exceeds degree " +
                                       std::to_string(degree_));
    if (c.component_count() != components_)
        throw DomainError("gamma", "class has the wrong number of components");
    terms_.add(c, coefficient);
}

InvariantVector InvariantVector::truncated(std::size_t degree) const {
    InvariantVector out(std::min(degree, degree_), components_);
    for (const auto& [c, v] : terms_)
        if (c.rank() <= degree) out.terms_.add(c, v);
    return out;
}

InvariantVector& InvariantVector::operator+=(const InvariantVector& other) {
    if (other.components_ != components_)
        throw DomainError("gamma", "adding vectors with different component counts");
    degree_ = std::max(degree_, other.degree_);
    terms_ += other.terms_;
    return *this;
}

InvariantVector& InvariantVector::operator-=(const InvariantVector& other) {
    if (other.components_ != components_)
        throw DomainError("gamma", "subtracting vectors with different component counts");
    degree_ = std::max(degree_, other.degree_);
    terms_ -= other.terms_;
    return *this;
}

InvariantVector operator-(InvariantVector a) {
    a.terms_ *= -1;
    return a;
}

InvariantVector gamma(const CanonicalForm& p, std::size_t m, CyclicCache& cache) {
    if (p.singular_count() != 0) throw DomainError("gamma", "input must be non-singular");
    if (p.rank() > 62)
        throw CapacityError("gamma", "rank", 62, static_cast<long long>(p.rank()));
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= std::min(m, p.rank()); ++j) total += binomial(p.rank(), j);
    if (total > kMaxEnumeratedForms)
        throw CapacityError("gamma", "subphrase count", static_cast<long long>(kMaxEnumeratedForms),
                            static_cast<long long>(std::min<std::uint64_t>(total, 1ULL << 62)));

    InvariantVector out(m, p.component_count());
    for (std::size_t j = 0; j <= std::min(m, p.rank()); ++j) {
        for_each_subset_of_size(static_cast<unsigned>(p.rank()), static_cast<unsigned>(j),
                                [&](std::uint64_t keep) { out.add(cache(p.restrict_to(keep)), 1); });
    }
    return out;
}

InvariantVector gamma(const CanonicalForm& p, std::size_t m, const Alphabet& alphabet) {
    CyclicCache cache(alphabet);
    return gamma(p, m, cache);
}

std::uint64_t count_forms(std::size_t rank, std::size_t n, std::size_t alphabet_size) {
    std::uint64_t count = 1;
    for (std::size_t i = 1; i < 2 * rank; i += 2) count = saturating_mul(count, i);
    count = saturating_mul(count, binomial(2 * rank + n - 1, n - 1));
    for (std::size_t i = 0; i < rank; ++i) count = saturating_mul(count, alphabet_size);
    return count;
}

void enumerate_forms(std::size_t rank, std::size_t n, const Alphabet& alphabet,
                     const std::function<void(const CanonicalForm&)>& visit, const char* operation) {
    if (n == 0) throw DomainError(operation, "a phrase needs at least one component");
    const std::uint64_t count = count_forms(rank, n, alphabet.size());
    if (count > kMaxEnumeratedForms)
        throw CapacityError(operation, "form count", static_cast<long long>(kMaxEnumeratedForms),
                            static_cast<long long>(std::min<std::uint64_t>(count, 1ULL << 62)));

    const std::size_t a = alphabet.size();
    std::vector<int> seq;
    std::vector<int> used(rank, 0);
    gauss_sequences(rank, seq, used, 0, [&](const std::vector<int>& word) {
        std::vector<std::size_t> cuts;
        splits(word.size(), n, cuts, [&](const std::vector<std::size_t>& cut) {
            std::vector<CanonicalForm::Component> components(n);
            std::size_t begin = 0;
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t end = (c + 1 < n) ? cut[c] : word.size();
                components[c].assign(word.begin() + static_cast<std::ptrdiff_t>(begin),
                                     word.begin() + static_cast<std::ptrdiff_t>(end));
                begin = end;
            }
            // Projections as a mixed-radix counter, letter 0 most significant.
            std::vector<Projection> proj(rank);
            for (;;) {
                visit(CanonicalForm::relabel(components, proj));
                std::size_t k = rank;
                while (k > 0 && ++proj[k - 1].symbol.value == a) {
                    proj[k - 1].symbol.value = 0;
                    --k;
                }
                if (k == 0) break;
            }
        });
    });
}

void enumerate_singular_forms(std::size_t rank, std::size_t n, std::size_t singular,
                              const Alphabet& alphabet,
                              const std::function<void(const CanonicalForm&)>& visit,
                              const char* operation) {
    if (singular > rank) return;
    const std::uint64_t count =
        saturating_mul(count_forms(rank, n, alphabet.size()), binomial(rank, singular));
    if (count > kMaxEnumeratedForms)
        throw CapacityError(operation, "form count", static_cast<long long>(kMaxEnumeratedForms),
                            static_cast<long long>(std::min<std::uint64_t>(count, 1ULL << 62)));
    enumerate_forms(
        rank, n, alphabet,
        [&](const CanonicalForm& form) {
            for_each_subset_of_size(static_cast<unsigned>(rank), static_cast<unsigned>(singular),
                                    [&](std::uint64_t mask) {
                                        auto letters = form.letters();
                                        for (std::size_t k = 0; k < rank; ++k)
                                            letters[k].singular = ((mask >> k) & 1U) != 0;
                                        visit(form.with_letters(std::move(letters)));
                                    });
        },
        operation);
}

std::vector<CyclicClass> enumerate_basis(std::size_t m, std::size_t n, const Alphabet& alphabet) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= m; ++k) total += count_forms(k, n, alphabet.size());
    if (total > kMaxEnumeratedForms)
        throw CapacityError("enumerate_basis", "form count", static_cast<long long>(kMaxEnumeratedForms),
                            static_cast<long long>(std::min<std::uint64_t>(total, 1ULL << 62)));
    CyclicCache cache(alphabet);
    std::set<CyclicClass> classes;
    for (std::size_t k = 0; k <= m; ++k)
        enumerate_forms(
            k, n, alphabet, [&](const CanonicalForm& f) { classes.insert(cache(f)); }, "enumerate_basis");
    return {classes.begin(), classes.end()};
}

}  // namespace nano
