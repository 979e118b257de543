#include "nano/random_phrase.hpp"

#include <algorithm>
#include <numeric>

#include "nano/error.hpp"

namespace nano {

CanonicalForm random_form(std::mt19937_64& rng, std::size_t rank, std::size_t n, const Alphabet& alphabet,
                          std::size_t singular) {
    if (n == 0) throw DomainError("random_form", "a phrase needs at least one component");
    if (singular > rank) throw DomainError("random_form", "more singular letters than letters");

    std::vector<int> word;
    for (std::size_t k = 0; k < rank; ++k) word.insert(word.end(), 2, static_cast<int>(k));
    std::shuffle(word.begin(), word.end(), rng);

    std::vector<std::size_t> cuts;
    for (std::size_t c = 0; c + 1 < n; ++c) cuts.push_back(static_cast<std::size_t>(rng() % (word.size() + 1)));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(word.size());

    std::vector<CanonicalForm::Component> components(n);
    std::size_t begin = 0;
    for (std::size_t c = 0; c < n; ++c) {
        components[c].assign(word.begin() + static_cast<std::ptrdiff_t>(begin),
                             word.begin() + static_cast<std::ptrdiff_t>(cuts[c]));
        begin = cuts[c];
    }

    std::vector<std::size_t> order(rank);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Projection> projections(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        projections[k].symbol.value = static_cast<std::uint16_t>(rng() % alphabet.size());
    }
    for (std::size_t k = 0; k < singular; ++k) projections[order[k]].singular = true;
    return CanonicalForm::relabel(components, projections);
}

}  // namespace nano
