#include "nano/cyclic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "nano/error.hpp"

namespace nano {

Nanophrase shift_component(const Nanophrase& p, std::size_t i) {
    if (i >= p.component_count())
        throw DomainError("shift_component", "component index " + std::to_string(i + 1) +
                                                 " out of range 1.." + std::to_string(p.component_count()));
    const auto& comp = p.components()[i];
    if (comp.size() <= 1) return p;

    auto components = p.components();
    auto letters = p.letters();
    auto& target = components[i];
    const std::size_t lead = target.front();
    target.erase(target.begin());
    if (std::find(target.begin(), target.end(), lead) != target.end())
        letters[lead].projection = p.alphabet().nu(letters[lead].projection);
    target.push_back(lead);
    return Nanophrase(p.alphabet(), std::move(letters), std::move(components));
}

CanonicalForm shift_component(const CanonicalForm& p, std::size_t i, const Alphabet& alphabet) {
    if (i >= p.component_count())
        throw DomainError("shift_component", "component index " + std::to_string(i + 1) +
                                                 " out of range 1.." + std::to_string(p.component_count()));
    const auto& comp = p.skeleton()[i];
    if (comp.size() <= 1) return p;

    std::vector<CanonicalForm::Component> components = p.skeleton();
    std::vector<Projection> letters = p.letters();
    auto& target = components[i];
    const int lead = target.front();
    target.erase(target.begin());
    if (std::find(target.begin(), target.end(), lead) != target.end())
        letters[lead].symbol = alphabet.nu(letters[lead].symbol);
    target.push_back(lead);
    return CanonicalForm::relabel(components, letters);
}

std::vector<CanonicalForm> cyclic_orbit(const CanonicalForm& p, const Alphabet& alphabet) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen{p};
    std::deque<CanonicalForm> frontier{p};
    while (!frontier.empty()) {
        CanonicalForm current = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t i = 0; i < current.component_count(); ++i) {
            CanonicalForm next = shift_component(current, i, alphabet);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    std::vector<CanonicalForm> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<CanonicalForm> cyclic_orbit(const Nanophrase& p) {
    return cyclic_orbit(canonical_iso_form(p), p.alphabet());
}

CyclicClass cyclic_canonical(const CanonicalForm& p, const Alphabet& alphabet) {
    return CyclicClass(cyclic_orbit(p, alphabet).front());
}

CyclicClass cyclic_canonical(const Nanophrase& p) {
    return cyclic_canonical(canonical_iso_form(p), p.alphabet());
}

FormalSum<CanonicalForm> orbit_sum(const CanonicalForm& w, const Alphabet& alphabet) {
    FormalSum<CanonicalForm> sum;
    for (auto& member : cyclic_orbit(w, alphabet)) sum.add(member, 1);
    return sum;
}

const CyclicClass& CyclicCache::operator()(const CanonicalForm& form) {
    auto it = memo_.find(form);
    if (it != memo_.end()) return it->second;
    // Every orbit member maps to the same class, so memoize them all at once.
    auto orbit = cyclic_orbit(form, alphabet_);
    CyclicClass cls(orbit.front());
    for (auto& member : orbit) memo_.try_emplace(std::move(member), cls);
    return memo_.at(form);
}

}  // namespace nano
