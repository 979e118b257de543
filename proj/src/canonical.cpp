#include "nano/canonical.hpp"

#include <algorithm>
#include <string>

#include "nano/error.hpp"

namespace nano {

CanonicalForm CanonicalForm::relabel(std::span<const Component> components,
                                     std::span<const Projection> projections) {
    CanonicalForm form(components.size());
    std::vector<int> renumber(projections.size(), -1);
    std::vector<int> seen(projections.size(), 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        auto& out = form.skeleton_[c];
        out.reserve(components[c].size());
        for (int id : components[c]) {
            if (id < 0 || static_cast<std::size_t>(id) >= projections.size())
                throw DomainError("canonical_iso_form", "letter id out of range");
            if (renumber[id] < 0) {
                renumber[id] = static_cast<int>(form.letters_.size());
                form.letters_.push_back(projections[id]);
            }
            ++seen[id];
            out.push_back(renumber[id]);
        }
    }
    for (std::size_t id = 0; id < seen.size(); ++id) {
        if (seen[id] != 0 && seen[id] != 2)
            throw DomainError("canonical_iso_form", "Gauss condition violated: a letter occurs " +
                                                        std::to_string(seen[id]) + " times");
    }
    return form;
}

std::size_t CanonicalForm::singular_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [](const Projection& p) { return p.singular; }));
}

CanonicalForm CanonicalForm::restrict_to(std::uint64_t keep) const {
    CanonicalForm out(skeleton_.size());
    std::vector<int> renumber(letters_.size(), -1);
    int next = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if ((keep >> k) & 1U) {
            renumber[k] = next++;
            out.letters_.push_back(letters_[k]);
        }
    }
    for (std::size_t c = 0; c < skeleton_.size(); ++c) {
        for (int id : skeleton_[c])
            if (renumber[id] >= 0) out.skeleton_[c].push_back(renumber[id]);
    }
    return out;
}

CanonicalForm CanonicalForm::with_letters(std::vector<Projection> letters) const {
    if (letters.size() != letters_.size())
        throw DomainError("canonical_iso_form", "projection count does not match rank");
    CanonicalForm out = *this;
    out.letters_ = std::move(letters);
    return out;
}

std::strong_ordering CanonicalForm::operator<=>(const CanonicalForm& other) const {
    if (auto c = skeleton_ <=> other.skeleton_; c != 0) return c;
    // The skeletons agree, so both have the same rank.
    for (std::size_t k = 0; k < letters_.size(); ++k)
        if (auto c = letters_[k].symbol <=> other.letters_[k].symbol; c != 0) return c;
    for (std::size_t k = 0; k < letters_.size(); ++k)
        if (auto c = letters_[k].singular <=> other.letters_[k].singular; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t CanonicalForm::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
    for (const auto& c : skeleton_) {
        mix(0xFFFF);
        for (int id : c) mix(static_cast<std::size_t>(id));
    }
    for (const auto& p : letters_) mix((static_cast<std::size_t>(p.symbol.value) << 1) | p.singular);
    return h;
}

CanonicalForm canonical_iso_form(const Nanophrase& p) {
    std::vector<Projection> projections;
    projections.reserve(p.letters().size());
    for (const auto& l : p.letters()) projections.push_back({l.projection, l.singular});
    std::vector<CanonicalForm::Component> components;
    components.reserve(p.component_count());
    for (const auto& c : p.components()) components.emplace_back(c.begin(), c.end());
    return CanonicalForm::relabel(components, projections);
}

Nanophrase to_nanophrase(const CanonicalForm& form, const Alphabet& alphabet) {
    std::vector<LetterEntry> letters;
    letters.reserve(form.rank());
    for (std::size_t k = 0; k < form.rank(); ++k)
        letters.push_back({letter_name(k), form.letters()[k].symbol, form.letters()[k].singular});
    std::vector<Nanophrase::Component> components;
    for (const auto& c : form.skeleton()) components.emplace_back(c.begin(), c.end());
    return Nanophrase(alphabet, std::move(letters), std::move(components));
}

bool is_isomorphic(const Nanophrase& p, const Nanophrase& q) {
    return p.alphabet() == q.alphabet() && canonical_iso_form(p) == canonical_iso_form(q);
}

}  // namespace nano
