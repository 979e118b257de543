#include "nano/nanophrase.hpp"

#include <algorithm>
#include <unordered_set>

#include "nano/error.hpp"

namespace nano {

Nanophrase::Nanophrase(Alphabet alphabet, std::vector<LetterEntry> letters,
                       std::vector<Component> components)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)), components_(std::move(components)) {
    if (components_.empty()) throw DomainError("nanophrase", "a phrase needs at least one component");

    std::unordered_set<std::string> names;
    for (const auto& l : letters_) {
        if (l.projection.value >= alphabet_.size())
            throw DomainError("nanophrase", "letter " + l.name + " projects outside the alphabet");
        if (!names.insert(l.name).second)
            throw DomainError("nanophrase", "duplicate letter name " + l.name);
    }

    std::vector<int> count(letters_.size(), 0);
    for (const auto& c : components_) {
        for (auto id : c) {
            if (id >= letters_.size())
                throw DomainError("nanophrase", "component references a letter missing from the table");
            ++count[id];
        }
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (count[i] != 2)
            throw DomainError("nanophrase", "Gauss condition violated: letter " + letters_[i].name +
                                                " occurs " + std::to_string(count[i]) + " times");
    }
}

Nanophrase Nanophrase::empty(Alphabet alphabet, std::size_t n) {
    return Nanophrase(std::move(alphabet), {}, std::vector<Component>(n));
}

std::size_t Nanophrase::singular_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [](const LetterEntry& l) { return l.singular; }));
}

std::string letter_name(std::size_t index) {
    std::string name(1, static_cast<char>('A' + index % 26));
    if (index >= 26) name += std::to_string(index / 26);
    return name;
}

}  // namespace nano
