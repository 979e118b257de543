#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nano/alphabet.hpp"

namespace nano {

/// One letter of an alpha-alphabet. A singular letter projects into the
/// starred copy of alpha; it keeps the symbol it is a star of.
struct LetterEntry {
    std::string name;
    SymbolId projection;
    bool singular = false;

    bool operator==(const LetterEntry&) const = default;
};

/// An n-component nanophrase: a Gauss phrase over a named alpha-alphabet.
///
/// Components store indices into the letter table. The constructor enforces
/// the Gauss condition (every letter occurs exactly twice overall), that
/// every projection belongs to the alphabet, and that names are unique.
class Nanophrase {
public:
    using Component = std::vector<std::size_t>;

    Nanophrase(Alphabet alphabet, std::vector<LetterEntry> letters, std::vector<Component> components);

    /// The trivial phrase with n empty components.
    static Nanophrase empty(Alphabet alphabet, std::size_t n);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<LetterEntry>& letters() const noexcept { return letters_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }

    const LetterEntry& letter(std::size_t index) const { return letters_.at(index); }

    std::size_t singular_count() const noexcept;

    bool operator==(const Nanophrase&) const = default;

private:
    Alphabet alphabet_;
    std::vector<LetterEntry> letters_;
    std::vector<Component> components_;
};

/// Number of distinct letters.
inline std::size_t rank(const Nanophrase& p) noexcept { return p.letters().size(); }

/// rank(p) - rank(q).
inline long long delta(const Nanophrase& p, const Nanophrase& q) noexcept {
    return static_cast<long long>(rank(p)) - static_cast<long long>(rank(q));
}

/// Generated letter names: A..Z, then A1..Z1, A2..
std::string letter_name(std::size_t index);

}  // namespace nano
