#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nano {

/// Index of a projection symbol in its alphabet (declaration order).
struct SymbolId {
    std::uint16_t value = 0;

    friend auto operator<=>(SymbolId, SymbolId) = default;
};

/// The finite projection set together with its involution.
///
/// Symbols are ordered by declaration; that order is the one used whenever
/// canonical forms are compared. The involution is given as a list of
/// transpositions, every symbol not mentioned is a fixed point.
class Alphabet {
public:
    Alphabet(std::vector<std::string> symbols,
             const std::vector<std::pair<std::string, std::string>>& transpositions);

    /// {+, -} with nu(+) = -.
    static Alphabet signed_alphabet();

    /// Parses "alpha = +,- ; nu = +<->-". The nu clause is optional.
    static Alphabet parse_declaration(std::string_view text);

    /// Parses the two halves separately, as given on the command line:
    /// symbols "a,b,c" and transpositions "a<->b,c<->c" (may be empty).
    static Alphabet parse(std::string_view symbols, std::string_view involution);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(SymbolId s) const { return symbols_.at(s.value); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<SymbolId> find(std::string_view token) const;

    SymbolId nu(SymbolId s) const { return SymbolId{involution_.at(s.value)}; }

    /// Order-minimal member of {s, nu(s)}.
    SymbolId orbit_representative(SymbolId s) const { return std::min(s, nu(s)); }

    /// True iff this is {+, -} with nu swapping them.
    bool is_signed() const noexcept;

    /// "alpha = +,- ; nu = +<->-"
    std::string declaration() const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
    std::vector<std::uint16_t> involution_;
};

}  // namespace nano
