#include "nano/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "nano/error.hpp"

namespace nano {
namespace {

constexpr std::string_view kReserved = "|:*,;=<>";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> parts;
    for (;;) {
        auto at = s.find(sep);
        parts.push_back(s.substr(0, at));
        if (at == std::string_view::npos) break;
        s.remove_prefix(at + sep.size());
    }
    return parts;
}

void check_symbol(std::string_view sym) {
    if (sym.empty()) throw DomainError("alphabet", "empty symbol");
    for (char c : sym) {
        if (std::isspace(static_cast<unsigned char>(c)) || kReserved.find(c) != std::string_view::npos)
            throw DomainError("alphabet", "symbol '" + std::string(sym) +
                                              "' contains a reserved character (whitespace or |:*,;=<>)");
    }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols,
                   const std::vector<std::pair<std::string, std::string>>& transpositions)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw DomainError("alphabet", "symbol set must be non-empty");
    if (symbols_.size() > 0xFFFF) throw DomainError("alphabet", "too many symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        check_symbol(symbols_[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[i] == symbols_[j])
                throw DomainError("alphabet", "duplicate symbol '" + symbols_[i] + "'");
    }
    involution_.resize(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) involution_[i] = static_cast<std::uint16_t>(i);

    std::vector<bool> touched(symbols_.size(), false);
    for (const auto& [a, b] : transpositions) {
        auto x = find(a);
        auto y = find(b);
        if (!x) throw DomainError("alphabet", "involution references undeclared symbol '" + a + "'");
        if (!y) throw DomainError("alphabet", "involution references undeclared symbol '" + b + "'");
        if (touched[x->value] || touched[y->value])
            throw DomainError("alphabet", "symbol listed in more than one transposition of nu");
        touched[x->value] = touched[y->value] = true;
        involution_[x->value] = y->value;
        involution_[y->value] = x->value;
    }
}

Alphabet Alphabet::signed_alphabet() { return Alphabet({"+", "-"}, {{"+", "-"}}); }

Alphabet Alphabet::parse(std::string_view symbols, std::string_view involution) {
    std::vector<std::string> syms;
    for (auto part : split(symbols, ",")) syms.emplace_back(trim(part));
    std::vector<std::pair<std::string, std::string>> transpositions;
    if (!trim(involution).empty()) {
        for (auto part : split(involution, ",")) {
            auto sides = split(trim(part), "<->");
            if (sides.size() != 2)
                throw DomainError("alphabet", "involution entry '" + std::string(part) +
                                                  "' is not of the form a<->b");
            transpositions.emplace_back(std::string(trim(sides[0])), std::string(trim(sides[1])));
        }
    }
    return Alphabet(std::move(syms), transpositions);
}

Alphabet Alphabet::parse_declaration(std::string_view text) {
    std::string_view symbols;
    std::string_view involution;
    bool have_alpha = false;
    for (auto clause : split(text, ";")) {
        clause = trim(clause);
        if (clause.empty()) continue;
        auto eq = clause.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("alphabet", "clause '" + std::string(clause) + "' lacks '='");
        auto key = trim(clause.substr(0, eq));
        auto value = trim(clause.substr(eq + 1));
        if (key == "alpha") {
            symbols = value;
            have_alpha = true;
        } else if (key == "nu") {
            involution = value;
        } else {
            throw DomainError("alphabet", "unknown clause '" + std::string(key) + "'");
        }
    }
    if (!have_alpha) throw DomainError("alphabet", "declaration has no alpha clause");
    return parse(symbols, involution);
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), token);
    if (it == symbols_.end()) return std::nullopt;
    return SymbolId{static_cast<std::uint16_t>(it - symbols_.begin())};
}

bool Alphabet::is_signed() const noexcept {
    if (symbols_.size() != 2) return false;
    auto plus = find("+");
    auto minus = find("-");
    return plus && minus && involution_[plus->value] == minus->value;
}

std::string Alphabet::declaration() const {
    std::string out = "alpha = ";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ",";
        out += symbols_[i];
    }
    std::string nu;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (involution_[i] > i) {
            if (!nu.empty()) nu += ",";
            nu += symbols_[i] + "<->" + symbols_[involution_[i]];
        }
    }
    if (!nu.empty()) out += " ; nu = " + nu;
    return out;
}

}  // namespace nano
