#include "nano/notation.hpp"

#include <cctype>
#include <unordered_map>

#include "nano/error.hpp"

namespace nano {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Nanophrase run() {
        components_.emplace_back();
        for (;;) {
            skip_space();
            if (pos_ == text_.size()) break;
            if (text_[pos_] == '|') {
                ++pos_;
                components_.emplace_back();
                continue;
            }
            occurrence();
        }
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (counts_[i] != 2)
                throw DomainError("parse_phrase", "Gauss condition violated: letter " + letters_[i].name +
                                                      " occurs " + std::to_string(counts_[i]) + " times");
        }
        return Nanophrase(alphabet_, std::move(letters_), std::move(components_));
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    void occurrence() {
        const std::size_t start = pos_;
        if (!is_alpha(text_[pos_])) throw ParseError(pos_, "expected a letter name");
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        std::string name(text_.substr(start, pos_ - start));

        if (pos_ >= text_.size() || text_[pos_] != ':')
            throw ParseError(pos_, "expected ':' after letter name " + name);
        ++pos_;

        const std::size_t sym_start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '|' && text_[pos_] != '*')
            ++pos_;
        std::string_view token = text_.substr(sym_start, pos_ - sym_start);
        if (token.empty()) throw ParseError(sym_start, "expected a projection symbol after " + name + ":");
        auto symbol = alphabet_.find(token);
        if (!symbol)
            throw ParseError(sym_start, "unknown projection symbol '" + std::string(token) + "'");

        bool singular = false;
        if (pos_ < text_.size() && text_[pos_] == '*') {
            singular = true;
            ++pos_;
        }
        if (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '|')
            throw ParseError(pos_, "unexpected character after occurrence of " + name);

        auto [it, fresh] = index_.try_emplace(name, letters_.size());
        if (fresh) {
            letters_.push_back({name, *symbol, singular});
            counts_.push_back(0);
        } else {
            const auto& known = letters_[it->second];
            if (known.projection != *symbol || known.singular != singular)
                throw ParseError(start, "letter " + name + " is given two different projections");
        }
        ++counts_[it->second];
        components_.back().push_back(it->second);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
    std::vector<LetterEntry> letters_;
    std::vector<int> counts_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Nanophrase::Component> components_;
};

}  // namespace

Nanophrase parse_phrase(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).run();
}

std::string format_phrase(const Nanophrase& p) {
    std::string out;
    for (std::size_t c = 0; c < p.component_count(); ++c) {
        if (c > 0) out += out.empty() ? "|" : " |";
        for (auto id : p.components()[c]) {
            const auto& l = p.letter(id);
            if (!out.empty()) out += ' ';
            out += l.name;
            out += ':';
            out += p.alphabet().name(l.projection);
            if (l.singular) out += '*';
        }
    }
    return out;
}

std::string format_form(const CanonicalForm& form, const Alphabet& alphabet) {
    return format_phrase(to_nanophrase(form, alphabet));
}

}  // namespace nano
