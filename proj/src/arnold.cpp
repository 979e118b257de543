#include "nano/arnold.hpp"

#include <array>
#include <unordered_map>

#include "nano/algebra.hpp"
#include "nano/error.hpp"
#include "nano/subsets.hpp"

namespace nano {

GaussPattern GaussPattern::parse(std::string_view letters) {
    std::unordered_map<char, int> ids;
    std::vector<int> count;
    GaussPattern p;
    for (char c : letters) {
        if (c == ' ') continue;
        auto [it, fresh] = ids.try_emplace(c, static_cast<int>(ids.size()));
        if (fresh) count.push_back(0);
        ++count[it->second];
        p.word_.push_back(it->second);
    }
    for (int n : count)
        if (n != 2) throw DomainError("signed_pairing", "pattern '" + std::string(letters) + "' is not a Gauss word");
    return p;
}

std::string GaussPattern::text() const {
    std::string out;
    for (int id : word_) out += letter_name(static_cast<std::size_t>(id));
    return out;
}

namespace patterns {
GaussPattern aabb() { return GaussPattern::parse("AABB"); }
GaussPattern abba() { return GaussPattern::parse("ABBA"); }
GaussPattern abab() { return GaussPattern::parse("ABAB"); }
}  // namespace patterns

int sign_of(SymbolId symbol, const Alphabet& alphabet) { return alphabet.name(symbol) == "+" ? 1 : -1; }

void require_signed_word(const CanonicalForm& w, const Alphabet& alphabet, const char* operation) {
    if (!alphabet.is_signed()) throw DomainError(operation, "alphabet must be {+,-} with nu(+) = -");
    if (w.component_count() != 1) throw DomainError(operation, "input must be a 1-component word");
    if (w.singular_count() != 0) throw DomainError(operation, "input must be non-singular");
}

std::int64_t signed_pairing(const GaussPattern& v, const CanonicalForm& w, const Alphabet& alphabet) {
    require_signed_word(w, alphabet, "signed_pairing");
    if (w.rank() > 62) throw CapacityError("signed_pairing", "rank", 62, static_cast<long long>(w.rank()));
    std::int64_t total = 0;
    for_each_subset_of_size(static_cast<unsigned>(w.rank()), static_cast<unsigned>(v.rank()),
                            [&](std::uint64_t keep) {
                                CanonicalForm sub = w.restrict_to(keep);
                                if (sub.skeleton().front() != v.word()) return;
                                int weight = 1;
                                for (const auto& l : sub.letters())
                                    if (sign_of(l.symbol, alphabet) < 0) weight = -weight;
                                total += weight;
                            });
    return total;
}

namespace {

struct PolyakTerms {
    std::int64_t aabb;
    std::int64_t abba;
    std::int64_t abab;
    std::int64_t aa_class;  // <[AA], w>
};

PolyakTerms polyak_terms(const CanonicalForm& w, const Alphabet& alphabet, const char* op) {
    require_signed_word(w, alphabet, op);
    const CanonicalForm aa = CanonicalForm::relabel(std::vector<CanonicalForm::Component>{{0, 0}},
                                                    std::vector<Projection>{{*alphabet.find("+"), false}});
    return {signed_pairing(patterns::aabb(), w, alphabet), signed_pairing(patterns::abba(), w, alphabet),
            signed_pairing(patterns::abab(), w, alphabet), pair_class(aa, w, alphabet)};
}

Rational j_plus_from(const PolyakTerms& t) {
    return Rational(t.aabb - t.abba - 3 * t.abab) - Rational(t.aa_class, 2) + Rational(1, 2);
}
Rational j_minus_from(const PolyakTerms& t) {
    return Rational(t.aabb - t.abba - 3 * t.abab) - Rational(3 * t.aa_class, 2) + Rational(1, 2);
}
Rational st_from(const PolyakTerms& t) {
    return Rational(-t.aabb + t.abba + t.abab, 2) + Rational(t.aa_class, 4) - Rational(1, 4);
}

}  // namespace

Rational j_plus(const CanonicalForm& w, const Alphabet& alphabet) {
    return j_plus_from(polyak_terms(w, alphabet, "j_plus"));
}

Rational j_minus(const CanonicalForm& w, const Alphabet& alphabet) {
    return j_minus_from(polyak_terms(w, alphabet, "j_minus"));
}

Rational strangeness(const CanonicalForm& w, const Alphabet& alphabet) {
    return st_from(polyak_terms(w, alphabet, "strangeness"));
}

ArnoldValues arnold_invariants(const CanonicalForm& w, const Alphabet& alphabet) {
    auto t = polyak_terms(w, alphabet, "arnold");
    return {j_plus_from(t), j_minus_from(t), st_from(t)};
}

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Nanophrase standard_curve(std::size_t i, bool negative) {
    Alphabet alphabet = Alphabet::signed_alphabet();
    const SymbolId s = *alphabet.find(negative ? "-" : "+");
    std::vector<LetterEntry> letters;
    Nanophrase::Component word;
    for (std::size_t k = 0; k < i; ++k) {
        letters.push_back({"A" + std::to_string(k + 1), s, false});
        word.push_back(k);
        word.push_back(k);
    }
    return Nanophrase(std::move(alphabet), std::move(letters), {std::move(word)});
}

std::size_t surface_genus(const CanonicalForm& w, const Alphabet& alphabet) {
    require_signed_word(w, alphabet, "surface_genus");
    const auto& word = w.skeleton().front();
    const std::size_t length = word.size();
    const std::size_t crossings = w.rank();
    if (crossings == 0) return 0;

    // Half-edge 2*pos is the outgoing end at word position pos, 2*pos+1 the
    // incoming end. Each crossing carries four half-edges; their
    // counter-clockwise order is fixed by the sign.
    std::vector<std::array<std::size_t, 2>> visits(crossings, {length, length});
    for (std::size_t pos = 0; pos < length; ++pos) {
        auto& v = visits[word[pos]];
        (v[0] == length ? v[0] : v[1]) = pos;
    }
    std::vector<std::size_t> next_ccw(2 * length);
    for (std::size_t c = 0; c < crossings; ++c) {
        const std::size_t out1 = 2 * visits[c][0], in1 = out1 + 1;
        const std::size_t out2 = 2 * visits[c][1], in2 = out2 + 1;
        const std::array<std::size_t, 4> order = sign_of(w.letters()[c].symbol, alphabet) > 0
                                                     ? std::array<std::size_t, 4>{out1, out2, in1, in2}
                                                     : std::array<std::size_t, 4>{out1, in2, in1, out2};
        for (std::size_t k = 0; k < 4; ++k) next_ccw[order[k]] = order[(k + 1) % 4];
    }
    // Leaving along half-edge h arrives at the opposite end of its edge.
    auto opposite = [length](std::size_t h) {
        const std::size_t pos = h / 2;
        return (h % 2 == 0) ? 2 * ((pos + 1) % length) + 1 : 2 * ((pos + length - 1) % length);
    };

    std::vector<bool> used(2 * length, false);
    std::size_t faces = 0;
    for (std::size_t start = 0; start < 2 * length; ++start) {
        if (used[start]) continue;
        ++faces;
        std::size_t h = start;
        do {
            used[h] = true;
            h = next_ccw[opposite(h)];
        } while (h != start);
    }
    // Euler characteristic with V = crossings, E = 2 * crossings.
    return (2 + crossings - faces) / 2;
}

}  // namespace nano
