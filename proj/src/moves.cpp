#include "nano/moves.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "nano/arnold.hpp"
#include "nano/canonical.hpp"
#include "nano/error.hpp"

namespace nano {
namespace {

void require_signed(const Nanophrase& w, const char* op) {
    require_signed_word(canonical_iso_form(w), w.alphabet(), op);
}

int sign_at(const Nanophrase& w, std::size_t pos) {
    return sign_of(w.letter(w.components().front()[pos]).projection, w.alphabet());
}

// Position of the other occurrence of the letter at `pos`.
std::size_t twin(const Nanophrase::Component& word, std::size_t pos) {
    for (std::size_t k = 0; k < word.size(); ++k)
        if (k != pos && word[k] == word[pos]) return k;
    return word.size();
}

std::string fresh_name(const Nanophrase& w, std::unordered_set<std::string>& taken) {
    if (taken.empty())
        for (const auto& l : w.letters()) taken.insert(l.name);
    for (std::size_t k = 0;; ++k) {
        std::string name = letter_name(k);
        if (taken.insert(name).second) return name;
    }
}

bool valid_removal(const Nanophrase::Component& word, const Nanophrase& w, const MoveSite& s) {
    const std::size_t p = s.first, q = s.second;
    if (q < p + 2 || q + 1 >= word.size()) return false;
    const std::size_t a = word[p], b = word[p + 1];
    if (a == b) return false;
    const bool pattern = (s.move == 1) ? (word[q] == a && word[q + 1] == b) : (word[q] == b && word[q + 1] == a);
    return pattern && sign_at(w, p) != sign_at(w, p + 1);
}

bool valid_triple(const Nanophrase::Component& word, const MoveSite& s) {
    const std::size_t i = s.first, j = s.second, k = s.third;
    if (!(i + 1 < j && j + 1 < k && k + 1 < word.size())) return false;
    std::size_t a, b, c;
    if (!s.inverse) {
        // x A B y A C z B C t
        a = word[i], b = word[i + 1], c = word[j + 1];
        if (word[j] != a || word[k] != b || word[k + 1] != c) return false;
    } else {
        // x B A y C A z C B t
        b = word[i], a = word[i + 1], c = word[j];
        if (word[j + 1] != a || word[k] != c || word[k + 1] != b) return false;
    }
    return a != b && b != c && a != c;
}

}  // namespace

std::string describe(const MoveSite& site) {
    std::string out = std::to_string(site.move) + (site.inverse ? "^-1" : "") + " (" +
                      std::to_string(site.first) + "," + std::to_string(site.second);
    if (site.move == 3) {
        out += "," + std::to_string(site.third);
    } else if (!site.inverse) {
        out += site.sign > 0 ? ",+" : ",-";
    }
    return out + ")";
}

std::vector<MoveSite> enumerate_move_sites(const Nanophrase& w, int move, bool inverse) {
    require_signed(w, "enumerate_move_sites");
    if (move < 1 || move > 3) throw DomainError("enumerate_move_sites", "move id must be 1, 2 or 3");
    const auto& word = w.components().front();
    const std::size_t n = word.size();
    std::vector<MoveSite> sites;

    if (move != 3 && !inverse) {
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                for (int sign : {1, -1}) sites.push_back({move, false, i, j, 0, sign});
        return sites;
    }
    if (move != 3) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 2; q + 1 < n; ++q) {
                MoveSite s{move, true, p, q, 0, 1};
                if (valid_removal(word, w, s)) sites.push_back(s);
            }
        return sites;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // Pin down the other two pairs from the letters at i, i+1.
        std::size_t j, k;
        if (!inverse) {
            const std::size_t a2 = twin(word, i);
            const std::size_t b2 = twin(word, i + 1);
            if (a2 >= n || b2 >= n) continue;
            j = a2;
            k = b2;
        } else {
            const std::size_t a2 = twin(word, i + 1);
            const std::size_t b2 = twin(word, i);
            if (a2 == 0 || a2 >= n || b2 == 0 || b2 >= n) continue;
            j = a2 - 1;
            k = b2 - 1;
        }
        MoveSite s{3, inverse, i, j, k, 1};
        if (valid_triple(word, s)) sites.push_back(s);
    }
    return sites;
}

bool is_valid_site(const Nanophrase& w, const MoveSite& site) {
    if (site.move < 1 || site.move > 3) return false;
    const auto& word = w.components().front();
    if (site.move == 3) return valid_triple(word, site);
    if (site.inverse) return valid_removal(word, w, site);
    return site.first <= site.second && site.second <= word.size() && (site.sign == 1 || site.sign == -1);
}

Nanophrase apply_move(const Nanophrase& w, const MoveSite& site) {
    require_signed(w, "apply_move");
    if (!is_valid_site(w, site)) throw DomainError("apply_move", "invalid site " + describe(site));
    const auto& word = w.components().front();

    if (site.move == 3) {
        auto out = word;
        for (std::size_t p : {site.first, site.second, site.third}) std::swap(out[p], out[p + 1]);
        return Nanophrase(w.alphabet(), w.letters(), {std::move(out)});
    }

    if (site.inverse) {
        const std::size_t a = word[site.first], b = word[site.first + 1];
        std::vector<LetterEntry> letters;
        std::vector<std::size_t> renumber(w.letters().size(), 0);
        for (std::size_t id = 0; id < w.letters().size(); ++id) {
            if (id == a || id == b) continue;
            renumber[id] = letters.size();
            letters.push_back(w.letter(id));
        }
        Nanophrase::Component out;
        for (std::size_t id : word)
            if (id != a && id != b) out.push_back(renumber[id]);
        return Nanophrase(w.alphabet(), std::move(letters), {std::move(out)});
    }

    std::unordered_set<std::string> taken;
    auto letters = w.letters();
    const std::size_t a = letters.size(), b = a + 1;
    const SymbolId plus = *w.alphabet().find("+"), minus = *w.alphabet().find("-");
    letters.push_back({fresh_name(w, taken), site.sign > 0 ? plus : minus, false});
    letters.push_back({fresh_name(w, taken), site.sign > 0 ? minus : plus, false});

    Nanophrase::Component out;
    out.reserve(word.size() + 4);
    for (std::size_t g = 0; g <= word.size(); ++g) {
        if (g == site.first) {
            out.push_back(a);
            out.push_back(b);
        }
        if (g == site.second) {
            out.push_back(site.move == 1 ? a : b);
            out.push_back(site.move == 1 ? b : a);
        }
        if (g < word.size()) out.push_back(word[g]);
    }
    return Nanophrase(w.alphabet(), std::move(letters), {std::move(out)});
}

MoveSite undo_site(const Nanophrase& w, const MoveSite& site) {
    if (!is_valid_site(w, site)) throw DomainError("undo_site", "invalid site " + describe(site));
    if (site.move == 3) return {3, !site.inverse, site.first, site.second, site.third, 1};
    if (!site.inverse) return {site.move, true, site.first, site.second + 2, 0, 1};
    return {site.move, false, site.first, site.second - 2, 0, sign_at(w, site.first)};
}

SphericalSample spherical_sampler(std::uint64_t seed, std::size_t steps, std::size_t start) {
    std::mt19937_64 rng(seed);
    // Plain modulo keeps the choice sequence identical across standard libraries.
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    SphericalSample sample{standard_curve(start), start, {}};
    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<std::vector<MoveSite>> kinds;
        for (int move : {1, 2, 3}) {
            for (bool inverse : {false, true}) {
                std::vector<MoveSite> spherical;
                for (const auto& s : enumerate_move_sites(sample.word, move, inverse)) {
                    const Nanophrase next = apply_move(sample.word, s);
                    if (surface_genus(canonical_iso_form(next), next.alphabet()) == 0) spherical.push_back(s);
                }
                if (!spherical.empty()) kinds.push_back(std::move(spherical));
            }
        }
        if (kinds.empty()) continue;
        const auto& chosen = kinds[pick(kinds.size())];
        const MoveSite site = chosen[pick(chosen.size())];
        sample.word = apply_move(sample.word, site);
        sample.trace.push_back(site);
    }
    return sample;
}

}  // namespace nano
