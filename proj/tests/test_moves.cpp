#include <random>

#include <gtest/gtest.h>

#include "nano/arnold.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/moves.hpp"
#include "nano/notation.hpp"

using namespace nano;

namespace {

const Alphabet kSigned = Alphabet::signed_alphabet();

Nanophrase P(std::string_view text) { return parse_phrase(text, kSigned); }

// Brute-force scan for x A B y A C z B C t over every triple of positions.
bool has_move3_pattern(const Nanophrase& w) {
    const auto& s = w.components().front();
    const std::size_t L = s.size();
    for (std::size_t i = 0; i + 1 < L; ++i)
        for (std::size_t j = i + 2; j + 1 < L; ++j)
            for (std::size_t k = j + 2; k + 1 < L; ++k) {
                const int a = s[i], b = s[i + 1], c = s[j + 1];
                if (a != b && b != c && a != c && s[j] == a && s[k] == b && s[k + 1] == c) return true;
            }
    return false;
}

}  // namespace

TEST(MoveSites, Examples) {
    EXPECT_EQ(enumerate_move_sites(P(""), 1).size(), 2u);
    EXPECT_TRUE(enumerate_move_sites(P("A:+ A:+"), 3).empty());
    EXPECT_THROW(enumerate_move_sites(P("A:+ | A:+"), 1), Error);
    EXPECT_THROW(enumerate_move_sites(P("A:+ A:+"), 4), Error);
}

TEST(ApplyMove, MoveOneOnEmptyWord) {
    const auto sites = enumerate_move_sites(P(""), 1);
    const auto w = apply_move(P(""), sites[0]);
    EXPECT_EQ(canonical_iso_form(w), canonical_iso_form(P("A:+ B:- A:+ B:-")));
    const auto v = apply_move(P(""), enumerate_move_sites(P(""), 2)[0]);
    EXPECT_EQ(canonical_iso_form(v), canonical_iso_form(P("A:+ B:- B:- A:+")));
}

TEST(ApplyMove, MoveThreeSwapsPairsInPlace) {
    const auto w = P("A:+ B:+ A:+ C:+ B:+ C:+");
    const auto sites = enumerate_move_sites(w, 3);
    ASSERT_EQ(sites.size(), 1u);
    const auto v = apply_move(w, sites[0]);
    EXPECT_EQ(format_phrase(v), "B:+ A:+ C:+ A:+ C:+ B:+");
    EXPECT_EQ(v.letters(), w.letters());
    EXPECT_EQ(enumerate_move_sites(v, 3, true).size(), 1u);
    EXPECT_EQ(apply_move(v, enumerate_move_sites(v, 3, true)[0]), w);
}

TEST(ApplyMove, InvalidSiteRejected) {
    const auto w = P("A:+ A:+");
    MoveSite bogus;
    bogus.move = 1;
    bogus.inverse = true;
    bogus.first = 0;
    bogus.second = 1;
    EXPECT_FALSE(is_valid_site(w, bogus));
    EXPECT_THROW(apply_move(w, bogus), Error);
}

TEST(ApplyMove, FreshNamesAvoidCollisions) {
    const auto w = P("A:+ A:+ B:- B:-");
    for (const auto& site : enumerate_move_sites(w, 1)) {
        const auto v = apply_move(w, site);
        EXPECT_EQ(rank(v), 4u);  // constructor validates unique names
    }
}

TEST(MoveSites, Move3MatchesBruteForceScan) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t k = 3 + rng() % 3;
        std::vector<std::size_t> word;
        for (std::size_t id = 0; id < k; ++id) word.insert(word.end(), {id, id});
        std::shuffle(word.begin(), word.end(), rng);
        std::vector<LetterEntry> letters;
        for (std::size_t id = 0; id < k; ++id) letters.push_back({letter_name(id), SymbolId{std::uint16_t(rng() % 2)}, false});
        const Nanophrase w(kSigned, letters, {word});
        EXPECT_EQ(!enumerate_move_sites(w, 3).empty(), has_move3_pattern(w)) << format_phrase(w);
    }
}

TEST(ApplyMove, UndoRestoresWord) {
    const auto w = P("A:+ B:- C:+ B:- A:+ C:+");
    for (int move : {1, 2, 3})
        for (bool inverse : {false, true})
            for (const auto& site : enumerate_move_sites(w, move, inverse)) {
                const auto v = apply_move(w, site);
                const auto back = apply_move(v, undo_site(w, site));
                EXPECT_TRUE(is_isomorphic(back, w)) << describe(site);
            }
}

TEST(Sampler, ZeroStepsIsStandardCurve) {
    for (std::size_t i = 0; i <= 4; ++i) {
        const auto s = spherical_sampler(1, 0, i);
        EXPECT_EQ(s.word, standard_curve(i));
        EXPECT_TRUE(s.trace.empty());
    }
}

TEST(Sampler, DeterministicEvenLengthSpherical) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto a = spherical_sampler(seed, 6, seed % 4);
        const auto b = spherical_sampler(seed, 6, seed % 4);
        EXPECT_EQ(a.word, b.word);
        EXPECT_EQ(a.trace, b.trace);
        EXPECT_EQ(a.word.components().front().size() % 2, 0u);
        EXPECT_EQ(surface_genus(canonical_iso_form(a.word), kSigned), 0u);
    }
}

TEST(Sampler, ReplayAndUndoReturnsToStart) {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const auto s = spherical_sampler(seed, 5, seed % 3);
        std::vector<Nanophrase> path{standard_curve(s.start_index)};
        for (const auto& site : s.trace) path.push_back(apply_move(path.back(), site));
        EXPECT_EQ(path.back(), s.word);
        Nanophrase w = s.word;
        for (std::size_t k = s.trace.size(); k-- > 0;) w = apply_move(w, undo_site(path[k], s.trace[k]));
        EXPECT_EQ(cyclic_canonical(w), cyclic_canonical(standard_curve(s.start_index)));
    }
}

TEST(Sampler, ArnoldJumpsAlongTrace) {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const auto s = spherical_sampler(seed, 6, 2);
        Nanophrase w = standard_curve(2);
        for (const auto& site : s.trace) {
            const auto before = arnold_invariants(canonical_iso_form(w), kSigned);
            w = apply_move(w, site);
            const auto after = arnold_invariants(canonical_iso_form(w), kSigned);
            const Rational sign(site.inverse ? -1 : 1);
            if (site.move == 1) {
                EXPECT_EQ(after.j_plus - before.j_plus, Rational(2) * sign);
                EXPECT_EQ(after.j_minus, before.j_minus);
            } else if (site.move == 2) {
                EXPECT_EQ(after.j_minus - before.j_minus, Rational(-2) * sign);
                EXPECT_EQ(after.j_plus, before.j_plus);
            } else {
                EXPECT_EQ(after.j_plus, before.j_plus);
                EXPECT_EQ(after.j_minus, before.j_minus);
            }
        }
    }
}
