#include <random>
#include <set>

#include <gtest/gtest.h>

#include "nano/algebra.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/notation.hpp"
#include "nano/random_phrase.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace nano;

namespace {

const Alphabet kSigned = Alphabet::signed_alphabet();
const std::vector<int> kNu{1, 0};

Nanophrase P(std::string_view text) { return parse_phrase(text, kSigned); }
CanonicalForm F(std::string_view text) { return canonical_iso_form(P(text)); }

oracle::Word W(const CanonicalForm& f) { return oracle::from_phrase(to_nanophrase(f, kSigned)); }

PhraseSum random_sum(std::mt19937_64& rng) {
    PhraseSum s;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t t = 0, terms = 1 + rng() % 4; t < terms; ++t)
        s.add(random_form(rng, rng() % 6, n, kSigned), static_cast<std::int64_t>(rng() % 9) - 4);
    return s;
}

}  // namespace

TEST(Subphrases, WorkedExample) {
    const auto list = subphrases(F("A:+ B:+ A:+ | B:+"));
    EXPECT_EQ(list.size(), 4u);
    EXPECT_EQ((std::set<CanonicalForm>(list.begin(), list.end())),
              (std::set<CanonicalForm>{F("A:+ B:+ A:+ | B:+"), F("A:+ A:+ |"), F("B:+ | B:+"), F("|")}));
    EXPECT_EQ(list.front(), F("A:+ B:+ A:+ | B:+"));
    EXPECT_EQ(list.back(), F("|"));
    EXPECT_EQ(subphrases(F("| |")), std::vector<CanonicalForm>{F("| |")});
}

TEST(Subphrases, NanophraseOverloadKeepsNames) {
    const auto list = subphrases(P("X:+ Y:- X:+ | Y:-"));
    ASSERT_EQ(list.size(), 4u);
    EXPECT_EQ(format_phrase(list.front()), "X:+ Y:- X:+ | Y:-");
    EXPECT_EQ(format_phrase(list.back()), "|");
}

TEST(Subphrases, CountIsPowerOfTwo) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_form(rng, rng() % 11, 1 + rng() % 3, kSigned);
        EXPECT_EQ(subphrases(f).size(), std::size_t{1} << f.rank());
    }
}

TEST(Subphrases, AgreesWithOracle) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const auto f = testutil::random_signed(rng, 5, 2, 2);
        const auto got = subphrases(f);
        const auto want = oracle::subwords(W(f));
        ASSERT_EQ(got.size(), want.size());
        // Same multiset of isomorphism classes.
        std::vector<bool> used(want.size(), false);
        for (const auto& s : got) {
            const auto w = W(s);
            bool matched = false;
            for (std::size_t j = 0; j < want.size() && !matched; ++j)
                if (!used[j] && oracle::isomorphic(w, want[j])) used[j] = matched = true;
            EXPECT_TRUE(matched);
        }
    }
}

TEST(Subphrases, CapacityGuard) {
    std::mt19937_64 rng(1);
    const auto f = random_form(rng, 8, 1, kSigned);
    EXPECT_THROW(subphrases(f, 7), CapacityError);
    EXPECT_NO_THROW(subphrases(f, 8));
}

TEST(Theta, Examples) {
    EXPECT_EQ(theta(PhraseSum::of(F(""))), PhraseSum::of(F("")));
    EXPECT_EQ(theta(PhraseSum::of(F("A:+ A:+"))), PhraseSum::of(F("A:+ A:+")) + PhraseSum::of(F("")));
    EXPECT_EQ(phi(PhraseSum::of(F("A:+ A:+"))), PhraseSum::of(F("A:+ A:+")) - PhraseSum::of(F("")));
    EXPECT_EQ(phi(PhraseSum::of(F("|"))), PhraseSum::of(F("|")));
    PhraseSum four;
    for (const char* t : {"A:+ B:+ A:+ | B:+", "A:+ A:+ |", "B:+ | B:+", "|"}) four.add(F(t), 1);
    EXPECT_EQ(theta(PhraseSum::of(F("A:+ B:+ A:+ | B:+"))), four);
}

TEST(Theta, PhiIsInverse) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto s = random_sum(rng);
        EXPECT_EQ(phi(theta(s)), s);
        EXPECT_EQ(theta(phi(s)), s);
    }
}

TEST(Theta, Linear) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_sum(rng), b = random_sum(rng);
        EXPECT_EQ(theta(a + b), theta(a) + theta(b));
        EXPECT_EQ(phi(3 * a - b), 3 * phi(a) - phi(b));
    }
}

TEST(Theta, RespectsCyclicClasses) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        const auto f = random_form(rng, rng() % 5, 1 + rng() % 2, kSigned);
        const auto reference = project_to_classes(theta(PhraseSum::of(f)), kSigned);
        for (const auto& g : cyclic_orbit(f, kSigned))
            EXPECT_EQ(project_to_classes(theta(PhraseSum::of(g)), kSigned), reference);
    }
}

TEST(Pair, Examples) {
    const auto v = F("A:+ A:+ B:- B:- C:+ C:+");
    EXPECT_EQ(pair(F("A:+ A:+"), v), 2);
    EXPECT_EQ(pair(F(""), v), 1);
    EXPECT_EQ(pair(v, v), 1);
    EXPECT_THROW(pair(F("A:+ A:+"), F("A:+ | A:+")), Error);
    EXPECT_THROW(pair(F("A:+* A:+*"), v), Error);
}

TEST(Pair, AgreesWithOracle) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng() % 2;
        const auto w = random_form(rng, rng() % 3, n, kSigned);
        const auto v = random_form(rng, rng() % 6, n, kSigned);
        EXPECT_EQ(pair(w, v), oracle::pair(W(w), W(v)));
        EXPECT_EQ(pair_class(w, v, kSigned), oracle::pair_class(W(w), W(v), kNu));
    }
}

TEST(PairClass, Examples) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        const auto w = random_form(rng, rng() % 7, 1, kSigned);
        EXPECT_EQ(pair_class(F("A:+ A:+"), w, kSigned), static_cast<std::int64_t>(w.rank()));
        EXPECT_EQ(pair_class(F(""), w, kSigned), 1);
    }
    // Values computed by the brute-force oracle: the [A+A+B-B-] coordinate is
    // equal on the two words, and [A+A+B+B+] is where they differ.
    const auto v1 = F("A:+ A:+ B:- B:- C:+ C:+");
    const auto v2 = F("A:- A:- B:- B:- C:+ C:+");
    EXPECT_EQ(pair_class(F("A:+ A:+ B:- B:-"), v1, kSigned), 2);
    EXPECT_EQ(pair_class(F("A:+ A:+ B:- B:-"), v2, kSigned), 2);
    EXPECT_EQ(pair_class(F("A:+ A:+ B:+ B:+"), v1, kSigned), 1);
    EXPECT_EQ(pair_class(F("A:+ A:+ B:+ B:+"), v2, kSigned), 0);
    EXPECT_EQ(oracle::pair_class(W(F("A:+ A:+ B:+ B:+")), W(v1), kNu), 1);
    EXPECT_EQ(oracle::pair_class(W(F("A:+ A:+ B:+ B:+")), W(v2), kNu), 0);
}

TEST(PairClass, ShiftInvariantInSecondArgument) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng() % 2;
        const auto w = random_form(rng, rng() % 3, n, kSigned);
        const auto v = random_form(rng, rng() % 6, n, kSigned);
        const auto value = pair_class(w, v, kSigned);
        for (const auto& u : cyclic_orbit(v, kSigned)) EXPECT_EQ(pair_class(w, u, kSigned), value);
    }
}

TEST(Pair, Bilinear) {
    const auto a = PhraseSum::of(F("A:+ A:+"), 2) + PhraseSum::of(F(""), -1);
    const auto v = PhraseSum::of(F("A:+ A:+ B:+ B:+"), 1) + PhraseSum::of(F("A:+ A:+"), 3);
    // 2*(2 + 3) - (1 + 3)
    EXPECT_EQ(pair(a, v), 6);
}
