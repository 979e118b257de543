#include <random>

#include <gtest/gtest.h>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/error.hpp"
#include "nano/formal_sum.hpp"
#include "nano/nanophrase.hpp"
#include "nano/notation.hpp"
#include "nano/random_phrase.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace nano;

namespace {

const Alphabet kSigned = Alphabet::signed_alphabet();

Nanophrase P(std::string_view text) { return parse_phrase(text, kSigned); }
CanonicalForm F(std::string_view text) { return canonical_iso_form(P(text)); }

}  // namespace

TEST(Alphabet, SignedDefault) {
    EXPECT_EQ(kSigned.size(), 2u);
    EXPECT_TRUE(kSigned.is_signed());
    const auto plus = *kSigned.find("+");
    const auto minus = *kSigned.find("-");
    EXPECT_EQ(kSigned.nu(plus), minus);
    EXPECT_EQ(kSigned.nu(minus), plus);
    EXPECT_EQ(kSigned.orbit_representative(minus), plus);
    EXPECT_FALSE(kSigned.find("x").has_value());
}

TEST(Alphabet, DeclarationRoundTrip) {
    const auto a = Alphabet::parse_declaration("alpha = a,b,c ; nu = a<->b");
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.nu(*a.find("a")), *a.find("b"));
    EXPECT_EQ(a.nu(*a.find("c")), *a.find("c"));
    EXPECT_EQ(Alphabet::parse_declaration(a.declaration()), a);
    EXPECT_EQ(Alphabet::parse("+,-", "+<->-"), kSigned);
    EXPECT_FALSE(Alphabet::parse("a,b", "").is_signed());
}

TEST(Alphabet, RejectsBadDeclarations) {
    EXPECT_THROW(Alphabet::parse("", ""), Error);
    EXPECT_THROW(Alphabet::parse("a,a", ""), Error);
    EXPECT_THROW(Alphabet::parse("a,b", "a<->z"), Error);
    EXPECT_THROW(Alphabet::parse("a|b,c", ""), Error);
    EXPECT_THROW(Alphabet::parse("a,b,c", "a<->b,b<->c"), Error);
}

TEST(Notation, ParsesComponentsAndRank) {
    const auto p = P("A:+ B:- A:+ | B:-");
    EXPECT_EQ(p.component_count(), 2u);
    EXPECT_EQ(rank(p), 2u);
    const auto empty = P("|");
    EXPECT_EQ(empty.component_count(), 2u);
    EXPECT_EQ(rank(empty), 0u);
    EXPECT_EQ(rank(P("A:+ B:+ C:+ B:+ A:+ C:+")), 3u);
    EXPECT_EQ(rank(P("A:+ | B:+ | | B:+ A:+")), 2u);
    EXPECT_EQ(rank(Nanophrase::empty(kSigned, 4)), 0u);
}

TEST(Notation, GaussConditionErrorNamesTheCount) {
    try {
        P("A:+ A:+ A:+");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("letter A occurs 3 times"), std::string::npos) << e.what();
    }
    EXPECT_THROW(P("A:+"), Error);
    EXPECT_THROW(P("A:+ A:-"), Error);
    EXPECT_THROW(P("A:+* A:+"), Error);
    EXPECT_THROW(P("A:x A:x"), Error);
    EXPECT_THROW(P("A A"), Error);
}

TEST(Notation, FormatRoundTrips) {
    for (const char* text : {"A:+ B:- A:+ | B:-", "|", "A:+ A:+ |", "| A:+ A:+", "A:+ | A:+", "A:+* B:- B:- A:+*", ""}) {
        const auto p = P(text);
        EXPECT_EQ(P(format_phrase(p)), p) << text;
    }
    EXPECT_EQ(format_phrase(P("|")), "|");
    EXPECT_EQ(format_phrase(P("A:+ A:+ |")), "A:+ A:+ |");
}

TEST(Notation, CustomAlphabet) {
    const auto a = Alphabet::parse("x,y,z", "x<->y");
    const auto p = parse_phrase("A:z B:x A:z B:x", a);
    EXPECT_EQ(rank(p), 2u);
    EXPECT_THROW(parse_phrase("A:+ A:+", a), Error);
}

TEST(Delta, RankDifferences) {
    EXPECT_EQ(delta(P("A:+ B:+ A:+ B:+"), P("A:+ A:+")), 1);
    const auto p = P("A:+ B:+ A:+ | B:+");
    EXPECT_EQ(delta(p, p), 0);
    EXPECT_EQ(delta(p, P("|")), 2);
}

TEST(LetterName, Sequence) {
    EXPECT_EQ(letter_name(0), "A");
    EXPECT_EQ(letter_name(25), "Z");
    EXPECT_NE(letter_name(26), letter_name(0));
    EXPECT_NE(letter_name(26), letter_name(52));
}

TEST(Canonical, RelabellingExamples) {
    EXPECT_EQ(F("X:+ Y:- X:+ | Y:-"), F("B:+ A:- B:+ | A:-"));
    EXPECT_NE(F("A:+ A:+"), F("A:- A:-"));
    EXPECT_EQ(F("Y:+ Y:+ X:+ X:+"), F("X:+ X:+ Y:+ Y:+"));
    EXPECT_TRUE(is_isomorphic(P("A:+ A:+ B:+ B:+"), P("B:+ B:+ A:+ A:+")));
    EXPECT_FALSE(is_isomorphic(P("A:+ A:+"), P("A:- A:-")));
    // Projections listed by letter name: |A| = -, |B| = +.
    EXPECT_TRUE(is_isomorphic(P("A:+ B:- A:+ B:-"), P("B:+ A:- B:+ A:-")));
    EXPECT_FALSE(is_isomorphic(P("A:+ B:- A:+ B:-"), P("B:- A:+ B:- A:+")));
    EXPECT_EQ(format_form(F("X:+ Y:- X:+ | Y:-"), kSigned), "A:+ B:- A:+ | B:-");
}

TEST(Canonical, ToNanophraseRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto f = testutil::random_signed(rng, 7, 3, 2);
        EXPECT_EQ(canonical_iso_form(to_nanophrase(f, kSigned)), f);
    }
}

// Canonical forms agree iff the brute-force bijection search finds an isomorphism.
TEST(Canonical, AgreesWithBijectionOracle) {
    std::mt19937_64 rng(11);
    int equal = 0;
    for (int i = 0; i < 3000; ++i) {
        const std::size_t k = rng() % 4;
        const std::size_t n = 1 + rng() % 2;
        const auto a = to_nanophrase(random_form(rng, k, n, kSigned), kSigned);
        const auto b = to_nanophrase(random_form(rng, k, n, kSigned), kSigned);
        const bool same = canonical_iso_form(a) == canonical_iso_form(b);
        equal += same;
        EXPECT_EQ(same, oracle::isomorphic(oracle::from_phrase(a), oracle::from_phrase(b)))
            << format_phrase(a) << " vs " << format_phrase(b);
    }
    EXPECT_GT(equal, 0);
}

TEST(Canonical, TotalOrder) {
    std::mt19937_64 rng(3);
    std::vector<CanonicalForm> forms;
    for (int i = 0; i < 60; ++i) forms.push_back(random_form(rng, rng() % 4, 1, kSigned));
    for (const auto& a : forms)
        for (const auto& b : forms) {
            const bool lt = a < b, gt = b < a, eq = a == b;
            EXPECT_EQ(int(lt) + int(gt) + int(eq), 1);
            if (eq) EXPECT_EQ(a.hash(), b.hash());
        }
}

TEST(Canonical, RestrictMatchesOracle) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto f = testutil::random_signed(rng, 6, 3, 3);
        const std::uint64_t keep = rng() & ((std::uint64_t{1} << f.rank()) - 1);
        const auto got = to_nanophrase(f.restrict_to(keep), kSigned);
        const auto want = oracle::restrict(oracle::from_phrase(to_nanophrase(f, kSigned)), keep);
        EXPECT_TRUE(oracle::isomorphic(oracle::from_phrase(got), want));
        EXPECT_EQ(canonical_iso_form(got), f.restrict_to(keep));
    }
}

TEST(FormalSum, ArithmeticDropsZeros) {
    using S = FormalSum<int>;
    S a = S::of(1, 2) + S::of(2, 3);
    S b = S::of(1, -2);
    const S c = a + b;
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.coefficient(1), 0);
    EXPECT_EQ(c.coefficient(2), 3);
    EXPECT_EQ(-c + c, S{});
    EXPECT_EQ(3 * a, a + a + a);
    EXPECT_EQ(0 * a, S{});
    EXPECT_EQ(a.total(), 5);
    EXPECT_EQ(a - a, S{});
}
