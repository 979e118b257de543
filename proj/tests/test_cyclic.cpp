#include <random>
#include <set>

#include <gtest/gtest.h>

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

std::set<CanonicalForm> as_set(const std::vector<CanonicalForm>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Shift, MovesLeadingLetterThroughNu) {
    EXPECT_EQ(canonical_iso_form(shift_component(P("X:+ X:+ Y:- Y:-"), 0)), F("X:- Y:- Y:- X:-"));
    EXPECT_EQ(shift_component(P("A:+ | A:+"), 0), P("A:+ | A:+"));
    EXPECT_EQ(shift_component(P("A:+ B:- A:+ | B:-"), 1), P("A:+ B:- A:+ | B:-"));
    EXPECT_EQ(shift_component(P("|"), 1), P("|"));
    EXPECT_THROW(shift_component(P("A:+ A:+"), 1), Error);
}

TEST(Shift, LetterWithTwinElsewhereKeepsProjection) {
    // B's twin lives in the second component, so B is not moved through nu.
    EXPECT_EQ(canonical_iso_form(shift_component(P("B:+ A:- A:- | B:+"), 0)), F("A:- A:- B:+ | B:+"));
}

TEST(Orbit, KnownOrbits) {
    EXPECT_EQ(as_set(cyclic_orbit(P("X:+ X:+ Y:- Y:-"))),
              (std::set<CanonicalForm>{F("X:+ X:+ Y:- Y:-"), F("Y:+ X:+ X:+ Y:+"), F("Y:- Y:- X:+ X:+"),
                                       F("X:- Y:- Y:- X:-")}));
    EXPECT_EQ(as_set(cyclic_orbit(P("X:+ X:+ Y:+ Y:+"))),
              (std::set<CanonicalForm>{F("X:+ X:+ Y:+ Y:+"), F("Y:- X:+ X:+ Y:-")}));
    EXPECT_EQ(cyclic_orbit(P("| |")), std::vector<CanonicalForm>{F("| |")});
}

TEST(Orbit, SortedAndFromForm) {
    const auto orbit = cyclic_orbit(F("A:+ B:- A:+ C:+ B:- C:+"), kSigned);
    EXPECT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
    EXPECT_EQ(orbit, cyclic_orbit(P("A:+ B:- A:+ C:+ B:- C:+")));
}

TEST(CyclicCanonical, KnownClasses) {
    EXPECT_EQ(cyclic_canonical(P("A:+ A:+")), cyclic_canonical(P("A:- A:-")));
    EXPECT_EQ(cyclic_canonical(P("X:+ X:+ Y:+ Y:+")), cyclic_canonical(P("Y:- X:+ X:+ Y:-")));
    EXPECT_NE(cyclic_canonical(P("A:+ | A:+")), cyclic_canonical(P("A:- | A:-")));
}

TEST(OrbitSum, Terms) {
    EXPECT_EQ(orbit_sum(F("X:+ X:+ Y:- Y:-"), kSigned).size(), 4u);
    EXPECT_EQ(orbit_sum(F("X:+ X:+ Y:+ Y:+"), kSigned).size(), 2u);
    const auto empty = orbit_sum(F(""), kSigned);
    EXPECT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty.coefficient(F("")), 1);
}

// Orbit sizes and membership agree with a naive BFS over shifts that
// compares words by bijection search.
TEST(Orbit, AgreesWithNaiveOracle) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        const auto f = testutil::random_signed(rng, 5, 3, 2);
        const auto p = to_nanophrase(f, kSigned);
        const auto naive = oracle::orbit(oracle::from_phrase(p), kNu);
        const auto orbit = cyclic_orbit(f, kSigned);
        ASSERT_EQ(orbit.size(), naive.size()) << format_phrase(p);
        for (const auto& member : orbit) {
            const auto w = oracle::from_phrase(to_nanophrase(member, kSigned));
            EXPECT_TRUE(std::any_of(naive.begin(), naive.end(), [&](const auto& m) { return oracle::isomorphic(m, w); }));
        }
    }
}

TEST(CyclicCanonical, AgreesWithNaiveEquivalence) {
    std::mt19937_64 rng(19);
    int equivalent = 0;
    for (int i = 0; i < 1500; ++i) {
        const std::size_t k = rng() % 4;
        const std::size_t n = 1 + rng() % 2;
        const auto a = random_form(rng, k, n, kSigned);
        const auto b = random_form(rng, k, n, kSigned);
        const bool same = cyclic_canonical(a, kSigned) == cyclic_canonical(b, kSigned);
        equivalent += same;
        EXPECT_EQ(same, oracle::cyclic_equivalent(oracle::from_phrase(to_nanophrase(a, kSigned)),
                                                  oracle::from_phrase(to_nanophrase(b, kSigned)), kNu));
    }
    EXPECT_GT(equivalent, 0);
}

TEST(CyclicCanonical, ShiftInvariantProperty) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto f = testutil::random_signed(rng, 7, 3, 3);
        const auto c = cyclic_canonical(f, kSigned);
        for (std::size_t comp = 0; comp < f.component_count(); ++comp)
            EXPECT_EQ(cyclic_canonical(shift_component(f, comp, kSigned), kSigned), c);
        EXPECT_EQ(c.representative(), cyclic_orbit(f, kSigned).front());
    }
}

TEST(CyclicCache, MatchesDirectComputation) {
    std::mt19937_64 rng(29);
    CyclicCache cache(kSigned);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_form(rng, rng() % 5, 1 + rng() % 2, kSigned);
        EXPECT_EQ(cache(f), cyclic_canonical(f, kSigned));
    }
}

TEST(CyclicCanonical, NonInvolutiveAlphabetNu) {
    const auto a = Alphabet::parse("a,b,c", "a<->b");
    const auto f = canonical_iso_form(parse_phrase("A:c A:c", a));
    EXPECT_EQ(cyclic_orbit(f, a).size(), 1u);
    const auto g = canonical_iso_form(parse_phrase("A:a A:a", a));
    EXPECT_EQ(cyclic_canonical(g, a), cyclic_canonical(canonical_iso_form(parse_phrase("A:b A:b", a)), a));
}
