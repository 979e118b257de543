#include "nano/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nano/algebra.hpp"
#include "nano/arnold.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/finite_type.hpp"
#include "nano/linking.hpp"
#include "nano/moves.hpp"
#include "nano/notation.hpp"
#include "nano/random_phrase.hpp"

namespace nano {
namespace {

const Alphabet& signed_alpha() {
    static const Alphabet alphabet = Alphabet::signed_alphabet();
    return alphabet;
}

CanonicalForm form(std::string_view text) { return canonical_iso_form(parse_phrase(text, signed_alpha())); }

std::string show(const CanonicalForm& f) { return format_form(f, signed_alpha()); }

std::string show(const ArnoldValues& v) {
    return "(" + to_string(v.j_plus) + ", " + to_string(v.j_minus) + ", " + to_string(v.strangeness) + ")";
}

CheckResult begin_check(int criterion, std::string name) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    return r;
}

// ---------------------------------------------------------------- theta-phi

CheckResult subphrase_example(std::mt19937_64& rng) {
    auto r = begin_check(1, "subphrases(ABA|B) and 2^rank subphrase counts");
    const auto p = form("A:+ B:+ A:+ | B:+");
    const std::set<CanonicalForm> expected{form("A:+ B:+ A:+ | B:+"), form("A:+ A:+ |"), form("B:+ | B:+"),
                                           form("|")};
    const auto list = subphrases(p);
    const std::set<CanonicalForm> got(list.begin(), list.end());
    if (list.size() != 4 || got != expected) {
        r.detail = "subphrases(ABA|B) differs from {ABA|B, AA|, B|B, |}";
        return r;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = rng() % 11;
        const std::size_t n = 1 + rng() % 3;
        const auto q = random_form(rng, k, n, signed_alpha());
        const auto subs = subphrases(q);
        std::vector<std::size_t> by_rank(k + 1, 0);
        for (const auto& s : subs) ++by_rank.at(s.rank());
        bool ok = subs.size() == (std::size_t{1} << k);
        for (std::size_t j = 0, binom = 1; j <= k && ok; binom = binom * (k - j) / (j + 1), ++j)
            ok = by_rank[j] == binom;
        if (!ok) {
            r.detail = "count or rank profile wrong";
            r.witness = show(q);
            return r;
        }
    }
    r.passed = true;
    r.detail = "exact set for ABA|B; 100 random phrases of rank <= 10 have 2^rank subphrases";
    return r;
}

CheckResult orbit_examples() {
    auto r = begin_check(2, "shift orbits of XX(-Y)(-Y) and XXYY");
    const auto orbit1 = cyclic_orbit(form("X:+ X:+ Y:- Y:-"), signed_alpha());
    const std::set<CanonicalForm> expected1{form("X:+ X:+ Y:- Y:-"), form("Y:+ X:+ X:+ Y:+"),
                                            form("Y:- Y:- X:+ X:+"), form("X:- Y:- Y:- X:-")};
    const auto orbit2 = cyclic_orbit(form("X:+ X:+ Y:+ Y:+"), signed_alpha());
    const std::set<CanonicalForm> expected2{form("X:+ X:+ Y:+ Y:+"), form("Y:- X:+ X:+ Y:-")};
    const bool ok1 = orbit1.size() == 4 && std::set<CanonicalForm>(orbit1.begin(), orbit1.end()) == expected1;
    const bool ok2 = orbit2.size() == 2 && std::set<CanonicalForm>(orbit2.begin(), orbit2.end()) == expected2;
    r.passed = ok1 && ok2;
    r.detail = "orbit sizes " + std::to_string(orbit1.size()) + " and " + std::to_string(orbit2.size());
    return r;
}

CheckResult theta_phi_inverse(std::mt19937_64& rng) {
    auto r = begin_check(3, "phi o theta = id and theta o phi = id");
    for (int trial = 0; trial < 200; ++trial) {
        PhraseSum s;
        const std::size_t n = 1 + rng() % 3;
        const std::size_t terms = 1 + rng() % 4;
        for (std::size_t t = 0; t < terms; ++t) {
            const auto coefficient = static_cast<std::int64_t>(rng() % 11) - 5;
            s.add(random_form(rng, rng() % 6, n, signed_alpha()), coefficient);
        }
        if (phi(theta(s)) != s || theta(phi(s)) != s) {
            r.detail = "identity failed";
            r.witness = show(s.empty() ? CanonicalForm(n) : s.begin()->first);
            return r;
        }
    }
    r.passed = true;
    r.detail = "200 random sums, rank <= 5, n <= 3";
    return r;
}

// -------------------------------------------------------------------- u-hat

CheckResult u_hat_order(std::mt19937_64& rng) {
    auto r = begin_check(4, "singular extension is independent of resolution order");
    CyclicCache cache(signed_alpha());
    const auto rank_u = [](const CanonicalForm& q) { return static_cast<std::int64_t>(q.rank()); };
    const auto gamma_u = [&cache](const CanonicalForm& q) { return gamma(q, 2, cache); };
    std::size_t orders = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t s = 1 + rng() % 4;
        const std::size_t k = s + rng() % 3;
        const std::size_t n = 1 + rng() % 2;
        const auto p = random_form(rng, k, n, signed_alpha(), s);
        std::vector<int> order;
        for (std::size_t id = 0; id < p.rank(); ++id)
            if (p.letters()[id].singular) order.push_back(static_cast<int>(id));
        const auto rank_ref = extend_invariant(rank_u, p);
        const auto gamma_ref = extend_invariant(gamma_u, p);
        do {
            ++orders;
            if (extend_invariant_sequential(rank_u, p, order) != rank_ref ||
                extend_invariant_sequential(gamma_u, p, order) != gamma_ref) {
                r.detail = "sequential resolution disagrees with the inclusion-exclusion sum";
                r.witness = show(p);
                return r;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    r.passed = true;
    r.detail = "100 phrases, " + std::to_string(orders) + " resolution orders, u in {rank, gamma(.,2)}";
    return r;
}

// ------------------------------------------------------------- gamma-degree

CheckResult gamma_degree() {
    auto r = begin_check(5, "gamma(.,m) has degree exactly m (m = 1, 2; n <= 2)");
    std::uint64_t checked = 0;
    std::size_t units = 0;
    for (std::size_t m : {1u, 2u}) {
        for (std::size_t n : {1u, 2u}) {
            CyclicCache cache(signed_alpha());
            const auto u = [&cache, m](const CanonicalForm& q) { return gamma(q, m, cache); };
            const auto report = check_degree_at_most(u, m, m + 2, n, signed_alpha());
            checked += report.checked;
            if (!report.holds) {
                r.detail = "non-zero extension at m = " + std::to_string(m) + ", n = " + std::to_string(n);
                r.witness = show(*report.witness);
                return r;
            }
            for (const auto& cls : enumerate_basis(m, n, signed_alpha())) {
                if (cls.rank() != m) continue;
                InvariantVector unit(m, n);
                unit.add(cls, 1);
                ++units;
                if (extend_invariant(u, star_all(cls.representative())) != unit) {
                    r.detail = "extension at p* is not the unit vector at p";
                    r.witness = show(cls.representative());
                    return r;
                }
            }
        }
    }
    r.passed = true;
    r.detail = std::to_string(checked) + " singular phrases vanish; " + std::to_string(units) +
               " unit vectors at p*";
    return r;
}

// ------------------------------------------------------------------ linking

CheckResult linking_universal() {
    auto r = begin_check(6, "linking matrix has degree 1 and (L, iota) ~ gamma(.,1)");
    std::uint64_t checked = 0;
    for (std::size_t n : {1u, 2u, 3u}) {
        const auto u = [](const CanonicalForm& q) { return linking_matrix(q, signed_alpha()); };
        const auto report = check_degree_at_most(u, 1, 4, n, signed_alpha());
        checked += report.checked;
        if (!report.holds) {
            r.detail = "extension of L non-zero on a 2-singular phrase";
            r.witness = show(*report.witness);
            return r;
        }
    }
    const auto spanning = form("A:+* | A:+*");
    if (is_zero(extend_invariant([](const CanonicalForm& q) { return linking_matrix(q, signed_alpha()); },
                                 spanning))) {
        r.detail = "extension of L vanishes on A*|A*";
        return r;
    }

    std::vector<CanonicalForm> phrases;
    for (std::size_t k = 0; k <= 3; ++k)
        enumerate_forms(k, 2, signed_alpha(), [&](const CanonicalForm& f) { phrases.push_back(f); });
    CyclicCache cache(signed_alpha());
    std::vector<DegreeOneValue> l_values;
    std::vector<InvariantVector> g_values;
    std::vector<std::size_t> l_id, g_id;
    for (const auto& p : phrases) {
        auto l = universal_degree1(p, signed_alpha());
        auto g = gamma(p, 1, cache);
        auto li = std::find(l_values.begin(), l_values.end(), l);
        auto gi = std::find(g_values.begin(), g_values.end(), g);
        l_id.push_back(static_cast<std::size_t>(li - l_values.begin()));
        g_id.push_back(static_cast<std::size_t>(gi - g_values.begin()));
        if (li == l_values.end()) l_values.push_back(std::move(l));
        if (gi == g_values.end()) g_values.push_back(std::move(g));
    }
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < phrases.size(); ++i) {
        for (std::size_t j = i + 1; j < phrases.size(); ++j) {
            ++pairs;
            if ((l_id[i] == l_id[j]) != (g_id[i] == g_id[j])) {
                r.detail = "(L, iota) and gamma(.,1) disagree on a pair";
                r.witness = show(phrases[i]) + " ; " + show(phrases[j]);
                return r;
            }
        }
    }
    r.passed = true;
    r.detail = std::to_string(checked) + " 2-singular phrases (n <= 3) vanish; " + std::to_string(pairs) +
               " pairs of rank <= 3, n = 2 phrases; " + std::to_string(l_values.size()) + " classes";
    return r;
}

// ------------------------------------------------------------------- arnold

CheckResult arnold_normalization() {
    auto r = begin_check(7, "normalization on standard curves w_1..w_5");
    for (std::size_t i = 1; i <= 5; ++i) {
        const auto d = static_cast<std::int64_t>(i);
        const ArnoldValues expected{Rational((d - 1) * (d - 1), 2), Rational((d - 2) * (d - 2), 2) - Rational(3, 2),
                                    -Rational((d - 1) * (d - 1), 4)};
        for (bool negative : {false, true}) {
            const auto w = canonical_iso_form(standard_curve(i, negative));
            const auto got = arnold_invariants(w, signed_alpha());
            if (got != expected) {
                r.detail = "got " + show(got) + ", expected " + show(expected);
                r.witness = show(w);
                return r;
            }
        }
    }
    r.passed = true;
    r.detail = "exact for i = 1..5, both sign variants";
    return r;
}

CheckResult arnold_example() {
    auto r = begin_check(8, "AA(-B)(-B)CC and (-A)(-A)(-B)(-B)CC: equal Arnold values, different gamma(.,2)");
    const auto w1 = form("A:+ A:+ B:- B:- C:+ C:+");
    const auto w2 = form("A:- A:- B:- B:- C:+ C:+");
    const ArnoldValues expected{Rational(-2), Rational(-5), Rational(1)};
    const auto v1 = arnold_invariants(w1, signed_alpha());
    const auto v2 = arnold_invariants(w2, signed_alpha());
    const bool gamma_differs = gamma(w1, 2, signed_alpha()) != gamma(w2, 2, signed_alpha());
    r.passed = v1 == expected && v2 == expected && gamma_differs;
    r.detail = "values " + show(v1) + " and " + show(v2) + (gamma_differs ? "; gamma differs" : "; gamma equal");
    return r;
}

CheckResult arnold_degree() {
    auto r = begin_check(9, "J+, J-, St have degree 2");
    using Fn = std::function<Rational(const CanonicalForm&)>;
    const std::vector<std::pair<std::string, Fn>> invariants{
        {"J+", [](const CanonicalForm& w) { return j_plus(w, signed_alpha()); }},
        {"J-", [](const CanonicalForm& w) { return j_minus(w, signed_alpha()); }},
        {"St", [](const CanonicalForm& w) { return strangeness(w, signed_alpha()); }},
    };
    std::string witnesses;
    for (const auto& [name, u] : invariants) {
        const auto vanish = check_degree_at_most(u, 2, 4, 1, signed_alpha());
        if (!vanish.holds) {
            r.detail = name + " does not vanish on a 3-singular word";
            r.witness = show(*vanish.witness);
            return r;
        }
        const auto two = check_degree_at_most(u, 1, 4, 1, signed_alpha());
        if (two.holds) {
            r.detail = name + " vanishes on every 2-singular word of rank <= 4";
            return r;
        }
        witnesses += (witnesses.empty() ? "" : "; ") + name + ": " + show(*two.witness);
    }
    r.passed = true;
    r.detail = "vanish on all 3-singular words of rank <= 4; non-zero on 2-singular words";
    r.witness = witnesses;
    return r;
}

// -------------------------------------------------------------------- moves

// Every intermediate word of `samples` random walks from w_0..w_3.
std::vector<Nanophrase> spherical_words(std::uint64_t seed, std::uint64_t samples, std::uint64_t step_spread) {
    std::vector<Nanophrase> words;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const auto sample = spherical_sampler(seed + k, 3 + k % step_spread, k % 4);
        Nanophrase w = standard_curve(sample.start_index);
        for (const auto& site : sample.trace) {
            w = apply_move(w, site);
            words.push_back(w);
        }
        if (sample.trace.empty()) words.push_back(w);
    }
    return words;
}

ArnoldValues difference(const ArnoldValues& a, const ArnoldValues& b) {
    return {a.j_plus - b.j_plus, a.j_minus - b.j_minus, a.strangeness - b.strangeness};
}

// Move-3 sites are rare, so they are scanned on the larger `move3_words`
// set; moves 1 and 2 are scanned on `words`.
CheckResult move_behaviour(const std::vector<Nanophrase>& words, const std::vector<Nanophrase>& move3_words) {
    auto r = begin_check(10, "jumps of J+, J-, St under regular homotopy moves");
    // Per (move, direction): set of observed signs of the moving invariant.
    std::map<std::pair<int, bool>, std::set<int>> signs;
    std::map<std::pair<int, bool>, std::size_t> sites;
    std::map<std::string, std::size_t> other_move3;
    const auto scan = [&](const Nanophrase& w, std::initializer_list<int> moves) -> bool {
        const auto before = arnold_invariants(canonical_iso_form(w), signed_alpha());
        for (int move : moves) {
            for (bool inverse : {false, true}) {
                for (const auto& site : enumerate_move_sites(w, move, inverse)) {
                    const auto after = apply_move(w, site);
                    const auto d = difference(arnold_invariants(canonical_iso_form(after), signed_alpha()), before);
                    const Rational zero(0);
                    bool ok = true;
                    int sign = 0;
                    if (move == 1) {
                        ok = abs(d.j_plus) == Rational(2) && d.j_minus == zero && d.strangeness == zero;
                        sign = d.j_plus > zero ? 1 : -1;
                    } else if (move == 2) {
                        ok = d.j_plus == zero && abs(d.j_minus) == Rational(2) && d.strangeness == zero;
                        sign = d.j_minus > zero ? 1 : -1;
                    } else {
                        const auto& word = w.components().front();
                        const int a = sign_of(w.letter(word[site.first]).projection, signed_alpha());
                        const int b = sign_of(w.letter(word[site.first + 1]).projection, signed_alpha());
                        const int c = sign_of(w.letter(word[site.second + 1 - (inverse ? 1 : 0)]).projection,
                                              signed_alpha());
                        if (a != b || b != c) {
                            other_move3[show(d)] += 1;
                            continue;
                        }
                        ok = d.j_plus == zero && d.j_minus == zero && abs(d.strangeness) == Rational(1);
                        sign = d.strangeness > zero ? 1 : -1;
                    }
                    if (!ok) {
                        r.detail = "move " + describe(site) + " changes the values by " + show(d);
                        r.witness = format_phrase(w);
                        return false;
                    }
                    signs[{move, inverse}].insert(sign);
                    sites[{move, inverse}] += 1;
                }
            }
        }
        return true;
    };
    for (const auto& w : words)
        if (!scan(w, {1, 2})) return r;
    for (const auto& w : move3_words)
        if (!scan(w, {3})) return r;
    std::ostringstream detail;
    bool consistent = true;
    for (int move : {1, 2, 3}) {
        for (bool inverse : {false, true}) {
            const auto& s = signs[{move, inverse}];
            const char* what = move == 1 ? "J+" : move == 2 ? "J-" : "St";
            const int size = move == 3 ? 1 : 2;
            detail << "move " << move << (inverse ? "^-1" : "") << ": " << sites[{move, inverse}] << " sites, d" << what
                   << " in {";
            for (int x : s) detail << (x > 0 ? "+" : "-") << size << (x == *s.rbegin() ? "" : ",");
            detail << "}; ";
            if (s.size() > 1 && move == 1) consistent = false;
            if (sites[{move, inverse}] == 0) consistent = false;
        }
    }
    detail << "non-equal-sign move-3 sites:";
    if (other_move3.empty()) detail << " none";
    for (const auto& [d, count] : other_move3) detail << " " << d << " x" << count;
    r.passed = consistent;
    r.detail = detail.str();
    return r;
}

CheckResult spherical_shift_invariance(const std::vector<Nanophrase>& words) {
    auto r = begin_check(11, "J+, J-, St constant on cyclic orbits of spherical words");
    std::size_t members = 0;
    for (const auto& w : words) {
        const auto f = canonical_iso_form(w);
        const auto reference = arnold_invariants(f, signed_alpha());
        for (const auto& g : cyclic_orbit(f, signed_alpha())) {
            ++members;
            if (arnold_invariants(g, signed_alpha()) != reference) {
                r.detail = "orbit member with different values";
                r.witness = format_phrase(w);
                return r;
            }
        }
    }
    r.passed = words.size() >= 50;
    r.detail = std::to_string(words.size()) + " spherical words, " + std::to_string(members) + " orbit members";
    return r;
}

CheckResult seven_functionals(const std::vector<Nanophrase>& words) {
    auto r = begin_check(12, "seven degree-<=2 functionals are independent on spherical words");
    const std::vector<CanonicalForm> classes{form("A:+ A:+ B:+ B:+"), form("A:+ A:+ B:- B:-"),
                                             form("A:- A:- B:- B:-"), form("A:+ B:+ A:+ B:+"), form("A:+ A:+")};
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& w : words) {
        const auto f = canonical_iso_form(w);
        std::vector<std::int64_t> row;
        for (const auto& c : classes) row.push_back(pair_class(c, f, signed_alpha()));
        row.push_back(pair(CanonicalForm(1), f));
        row.push_back(signed_pairing(patterns::abab(), f, signed_alpha()));
        rows.push_back(std::move(row));
    }
    const std::size_t rank = rational_rank(rows);
    r.passed = rank == 7;
    r.detail = "rank " + std::to_string(rank) + " over " + std::to_string(rows.size()) + " words";
    return r;
}

void append(SuiteReport& report, std::string_view suite, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (suite == "theta-phi") {
        report.checks.push_back(subphrase_example(rng));
        report.checks.push_back(orbit_examples());
        report.checks.push_back(theta_phi_inverse(rng));
    } else if (suite == "u-hat") {
        report.checks.push_back(u_hat_order(rng));
    } else if (suite == "gamma-degree") {
        report.checks.push_back(gamma_degree());
    } else if (suite == "linking") {
        report.checks.push_back(linking_universal());
    } else if (suite == "arnold") {
        report.checks.push_back(arnold_normalization());
        report.checks.push_back(arnold_example());
        report.checks.push_back(arnold_degree());
    } else if (suite == "moves") {
        const auto words = spherical_words(seed, 60, 5);
        report.checks.push_back(move_behaviour(words, spherical_words(seed, 400, 8)));
        report.checks.push_back(spherical_shift_invariance(words));
        report.checks.push_back(seven_functionals(words));
    } else {
        throw DomainError("verify", "unknown suite '" + std::string(suite) + "'");
    }
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theta-phi", "u-hat", "gamma-degree", "linking", "arnold", "moves"};
    return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
    SuiteReport report{std::string(name), {}};
    if (name == "all") {
        for (const auto& suite : suite_names()) append(report, suite, seed);
    } else {
        append(report, name, seed);
    }
    return report;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                                  [c](const auto& row) { return row[c] != Rational(0); });
        if (pivot == m.end()) continue;
        std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == Rational(0)) continue;
            const Rational factor = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace nano
