#include "nano/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nano/algebra.hpp"
#include "nano/arnold.hpp"
#include "nano/canonical.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/finite_type.hpp"
#include "nano/linking.hpp"
#include "nano/moves.hpp"
#include "nano/notation.hpp"
#include "nano/verify.hpp"

namespace nano::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct RunConfig {
    std::string alpha;
    std::string nu;
    Format format = Format::text;
    std::size_t max_rank = kDefaultMaxRank;
    std::uint64_t seed = 20240601;

    Alphabet alphabet() const {
        if (alpha.empty() && nu.empty()) return Alphabet::signed_alphabet();
        if (alpha.find('=') != std::string::npos) return Alphabet::parse_declaration(alpha);
        if (alpha.empty()) throw DomainError("config", "--nu given without --alpha");
        return Alphabet::parse(alpha, nu);
    }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

CanonicalForm read_form(const std::string& text, const Alphabet& alphabet) {
    return canonical_iso_form(parse_phrase(text, alphabet));
}

Json linking_json(const LinkingMatrix& l, const Alphabet& alphabet) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < l.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < l.size(); ++j) {
            Json entry = Json::object();
            for (const auto& [symbol, coefficient] : l.at(i, j)) entry[alphabet.name(symbol)] = coefficient;
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json gamma_json(const InvariantVector& v, const Alphabet& alphabet) {
    Json obj = Json::object();
    for (const auto& [cls, coefficient] : v.terms()) obj[format_form(cls.representative(), alphabet)] = coefficient;
    return obj;
}

// Degree report for ftcheck, shared by every value type.
template <class F>
void degree_report(F&& u, std::size_t m, std::size_t max_rank, std::size_t n, bool exact,
                   const Alphabet& alphabet, Format format, std::ostream& out) {
    const auto report = check_degree_at_most(u, m, max_rank, n, alphabet);
    std::optional<bool> reaches;
    if (exact && report.holds) reaches = m == 0 ? true : check_degree_exact(u, m, n, alphabet);
    const bool pass = report.holds && reaches.value_or(true);
    if (format == Format::json) {
        Json j{{"degree_at_most", m}, {"max_rank", max_rank}, {"components", n}, {"checked", report.checked},
               {"holds", report.holds}};
        j["witness"] = report.witness ? Json(format_form(*report.witness, alphabet)) : Json(nullptr);
        if (reaches) j["degree_exact"] = *reaches;
        j["pass"] = pass;
        out << j.dump() << '\n';
        return;
    }
    out << (pass ? "PASS" : "FAIL") << ": degree <= " << m << " on " << report.checked
        << " phrases with " << (m + 1) << " singular letters, rank <= " << max_rank << ", n = " << n << '\n';
    if (report.witness) out << "witness: " << format_form(*report.witness, alphabet) << '\n';
    if (reaches) out << "degree exactly " << m << ": " << (*reaches ? "yes" : "no") << '\n';
}

struct Invocation {
    std::function<int()> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of nanowords and nanophrases", "nanoinv"};
    app.require_subcommand(1);
    RunConfig config;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--alpha", config.alpha, "Projection symbols, e.g. \"a,b,c\", or a full declaration")
        ->capture_default_str();
    app.add_option("--nu", config.nu, "Involution as transpositions, e.g. \"a<->b\"");
    app.add_option("--format", config.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--max-rank", config.max_rank, "Largest rank accepted by enumerations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for randomized suites")->capture_default_str();

    Invocation inv;
    auto fallthrough = [](CLI::App* sub) { sub->fallthrough(); };

    // rank
    std::string phrase;
    {
        auto* sub = app.add_subcommand("rank", "Number of letters");
        sub->add_option("phrase", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto p = parse_phrase(phrase, config.alphabet());
                if (config.format == Format::json)
                    out << Json{{"rank", rank(p)}}.dump() << '\n';
                else
                    out << rank(p) << '\n';
                return 0;
            };
        });
    }
    // canon
    bool cyclic = false;
    {
        auto* sub = app.add_subcommand("canon", "Canonical isomorphism form");
        sub->add_option("phrase", phrase)->required();
        sub->add_flag("--cyclic", cyclic, "Print the cyclic class representative instead");
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                auto f = read_form(phrase, alphabet);
                if (cyclic) f = cyclic_canonical(f, alphabet).representative();
                const auto text = format_form(f, alphabet);
                if (config.format == Format::json)
                    out << Json{{"canonical", text}}.dump() << '\n';
                else
                    out << text << '\n';
                return 0;
            };
        });
    }
    // orbit
    {
        auto* sub = app.add_subcommand("orbit", "Members of the shift orbit, sorted");
        sub->add_option("phrase", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                const auto orbit = cyclic_orbit(read_form(phrase, alphabet), alphabet);
                Json j = Json::array();
                for (const auto& f : orbit) {
                    if (config.format == Format::json)
                        j.push_back(format_form(f, alphabet));
                    else
                        out << format_form(f, alphabet) << '\n';
                }
                if (config.format == Format::json) out << j.dump() << '\n';
                return 0;
            };
        });
    }
    // subphrases
    {
        auto* sub = app.add_subcommand("subphrases", "All subphrases in enumeration order");
        sub->add_option("phrase", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto p = parse_phrase(phrase, config.alphabet());
                Json j = Json::array();
                for (const auto& s : subphrases(p, config.max_rank)) {
                    if (config.format == Format::json)
                        j.push_back(format_phrase(s));
                    else
                        out << format_phrase(s) << '\n';
                }
                if (config.format == Format::json) out << j.dump() << '\n';
                return 0;
            };
        });
    }
    // pair, pairclass
    std::string w_text, v_text;
    for (const char* name : {"pair", "pairclass"}) {
        const bool by_class = std::string_view(name) == "pairclass";
        auto* sub = app.add_subcommand(name, by_class ? "Subphrases of v in the cyclic class of w"
                                                      : "Subphrases of v isomorphic to w");
        sub->add_option("w", w_text)->required();
        sub->add_option("v", v_text)->required();
        fallthrough(sub);
        sub->callback([&, by_class] {
            inv.action = [&, by_class] {
                const auto alphabet = config.alphabet();
                const auto w = read_form(w_text, alphabet);
                const auto v = read_form(v_text, alphabet);
                const auto value = by_class ? pair_class(w, v, alphabet) : pair(w, v);
                if (config.format == Format::json)
                    out << Json{{"pair", value}}.dump() << '\n';
                else
                    out << value << '\n';
                return 0;
            };
        });
    }
    // gamma
    std::size_t m = 1;
    std::vector<std::string> phrases;
    {
        auto* sub = app.add_subcommand("gamma", "Universal degree-m invariant; CSV tabulates several phrases");
        sub->add_option("-m", m, "Degree")->required();
        sub->add_option("phrases", phrases)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                CyclicCache cache(alphabet);
                std::vector<CanonicalForm> forms;
                for (const auto& text : phrases) forms.push_back(read_form(text, alphabet));
                if (config.format != Format::csv) {
                    if (forms.size() != 1) throw DomainError("gamma", "several phrases need --format csv");
                    out << gamma_json(gamma(forms.front(), m, cache), alphabet).dump() << '\n';
                    return 0;
                }
                const std::size_t n = forms.front().component_count();
                for (const auto& f : forms)
                    if (f.component_count() != n)
                        throw DomainError("gamma", "all phrases of a table must have the same component count");
                const auto basis = enumerate_basis(m, n, alphabet);
                out << "phrase";
                for (const auto& cls : basis) out << ',' << csv_field(format_form(cls.representative(), alphabet));
                out << '\n';
                for (std::size_t i = 0; i < forms.size(); ++i) {
                    const auto value = gamma(forms[i], m, cache);
                    out << csv_field(phrases[i]);
                    for (const auto& cls : basis) out << ',' << value.coefficient(cls);
                    out << '\n';
                }
                return 0;
            };
        });
    }
    // basis
    std::size_t n = 1;
    {
        auto* sub = app.add_subcommand("basis", "Cyclic classes of rank <= m with n components");
        sub->add_option("-m", m, "Degree")->required();
        sub->add_option("-n", n, "Component count")->check(CLI::PositiveNumber)->capture_default_str();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                const auto basis = enumerate_basis(m, n, alphabet);
                if (config.format == Format::csv) out << "index,rank,class\n";
                Json j = Json::array();
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    const auto text = format_form(basis[i].representative(), alphabet);
                    switch (config.format) {
                        case Format::csv: out << i << ',' << basis[i].rank() << ',' << csv_field(text) << '\n'; break;
                        case Format::json: j.push_back(text); break;
                        case Format::text: out << text << '\n'; break;
                    }
                }
                if (config.format == Format::json) out << j.dump() << '\n';
                return 0;
            };
        });
    }
    // ftcheck
    std::string invariant;
    std::optional<std::size_t> max_rank_check;
    bool exact = false;
    {
        auto* sub = app.add_subcommand("ftcheck", "Exhaustive finite-type degree check");
        sub->add_option("--invariant", invariant,
                        "rank | iota | linking | gamma:<k> | pairclass:<phrase> | jplus | jminus | st")
            ->required();
        sub->add_option("-m", m, "Claimed degree")->required();
        sub->add_option("-R", max_rank_check, "Largest rank to enumerate (default m + 2)");
        sub->add_option("-n", n, "Component count")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_flag("--exact", exact, "Also check that the degree is reached");
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                const std::size_t R = max_rank_check.value_or(m + 2);
                if (R > config.max_rank)
                    throw CapacityError("ftcheck", "R <= --max-rank", static_cast<long long>(config.max_rank),
                                        static_cast<long long>(R));
                auto report = [&](auto&& u) { degree_report(u, m, R, n, exact, alphabet, config.format, out); };
                if (invariant == "rank") {
                    report([](const CanonicalForm& q) { return static_cast<std::int64_t>(q.rank()); });
                } else if (invariant == "iota") {
                    report([](const CanonicalForm& q) { return iota(q); });
                } else if (invariant == "linking") {
                    report([&](const CanonicalForm& q) { return linking_matrix(q, alphabet); });
                } else if (invariant.rfind("gamma:", 0) == 0) {
                    std::size_t k = 0;
                    try {
                        k = std::stoul(invariant.substr(6));
                    } catch (const std::exception&) {
                        throw DomainError("ftcheck", "gamma:<k> needs a non-negative integer k");
                    }
                    CyclicCache cache(alphabet);
                    report([&cache, k](const CanonicalForm& q) { return gamma(q, k, cache); });
                } else if (invariant.rfind("pairclass:", 0) == 0) {
                    const auto w = read_form(invariant.substr(10), alphabet);
                    report([&](const CanonicalForm& q) { return pair_class(w, q, alphabet); });
                } else if (invariant == "jplus") {
                    report([&](const CanonicalForm& q) { return j_plus(q, alphabet); });
                } else if (invariant == "jminus") {
                    report([&](const CanonicalForm& q) { return j_minus(q, alphabet); });
                } else if (invariant == "st") {
                    report([&](const CanonicalForm& q) { return strangeness(q, alphabet); });
                } else {
                    throw DomainError("ftcheck", "unknown invariant '" + invariant + "'");
                }
                return 0;
            };
        });
    }
    // linking
    {
        auto* sub = app.add_subcommand("linking", "Linking matrix as JSON");
        sub->add_option("phrase", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                out << linking_json(linking_matrix(read_form(phrase, alphabet), alphabet), alphabet).dump() << '\n';
                return 0;
            };
        });
    }
    // arnold
    {
        auto* sub = app.add_subcommand("arnold", "J+, J-, St of a signed word as JSON");
        sub->add_option("word", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto alphabet = config.alphabet();
                const auto v = arnold_invariants(read_form(phrase, alphabet), alphabet);
                out << Json{{"Jplus", to_string(v.j_plus)}, {"Jminus", to_string(v.j_minus)},
                            {"St", to_string(v.strangeness)}}
                           .dump()
                    << '\n';
                return 0;
            };
        });
    }
    // move
    int move_id = 1;
    std::size_t site_index = 0;
    bool inverse = false;
    bool list = false;
    {
        auto* sub = app.add_subcommand("move", "Apply a regular homotopy move to a signed word");
        sub->add_option("--id", move_id, "Move 1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
        sub->add_option("--site", site_index, "Index into the site list")->capture_default_str();
        sub->add_flag("--inverse", inverse, "Use the inverse move");
        sub->add_flag("--list", list, "List the sites instead of applying one");
        sub->add_option("word", phrase)->required();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto w = parse_phrase(phrase, config.alphabet());
                const auto sites = enumerate_move_sites(w, move_id, inverse);
                if (list) {
                    Json j = Json::array();
                    for (std::size_t i = 0; i < sites.size(); ++i) {
                        if (config.format == Format::json)
                            j.push_back(describe(sites[i]));
                        else
                            out << i << ": " << describe(sites[i]) << '\n';
                    }
                    if (config.format == Format::json) out << j.dump() << '\n';
                    return 0;
                }
                if (site_index >= sites.size())
                    throw DomainError("move", "site " + std::to_string(site_index) + " out of range; the word has " +
                                                  std::to_string(sites.size()) + " sites for this move");
                const auto result = apply_move(w, sites[site_index]);
                if (config.format == Format::json)
                    out << Json{{"site", describe(sites[site_index])}, {"word", format_phrase(result)}}.dump() << '\n';
                else
                    out << format_phrase(result) << '\n';
                return 0;
            };
        });
    }
    // sample
    std::size_t steps = 10, start = 1;
    std::optional<std::uint64_t> sample_seed;
    {
        auto* sub = app.add_subcommand("sample", "Random spherical signed word and its move trace");
        sub->add_option("--steps", steps)->capture_default_str();
        sub->add_option("--start", start, "Index i of the standard curve w_i")->capture_default_str();
        sub->add_option("--seed", sample_seed, "Overrides the global seed");
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto sample = spherical_sampler(sample_seed.value_or(config.seed), steps, start);
                if (config.format == Format::json) {
                    Json trace = Json::array();
                    for (const auto& site : sample.trace) trace.push_back(describe(site));
                    out << Json{{"start", sample.start_index}, {"word", format_phrase(sample.word)},
                                {"trace", trace}}
                               .dump()
                        << '\n';
                } else {
                    out << format_phrase(sample.word) << '\n';
                    for (const auto& site : sample.trace) out << "  " << describe(site) << '\n';
                }
                return 0;
            };
        });
    }
    // verify
    std::string suite = "all";
    {
        auto* sub = app.add_subcommand("verify", "Run acceptance suites");
        sub->add_option("--suite", suite, "theta-phi | u-hat | gamma-degree | linking | arnold | moves | all")
            ->capture_default_str();
        fallthrough(sub);
        sub->callback([&] {
            inv.action = [&] {
                const auto report = run_suite(suite, config.seed);
                if (config.format == Format::json) {
                    Json checks = Json::array();
                    for (const auto& c : report.checks)
                        checks.push_back({{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed},
                                          {"detail", c.detail}, {"witness", c.witness}});
                    out << Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}}.dump()
                        << '\n';
                } else {
                    for (const auto& c : report.checks) {
                        out << (c.passed ? "[PASS] " : "[FAIL] ") << "C" << c.criterion << ' ' << c.name << ": "
                            << c.detail << '\n';
                        if (!c.witness.empty()) out << "       witness: " << c.witness << '\n';
                    }
                }
                return report.passed() ? 0 : 1;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return inv.action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace nano::cli
