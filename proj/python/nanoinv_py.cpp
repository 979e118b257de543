#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nano/algebra.hpp"
#include "nano/arnold.hpp"
#include "nano/canonical.hpp"
#include "nano/cli.hpp"
#include "nano/cyclic.hpp"
#include "nano/error.hpp"
#include "nano/finite_type.hpp"
#include "nano/notation.hpp"
#include "nano/verify.hpp"

namespace py = pybind11;
using namespace nano;

namespace {

Alphabet alphabet_from(const std::string& alpha, const std::string& nu) {
    if (alpha.empty()) return Alphabet::signed_alphabet();
    return Alphabet::parse(alpha, nu);
}

CanonicalForm form(const std::string& text, const Alphabet& a) { return canonical_iso_form(parse_phrase(text, a)); }

std::string fraction(const Rational& r) { return to_string(r); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nanophrase invariants (C++ core)";

    py::register_exception<Error>(m, "NanoError", PyExc_ValueError);

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init(&alphabet_from), py::arg("symbols") = "", py::arg("nu") = "")
        .def_property_readonly("symbols", &Alphabet::symbols)
        .def("declaration", &Alphabet::declaration)
        .def("__repr__", [](const Alphabet& a) { return "Alphabet('" + a.declaration() + "')"; });

    const auto signed_default = Alphabet::signed_alphabet();

    m.def(
        "rank", [](const std::string& p, const Alphabet& a) { return rank(parse_phrase(p, a)); }, py::arg("phrase"),
        py::arg("alphabet") = signed_default);
    m.def(
        "canonical",
        [](const std::string& p, const Alphabet& a) { return format_form(form(p, a), a); }, py::arg("phrase"),
        py::arg("alphabet") = signed_default, "Canonical isomorphism form in notation text.");
    m.def(
        "cyclic_canonical",
        [](const std::string& p, const Alphabet& a) {
            return format_form(cyclic_canonical(form(p, a), a).representative(), a);
        },
        py::arg("phrase"), py::arg("alphabet") = signed_default);
    m.def(
        "orbit",
        [](const std::string& p, const Alphabet& a) {
            std::vector<std::string> out;
            for (const auto& f : cyclic_orbit(form(p, a), a)) out.push_back(format_form(f, a));
            return out;
        },
        py::arg("phrase"), py::arg("alphabet") = signed_default);
    m.def(
        "subphrases",
        [](const std::string& p, const Alphabet& a) {
            std::vector<std::string> out;
            for (const auto& s : subphrases(parse_phrase(p, a))) out.push_back(format_phrase(s));
            return out;
        },
        py::arg("phrase"), py::arg("alphabet") = signed_default);
    m.def(
        "pair", [](const std::string& w, const std::string& v, const Alphabet& a) { return pair(form(w, a), form(v, a)); },
        py::arg("w"), py::arg("v"), py::arg("alphabet") = signed_default);
    m.def(
        "pair_class",
        [](const std::string& w, const std::string& v, const Alphabet& a) { return pair_class(form(w, a), form(v, a), a); },
        py::arg("w"), py::arg("v"), py::arg("alphabet") = signed_default);
    m.def(
        "gamma",
        [](const std::string& p, std::size_t degree, const Alphabet& a) {
            std::map<std::string, std::int64_t> out;
            const auto value = gamma(form(p, a), degree, a);
            for (const auto& [cls, c] : value.terms())
                out[format_form(cls.representative(), a)] = c;
            return out;
        },
        py::arg("phrase"), py::arg("m"), py::arg("alphabet") = signed_default,
        "Coefficients of the universal degree-m invariant, keyed by class text.");
    m.def(
        "arnold",
        [](const std::string& w) {
            const auto a = Alphabet::signed_alphabet();
            const auto v = arnold_invariants(form(w, a), a);
            return std::map<std::string, std::string>{
                {"Jplus", fraction(v.j_plus)}, {"Jminus", fraction(v.j_minus)}, {"St", fraction(v.strangeness)}};
        },
        py::arg("word"));
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const auto& c : run_suite(suite, seed).checks) {
                py::dict d;
                d["criterion"] = c.criterion;
                d["name"] = c.name;
                d["passed"] = c.passed;
                d["detail"] = c.detail;
                d["witness"] = c.witness;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 20240601);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the nanoinv command line; returns (exit_code, stdout, stderr).");
}
