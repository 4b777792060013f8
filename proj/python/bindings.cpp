#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dahaknots/cli_config.hpp"
#include "dahaknots/errors.hpp"
#include "dahaknots/verify.hpp"

namespace py = pybind11;
using namespace dahaknots;

namespace {

CableSpec make_spec(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                    const std::string& convention) {
    CableSpec spec;
    spec.pairs = pairs;
    if (convention == "topological") spec.convention = Convention::Topological;
    else if (convention == "newton") spec.convention = Convention::Newton;
    else throw usage_error("unknown convention '" + convention + "'");
    spec.validate();
    return spec;
}

TSubst rule_from_string(const std::string& rule) {
    if (rule == "-q^2") return TSubst::MinusQSquared;
    if (rule == "-q^2/t") return TSubst::MinusQSquaredOverT;
    if (rule == "1") return TSubst::One;
    if (rule == "-1/t") return TSubst::MinusInverse;
    throw usage_error("unknown substitution rule '" + rule +
                      "' (expected -q^2, -q^2/t, 1, -1/t)");
}

py::dict report_to_dict(const VerifyReport& rep) {
    py::dict d;
    d["match"] = rep.match;
    d["sign"] = rep.match ? rep.sign : 0;
    if (rep.monomial_k) d["monomial_k"] = *rep.monomial_k;
    else d["monomial_k"] = py::none();
    d["specialized"] = rep.specialized.to_text();
    d["oracle"] = rep.oracle.to_text();
    if (!rep.match) d["diff"] = rep.diff;
    return d;
}

}  // namespace

PYBIND11_MODULE(_dahaknots, m) {
    m.doc() = "exact two-variable cable polynomials with a colored-Jones cross-check";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<pole_error>(m, "PoleError", PyExc_ArithmeticError);

    py::class_<RatQT>(m, "PolyQT")
        .def("__str__", &RatQT::to_text)
        .def("__repr__", [](const RatQT& v) { return "PolyQT(" + v.to_text() + ")"; })
        .def("__eq__", [](const RatQT& a, const RatQT& b) { return a == b; })
        .def("__mul__", [](const RatQT& a, const RatQT& b) { return a * b; })
        .def("__add__", [](const RatQT& a, const RatQT& b) { return a + b; })
        .def("__sub__", [](const RatQT& a, const RatQT& b) { return a - b; })
        .def("__truediv__", [](const RatQT& a, const RatQT& b) { return a / b; })
        .def("__neg__", [](const RatQT& a) { return -a; })
        .def("is_laurent", &RatQT::is_laurent)
        .def("is_zero", &RatQT::is_zero)
        .def("to_json", &RatQT::to_json)
        .def("specialize",
             [](const RatQT& v, const std::string& rule) {
                 return specialize_t(v, rule_from_string(rule));
             },
             py::arg("rule"),
             "substitute t by one of -q^2, -q^2/t, 1, -1/t");

    m.def("q", [](std::int64_t e) { return RatQT::q(e); }, py::arg("e") = 1);
    m.def("t", [](std::int64_t e) { return RatQT::t(e); }, py::arg("e") = 1);
    m.def("constant", [](long v) { return RatQT::from_int(v); });

    m.def(
        "macdonald_poly",
        [](std::int64_t n) {
            SymPoly p = macdonald_poly(n);
            std::vector<std::pair<std::int64_t, RatQT>> out;
            for (const auto& [k, c] : p.coeffs()) out.emplace_back(k, c);
            return out;
        },
        py::arg("n"),
        "coefficients of p_n in the basis m_0 = 1, m_k = X^k + X^-k");

    m.def(
        "sign_macdonald_poly",
        [](std::int64_t n) {
            SymPoly p = sign_macdonald_poly(n);
            std::vector<std::pair<std::int64_t, RatQT>> out;
            for (const auto& [k, c] : p.coeffs()) out.emplace_back(k, c);
            return out;
        },
        py::arg("n"));

    m.def("cherednik_torus",
          [](std::int64_t n, std::int64_t r, std::int64_t s) {
              return cherednik_torus(n, r, s);
          },
          py::arg("n"), py::arg("r"), py::arg("s"));

    m.def("sign_torus",
          [](std::int64_t n, std::int64_t r, std::int64_t s) { return sign_torus(n, r, s); },
          py::arg("n"), py::arg("r"), py::arg("s"));

    m.def(
        "iterated_topological",
        [](std::int64_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
           const std::string& convention) {
            return iterated_topological(n, make_spec(pairs, convention));
        },
        py::arg("n"), py::arg("pairs"), py::arg("convention") = "topological");

    m.def(
        "cd_newton",
        [](std::int64_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
            return cd_newton(n, make_spec(pairs, "newton"));
        },
        py::arg("n"), py::arg("pairs"));

    m.def(
        "oracle_jones",
        [](std::int64_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
           const std::string& convention) {
            return oracle_jones(n, make_spec(pairs, convention)).to_ratqt();
        },
        py::arg("n"), py::arg("pairs"), py::arg("convention") = "topological");

    m.def(
        "newton_to_topological",
        [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
            return newton_to_topological(make_spec(pairs, "newton"));
        },
        py::arg("pairs"));

    m.def(
        "verify",
        [](std::int64_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
           const std::string& convention) {
            CableSpec spec = make_spec(pairs, convention);
            VerifyReport rep = spec.convention == Convention::Newton
                                   ? verify_cd(n, spec)
                                   : verify_iterated(n, spec);
            return report_to_dict(rep);
        },
        py::arg("n"), py::arg("pairs"), py::arg("convention") = "topological",
        "specialize at t = -q^2 and compare with the cabling oracle");

    m.def("selftest", [] { return run_selftest(); },
          "run the module invariant suites; returns True when all pass");
}
