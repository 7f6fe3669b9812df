#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qkz/basis.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/psivec.hpp"
#include "qkz/resulttable.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/tilings.hpp"
#include "qkz/verify.hpp"

namespace py = pybind11;
using namespace qkz;

namespace {

py::int_ big(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list poly_coeffs(const TauPoly& p) {
    py::list out;
    if (p.is_zero()) {
        out.append(big(Int(0)));
        return out;
    }
    for (int k = 0; k <= p.degree(); ++k) out.append(big(p.coeff(k)));
    return out;
}

py::list grid(const BiPoly& p) {
    py::list out;
    for (const auto& row : grid_strings(p)) {
        py::list r;
        for (const auto& s : row) r.append(big(Int(s)));
        out.append(r);
    }
    return out;
}

py::dict pattern_dict(const LinkPattern& pi) {
    py::dict d;
    d["pairing"] = pi.pairing();
    d["openings"] = pi.openings();
    d["closings"] = pi.closings();
    d["boxes"] = pi.box_count();
    d["text"] = pi.str();
    return d;
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

PsiVector psi_any(int N, int jobs) {
    if (N < 2) throw std::domain_error("size must be at least 2");
    return N % 2 == 0 ? psi_even(N / 2, jobs) : psi_odd((N - 1) / 2, jobs);
}

}  // namespace

PYBIND11_MODULE(qkzloop, m) {
    m.doc() = "exact ground-state components of boundary loop models";
    m.attr("__version__") = QKZLOOP_VERSION_STRING;

    m.def("catalan", [](int n) { return big(catalan(n)); },
          py::arg("n"), "Catalan number");
    m.def("lp_count", [](int N) { return big(lp_count(N)); },
          py::arg("size"), "number of planar pairings of the given size");
    m.def("patterns",
          [](int N) {
              py::list out;
              for (const auto& pi : enumerate_patterns(N)) out.append(pattern_dict(pi));
              return out;
          },
          py::arg("size"), "all pairings in canonical order");

    m.def("psi",
          [](int N, int jobs) {
              PsiVector v = psi_any(N, jobs);
              py::list comps;
              for (size_t i = 0; i < v.index.size(); ++i) {
                  py::dict d = pattern_dict(v.index[i]);
                  d["coeffs"] = poly_coeffs(v.components[i]);
                  d["at_one"] = big(v.components[i].eval(1));
                  comps.append(d);
              }
              py::dict out;
              out["N"] = v.N;
              out["normalization"] = v.normalization;
              out["components"] = comps;
              return out;
          },
          py::arg("size"), py::arg("jobs") = 1,
          "solution vector, one integer polynomial in tau per pairing");
    m.def("psi_json",
          [](int N, int jobs) { return to_json(make_psi_table(psi_any(N, jobs))); },
          py::arg("size"), py::arg("jobs") = 1,
          "solution vector in the interchange table format");

    m.def("closing_component",
          [](const std::vector<int>& b, bool odd) {
              ClosingIndex ci(b);
              return poly_coeffs(odd ? k_odd(ci) : k_even(ci));
          },
          py::arg("closings"), py::arg("odd") = false,
          "constant-term component for one closing sequence");

    m.def("sum_rule",
          [](int n, const std::string& parity) {
              SumRuleReport rep = sum_rule_report(n, parse_parity(parity));
              py::dict spec;
              for (const auto& [name, p] : rep.specializations)
                  spec[name.c_str()] = poly_coeffs(p);
              py::dict out;
              out["n"] = rep.n;
              out["parity"] = parity;
              out["direct"] = grid(rep.direct);
              out["determinant"] = grid(rep.determinant);
              out["convention"] = rep.convention_map;
              out["specializations"] = spec;
              return out;
          },
          py::arg("n"), py::arg("parity"),
          "component generating function by both routes, rows indexed by t power");

    m.def("asm_count", [](int n) { return big(asm_count(n)); }, py::arg("n"));
    m.def("vsasm_count", [](int N) { return big(vsasm_count(N)); }, py::arg("size"));
    m.def("nilp_count",
          [](const std::vector<int>& b) { return big(count_nilp(ClosingIndex(b))); },
          py::arg("closings"), "non-intersecting path families to the closings");
    m.def("array_poly",
          [](int n, int variant) { return poly_coeffs(t_poly(n, variant)); },
          py::arg("n"), py::arg("variant") = 1,
          "triangular-array generating polynomial, coefficients by x power");

    m.def("suite_names", [] { return verify_suite_names(); });
    m.def("verify",
          [](const std::vector<std::string>& suites, int max_n, int jobs) {
              VerifyReport rep = run_suites(suites, max_n, jobs);
              py::list out;
              for (const auto& [suite, checks] : rep.suites)
                  for (const auto& c : checks) {
                      py::dict d;
                      d["suite"] = suite;
                      d["check"] = c.name;
                      d["ok"] = c.ok;
                      d["detail"] = c.detail;
                      out.append(d);
                  }
              return out;
          },
          py::arg("suites") = std::vector<std::string>{}, py::arg("max_n") = 3,
          py::arg("jobs") = 1, "run the named check suites (all when empty)");
}
