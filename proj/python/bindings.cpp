#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "multisym/basis.hpp"
#include "multisym/esym.hpp"
#include "multisym/eval.hpp"
#include "multisym/expr.hpp"
#include "multisym/linsolve.hpp"
#include "multisym/margins.hpp"
#include "multisym/weyl.hpp"

namespace py = pybind11;
using namespace multisym;

namespace {

NameStyle style(bool phase) { return phase ? NameStyle::Phase : NameStyle::General; }

Polynomial parse_one(const std::string& src, VarMode& mode) {
  VarMode local = VarMode::None;
  int max_coord = 0;
  Polynomial p = parse_polynomial(src, local, max_coord);
  if (local != VarMode::None) {
    if (mode != VarMode::None && mode != local)
      throw std::invalid_argument(
          "cannot mix phase variables (x, y) with indexed variables (y1, ...)");
    mode = local;
  }
  return p;
}

PolyTuple parse_tuple(const std::vector<std::string>& srcs, VarMode& mode) {
  PolyTuple out;
  for (const std::string& s : srcs) out.push_back(parse_one(s, mode));
  return out;
}

py::list esum_terms(const ESum& sum, bool phase) {
  py::list out;
  for (const ESymbol& s : sum.terms()) {
    py::dict entry;
    entry["coeff"] = rational_to_string(s.coeff);
    entry["hbar"] = s.hbar;
    entry["index"] = s.index;
    py::list args;
    for (const Polynomial& a : s.args) args.append(a.to_string(style(phase)));
    entry["args"] = args;
    out.append(entry);
  }
  return out;
}

py::list poly_terms(const Polynomial& p, bool phase) {
  py::list out;
  for (const auto& [m, c] : p.terms()) {
    py::dict mono;
    for (const auto& [v, e] : m.factors()) mono[py::str(var_name(v, style(phase)))] = e;
    out.append(py::make_tuple(mono, rational_to_string(c)));
  }
  return out;
}

EvalResult evaluate_expr(const std::string& expr, int n, std::optional<int> d,
                         std::optional<int> order, int sign, bool verify) {
  EvalConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.order = order;
  cfg.sign = sign;
  cfg.verify = verify;
  return evaluate(parse(expr), cfg);
}

GeneratorSet generator_set(const std::string& kind) {
  if (kind == "elementary") return GeneratorSet::Elementary;
  if (kind == "homogeneous") return GeneratorSet::Homogeneous;
  if (kind == "power_sums") return GeneratorSet::PowerSums;
  throw std::invalid_argument(
      "generator set must be 'elementary', 'homogeneous' or 'power_sums'");
}

}  // namespace

PYBIND11_MODULE(_multisym, m) {
  m.doc() = "Exact multi-symmetric functions with classical and quantum products";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const EvalError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def("__str__", [](const Polynomial& p) { return p.to_string(); })
      .def("__repr__",
           [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; })
      .def("to_string", [](const Polynomial& p, bool phase) {
             return p.to_string(style(phase));
           },
           py::arg("phase") = false)
      .def("terms", &poly_terms, py::arg("phase") = false,
           "List of (monomial dict, coefficient string) pairs")
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree)
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, int k) { return a.pow(k); });

  py::class_<HbarSeries>(m, "HbarSeries")
      .def(py::init<>())
      .def("__str__", [](const HbarSeries& s) { return s.to_string(); })
      .def("to_string", [](const HbarSeries& s, bool phase) {
             return s.to_string(style(phase));
           },
           py::arg("phase") = false)
      .def("coefficient", &HbarSeries::coefficient, py::arg("degree"))
      .def("degrees",
           [](const HbarSeries& s) {
             std::vector<int> out;
             for (const auto& [m, p] : s.coefficients()) out.push_back(m);
             return out;
           })
      .def("max_degree", &HbarSeries::max_degree)
      .def("is_zero", &HbarSeries::is_zero)
      .def("__eq__",
           [](const HbarSeries& a, const HbarSeries& b) { return a == b; });

  py::class_<ESum>(m, "ESum")
      .def("__str__", [](const ESum& s) { return s.to_string(); })
      .def("to_string",
           [](const ESum& s, bool phase) { return s.to_string(style(phase)); },
           py::arg("phase") = false)
      .def("terms", &esum_terms, py::arg("phase") = false,
           "Symbols as dicts with coeff, hbar, index and printed arguments")
      .def("expand", &ESum::expand, py::arg("n"))
      .def("__len__", [](const ESum& s) { return s.terms().size(); });

  m.def("parse_poly",
        [](const std::string& src) {
          VarMode mode = VarMode::None;
          return parse_one(src, mode);
        },
        py::arg("src"), "Parse a polynomial in abstract variables");

  m.def("expand_elementary",
        [](const std::vector<int>& alpha, int n) {
          return expand_elementary(alpha, n, static_cast<int>(alpha.size()));
        },
        py::arg("alpha"), py::arg("n"));

  m.def("expand_vaccarino",
        [](const std::vector<std::string>& p, const MultiIndex& alpha, int n) {
          VarMode mode = VarMode::None;
          return expand_vaccarino(parse_tuple(p, mode), alpha, n);
        },
        py::arg("p"), py::arg("alpha"), py::arg("n"));

  m.def("expand_homogeneous",
        [](const std::vector<int>& k, int n) {
          return expand_homogeneous(k, n, static_cast<int>(k.size()));
        },
        py::arg("k"), py::arg("n"));

  m.def("power_sum",
        [](const std::string& m_src, int n) {
          VarMode mode = VarMode::None;
          Polynomial p = parse_one(m_src, mode);
          if (p.terms().size() != 1 || p.terms()[0].second != 1)
            throw std::invalid_argument("power_sum expects a plain monomial");
          return power_sum(p.terms()[0].first, n);
        },
        py::arg("monomial"), py::arg("n"));

  m.def("symmetrize", &symmetrize, py::arg("f"), py::arg("n"));

  m.def("classical_product",
        [](const std::vector<std::string>& p, const MultiIndex& alpha,
           const std::vector<std::string>& q, const MultiIndex& beta, int n) {
          VarMode mode = VarMode::None;
          return classical_product(parse_tuple(p, mode), alpha,
                                   parse_tuple(q, mode), beta, n);
        },
        py::arg("p"), py::arg("alpha"), py::arg("q"), py::arg("beta"), py::arg("n"));

  m.def("quantum_product",
        [](const std::vector<std::string>& p, const MultiIndex& alpha,
           const std::vector<std::string>& q, const MultiIndex& beta, int n,
           std::optional<int> max_hbar) {
          VarMode mode = VarMode::None;
          PolyTuple pt = parse_tuple(p, mode);
          PolyTuple qt = parse_tuple(q, mode);
          if (mode == VarMode::General)
            throw std::invalid_argument(
                "quantum_product arguments use the phase variables x and y");
          return quantum_product(pt, alpha, qt, beta, PhaseContext{n, +1}, max_hbar);
        },
        py::arg("p"), py::arg("alpha"), py::arg("q"), py::arg("beta"), py::arg("n"),
        py::arg("max_hbar") = std::nullopt);

  m.def("star",
        [](const Polynomial& f, const Polynomial& g, int n, std::optional<int> order) {
          return star(HbarSeries(f), HbarSeries(g), PhaseContext{n, +1}, order);
        },
        py::arg("f"), py::arg("g"), py::arg("n"), py::arg("order") = std::nullopt,
        "Star product of point-variable polynomials over n points");

  m.def("commutator",
        [](const Polynomial& f, const Polynomial& g, int n,
           std::optional<int> order) {
          return commutator(HbarSeries(f), HbarSeries(g), PhaseContext{n, +1}, order);
        },
        py::arg("f"), py::arg("g"), py::arg("n"), py::arg("order") = std::nullopt);

  m.def("poisson_bracket",
        [](const Polynomial& f, const Polynomial& g, int n, int sign) {
          return poisson_bracket(f, g, PhaseContext{n, sign});
        },
        py::arg("f"), py::arg("g"), py::arg("n"), py::arg("sign") = 1);

  m.def("bracket_esum",
        [](const std::vector<std::string>& p, const MultiIndex& alpha,
           const std::vector<std::string>& q, const MultiIndex& beta, int n) {
          VarMode mode = VarMode::None;
          return bracket_esum(parse_tuple(p, mode), alpha, parse_tuple(q, mode),
                              beta, PhaseContext{n, +1});
        },
        py::arg("p"), py::arg("alpha"), py::arg("q"), py::arg("beta"), py::arg("n"));

  m.def("enumerate_L",
        [](const std::vector<int>& alpha, const std::vector<int>& beta, int n) {
          py::list out;
          for (const MarginMatrix& g : enumerate_L(alpha, beta, n)) {
            py::list rows;
            for (int l = 0; l < g.row_count(); ++l) {
              py::list row;
              for (int r = 0; r < g.col_count(); ++r) row.append(g.at(l, r));
              rows.append(row);
            }
            out.append(rows);
          }
          return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"));

  m.def("count_L", &count_L, py::arg("alpha"), py::arg("beta"), py::arg("n"));

  m.def("enumerate_Q",
        [](const std::vector<int>& alpha, const std::vector<int>& beta, int n, int m,
           int k_max) {
          py::list out;
          for (const CubicalMatrix& g : enumerate_Q(alpha, beta, n, m, k_max)) {
            py::list cube;
            for (int l = 0; l < g.row_count(); ++l) {
              py::list rows;
              for (int r = 0; r < g.col_count(); ++r) {
                py::list slice;
                for (int k = 0; k <= g.k_bound(); ++k) slice.append(g.at(l, r, k));
                rows.append(slice);
              }
              cube.append(rows);
            }
            out.append(cube);
          }
          return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("m"),
        py::arg("k_max"));

  m.def("decompose",
        [](const Polynomial& f, int n, int d) {
          py::list out;
          for (const auto& [alpha, c] : decompose(f, n, d)) {
            py::list support;
            for (const auto& [mono, mult] : alpha.entries)
              support.append(py::make_tuple(mono.to_string(), mult));
            out.append(py::make_tuple(support, rational_to_string(c)));
          }
          return out;
        },
        py::arg("f"), py::arg("n"), py::arg("d"),
        "Coefficients of an invariant polynomial in the e-basis");

  m.def("verify_generation",
        [](const Polynomial& f, const std::string& kind, int n, int d, int bound) {
          const Certificate cert =
              verify_generation(f, generator_set(kind), n, d, bound);
          py::dict out;
          out["text"] = cert.to_string();
          py::list terms;
          for (const auto& term : cert.terms) {
            py::list factors;
            for (const Generator& g : term.factors) factors.append(g.to_string());
            terms.append(py::make_tuple(factors, rational_to_string(term.coeff)));
          }
          out["terms"] = terms;
          return out;
        },
        py::arg("f"), py::arg("kind"), py::arg("n"), py::arg("d"), py::arg("bound"));

  m.def("evaluate_json",
        [](const std::string& expr, int n, std::optional<int> d,
           std::optional<int> order, int sign, bool verify) {
          return render_json(evaluate_expr(expr, n, d, order, sign, verify), expr);
        },
        py::arg("expr"), py::arg("n") = 2, py::arg("d") = std::nullopt,
        py::arg("order") = std::nullopt, py::arg("sign") = 1,
        py::arg("verify") = false);

  m.def("evaluate_text",
        [](const std::string& expr, int n, std::optional<int> d,
           std::optional<int> order, int sign, bool verify) {
          return render_text(evaluate_expr(expr, n, d, order, sign, verify), expr);
        },
        py::arg("expr"), py::arg("n") = 2, py::arg("d") = std::nullopt,
        py::arg("order") = std::nullopt, py::arg("sign") = 1,
        py::arg("verify") = false);
}
