// Acceptance suite: end-to-end checks with pinned runtime budgets, one
// pass/fail line per criterion. All comparisons are exact canonical-form
// equality of rational polynomials.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multisym/basis.hpp"
#include "multisym/esym.hpp"
#include "multisym/linsolve.hpp"
#include "multisym/margins.hpp"
#include "multisym/weyl.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace multisym;
using multisym::test::Rng;
using multisym::test::scan_L;
using multisym::test::scan_Q;

namespace {

Polynomial xpt(int i, int j) { return Polynomial::variable(VarId::at_point(i, j)); }
Polynomial yv(int j) { return Polynomial::variable(VarId::abstract(j)); }
Polynomial C(long long c) { return Polynomial::constant(Rational(c)); }
Polynomial ax() { return yv(1); }
Polynomial ay() { return yv(2); }

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool invariant_under_all_permutations(const Polynomial& f, int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    if (f.apply_permutation(sigma) != f) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

std::set<std::string> symbol_strings(const ESum& sum, NameStyle style) {
  std::set<std::string> out;
  for (const ESymbol& s : sum.terms()) out.insert(s.to_string(style));
  return out;
}

Int factorial(int k) {
  Int f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

// --- criterion 1: exact expansions of e_(1,1) and e_(2,1) of (y1y2, y3y4) ---
bool vaccarino_expansions(std::string& detail) {
  const PolyTuple p{yv(1) * yv(2), yv(3) * yv(4)};
  const Polynomial e11 = expand_vaccarino(p, {1, 1}, 3);
  const Polynomial expected11 =
      xpt(1, 3) * xpt(1, 4) * xpt(2, 1) * xpt(2, 2) +
      xpt(2, 1) * xpt(2, 2) * xpt(3, 3) * xpt(3, 4) +
      xpt(2, 3) * xpt(2, 4) * xpt(3, 1) * xpt(3, 2) +
      xpt(1, 1) * xpt(1, 2) * xpt(3, 3) * xpt(3, 4) +
      xpt(1, 3) * xpt(1, 4) * xpt(3, 1) * xpt(3, 2) +
      xpt(1, 1) * xpt(1, 2) * xpt(2, 3) * xpt(2, 4);
  const Polynomial e21 = expand_vaccarino(p, {2, 1}, 3);
  const Polynomial expected21 =
      xpt(1, 1) * xpt(1, 2) * xpt(2, 1) * xpt(2, 2) * xpt(3, 3) * xpt(3, 4) +
      xpt(1, 1) * xpt(1, 2) * xpt(2, 3) * xpt(2, 4) * xpt(3, 1) * xpt(3, 2) +
      xpt(1, 3) * xpt(1, 4) * xpt(2, 1) * xpt(2, 2) * xpt(3, 1) * xpt(3, 2);
  if (e11 != expected11) {
    detail = "six-term expansion differs";
    return false;
  }
  if (e21 != expected21) {
    detail = "three-term expansion differs";
    return false;
  }
  return true;
}

// --- criterion 2: classical product of e_(1,1)(y1y2,y1) and e_(2,1)(y1y2,y3) ---
bool classical_product_2x2(std::string& detail) {
  const PolyTuple p{yv(1) * yv(2), yv(1)};
  const PolyTuple q{yv(1) * yv(2), yv(3)};
  const ESum product = classical_product(p, {1, 1}, q, {2, 1}, 3);
  const std::set<std::string> expected{
      "e[1,1,1](y3, y1^2*y2^2, y1^2*y2)",
      "e[1,1,1](y1*y2, y1*y2*y3, y1^2*y2)",
      "e[1,1,1](y1*y2, y1^2*y2^2, y1*y3)",
  };
  if (symbol_strings(product, NameStyle::General) != expected) {
    detail = "symbol presentation differs";
    return false;
  }
  const Polynomial direct =
      expand_vaccarino(p, {1, 1}, 3) * expand_vaccarino(q, {2, 1}, 3);
  if (product.expand(3).coefficient(0) != direct) {
    detail = "expansion differs from the direct product";
    return false;
  }
  return true;
}

// --- criterion 3: 12 margin matrices and the 3x3 classical product at n=4 ---
bool classical_product_3x3(std::string& detail) {
  const auto matrices = enumerate_L({1, 1, 1}, {1, 2, 1}, 4);
  if (matrices.size() != 12) {
    detail = "expected 12 margin matrices, got " + std::to_string(matrices.size());
    return false;
  }
  const PolyTuple p{yv(1).pow(2) * yv(2), yv(2).pow(3) * yv(3),
                    yv(1) * yv(2) * yv(3)};
  const PolyTuple q{yv(1).pow(3) * yv(2).pow(2) * yv(3), yv(1).pow(2) * yv(3),
                    yv(2) * yv(3)};
  const ESum product = classical_product(p, {1, 1, 1}, q, {1, 2, 1}, 4);
  if (product.terms().size() != 12) {
    detail = "expected 12 summands, got " + std::to_string(product.terms().size());
    return false;
  }
  const Polynomial direct =
      expand_vaccarino(p, {1, 1, 1}, 4) * expand_vaccarino(q, {1, 2, 1}, 4);
  if (product.expand(4).coefficient(0) != direct) {
    detail = "expansion differs from the direct product";
    return false;
  }
  return true;
}

// --- criterion 4: e_2(y) star e_3(x) at n=3 -------------------------------
bool star_e2y_e3x(std::string& detail) {
  const PhaseContext ctx{3, +1};
  const ESum prod = quantum_product({ay()}, {2}, {ax()}, {3}, ctx);
  const std::set<std::string> expected{"e[1,2](x, x*y)", "e[1,1,1](x, x*y, 1)*hbar",
                                       "e[1,2](x, 1)*hbar^2"};
  if (symbol_strings(prod, NameStyle::Phase) != expected) {
    detail = "symbol presentation differs";
    return false;
  }
  const HbarSeries expansion = prod.expand(3);
  auto x = [](int i) { return xpt(i, 1); };
  auto y = [](int i) { return xpt(i, 2); };
  const Polynomial part0 =
      x(1) * x(2) * x(3) * (y(1) * y(2) + y(1) * y(3) + y(2) * y(3));
  const Polynomial part1 = x(1) * x(3) * y(1) + x(1) * x(2) * y(1) +
                           x(2) * x(3) * y(2) + x(1) * x(2) * y(2) +
                           x(2) * x(3) * y(3) + x(1) * x(3) * y(3);
  const Polynomial part2 = x(1) + x(2) + x(3);
  if (expansion.coefficient(0) != part0 || expansion.coefficient(1) != part1 ||
      expansion.coefficient(2) != part2 || expansion.max_degree() != 2) {
    detail = "expansion differs from the explicit polynomial";
    return false;
  }
  const HbarSeries direct = star(HbarSeries(expand_vaccarino({ay()}, {2}, 3)),
                                 HbarSeries(expand_vaccarino({ax()}, {3}, 3)), ctx);
  if (expansion != direct) {
    detail = "expansion differs from the star oracle";
    return false;
  }
  return true;
}

// --- criterion 5: e_2(xy) star e_1(xy) at n=2 -----------------------------
bool star_e2xy_e1xy(std::string& detail) {
  const PhaseContext ctx{2, +1};
  const Polynomial xy = ax() * ay();
  const ESum prod = quantum_product({xy}, {2}, {xy}, {1}, ctx);
  const std::set<std::string> expected{"e[1,1](x*y, x^2*y^2)",
                                       "e[1,1](x*y, x*y)*hbar"};
  if (symbol_strings(prod, NameStyle::Phase) != expected) {
    detail = "symbol presentation differs";
    return false;
  }
  auto x = [](int i) { return xpt(i, 1); };
  auto y = [](int i) { return xpt(i, 2); };
  const HbarSeries expansion = prod.expand(2);
  const Polynomial part0 = x(1).pow(2) * y(1).pow(2) * x(2) * y(2) +
                           x(1) * y(1) * x(2).pow(2) * y(2).pow(2);
  const Polynomial part1 = C(2) * x(1) * y(1) * x(2) * y(2);
  if (expansion.coefficient(0) != part0 || expansion.coefficient(1) != part1 ||
      expansion.max_degree() != 1) {
    detail = "expansion differs from the explicit polynomial";
    return false;
  }
  return true;
}

// --- criterion 6: e_2(x^2 y) star e_2(x y^3) at n=2 ------------------------
bool star_e2x2y_e2xy3(std::string& detail) {
  const PhaseContext ctx{2, +1};
  const Polynomial p = ax().pow(2) * ay();
  const Polynomial q = ax() * ay().pow(3);
  const ESum prod = quantum_product({p}, {2}, {q}, {2}, ctx);
  const std::set<std::string> expected{"e[2](x^3*y^4)",
                                       "e[1,1](x^3*y^4, x^2*y^3)*hbar",
                                       "e[2](x^2*y^3)*hbar^2"};
  if (symbol_strings(prod, NameStyle::Phase) != expected) {
    detail = "symbol presentation differs";
    return false;
  }
  const HbarSeries direct = star(HbarSeries(expand_vaccarino({p}, {2}, 2)),
                                 HbarSeries(expand_vaccarino({q}, {2}, 2)), ctx);
  if (prod.expand(2) != direct) {
    detail = "expansion differs from the star oracle";
    return false;
  }
  return true;
}

// --- criterion 7: randomized property suite --------------------------------
bool property_suite(std::string& detail) {
  Rng rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 3);
    const PhaseContext plus{n, +1};
    const PhaseContext minus{n, -1};
    const int a = rng.uniform(1, 2);
    const int b = rng.uniform(1, 2);
    const PolyTuple p = rng.monomial_tuple(a, 2, 3);
    const PolyTuple q = rng.monomial_tuple(b, 2, 3);
    const MultiIndex alpha = rng.multi_index(a, n);
    const MultiIndex beta = rng.multi_index(b, n);
    const Polynomial ep = expand_vaccarino(p, alpha, n);
    const Polynomial eq = expand_vaccarino(q, beta, n);

    const ESum classical = classical_product(p, alpha, q, beta, n);
    if (classical.expand(n).coefficient(0) != ep * eq) {
      detail = "classical product mismatch at trial " + std::to_string(trial);
      return false;
    }

    const ESum quantum = quantum_product(p, alpha, q, beta, plus);
    const HbarSeries direct = star(HbarSeries(ep), HbarSeries(eq), plus);
    if (quantum.expand(n) != direct) {
      detail = "quantum product mismatch at trial " + std::to_string(trial);
      return false;
    }

    if (quantum.expand(n).coefficient(0) != classical.expand(n).coefficient(0)) {
      detail = "weight-zero slice mismatch at trial " + std::to_string(trial);
      return false;
    }

    const Polynomial h = rng.point_polynomial(n, 2, 2, 3);
    const HbarSeries H(h);
    const HbarSeries F(ep), G(eq);
    if (star(star(F, G, plus), H, plus) != star(F, star(G, H, plus), plus)) {
      detail = "associativity failure at trial " + std::to_string(trial);
      return false;
    }

    for (const auto& [m, poly] : direct.coefficients()) {
      if (!invariant_under_all_permutations(poly, n)) {
        detail = "symmetry failure at trial " + std::to_string(trial);
        return false;
      }
    }

    const Polynomial mf = Polynomial::term(rng.point_monomial(n, 2, 3), 1);
    const Polynomial mg = Polynomial::term(rng.point_monomial(n, 2, 3), 1);
    const HbarSeries comm = commutator(HbarSeries(mf), HbarSeries(mg), minus);
    if (!comm.coefficient(0).is_zero() ||
        comm.coefficient(1) != poisson_bracket(mf, mg, minus)) {
      detail = "first-order commutator mismatch at trial " + std::to_string(trial);
      return false;
    }

    Rational factor(factorial(n - multiindex_total(alpha)));
    for (int part : alpha) factor *= Rational(factorial(part));
    if (symmetrize(staircase_product(p, alpha), n) != ep * factor) {
      detail = "symmetrization factor mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// --- criterion 8: basis independence, round trip, newton certificate -------
bool basis_checks(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      std::vector<int> profile(d, 0);
      std::function<bool(int)> sweep = [&](int j) -> bool {
        if (j == d) {
          const auto alphas = enumerate_alpha(profile, n, d);
          if (alphas.empty()) return true;
          std::map<Monomial, int, std::greater<Monomial>> rows;
          std::vector<Polynomial> expansions;
          for (const auto& alpha : alphas) {
            expansions.push_back(alpha.expand(n));
            for (const auto& [m, c] : expansions.back().terms()) rows.emplace(m, 0);
          }
          int next = 0;
          for (auto& [m, idx] : rows) idx = next++;
          std::vector<std::vector<Rational>> mat(
              rows.size(), std::vector<Rational>(alphas.size(), 0));
          for (size_t i = 0; i < expansions.size(); ++i)
            for (const auto& [m, c] : expansions[i].terms()) mat[rows[m]][i] = c;
          if (exact_rank(mat) != static_cast<int>(alphas.size())) {
            std::ostringstream msg;
            msg << "dependent expansions at n=" << n << " d=" << d;
            detail = msg.str();
            return false;
          }
          return true;
        }
        for (profile[j] = 0; profile[j] <= 3; ++profile[j])
          if (!sweep(j + 1)) return false;
        profile[j] = 0;
        return true;
      };
      if (!sweep(0)) return false;
    }
  }

  Rng rng(4096);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform(1, 3);
    const int d = rng.uniform(1, 2);
    const Polynomial f = symmetrize(rng.point_polynomial(n, d, 2, 2), n);
    if (f.is_zero()) continue;
    Polynomial back;
    for (const auto& [alpha, c] : decompose(f, n, d)) back += alpha.expand(n) * c;
    if (back != f) {
      detail = "decompose round trip failed at trial " + std::to_string(trial);
      return false;
    }
  }

  const Polynomial p2 = power_sum(Monomial::variable(VarId::abstract(1), 2), 2);
  const Certificate cert = verify_generation(p2, GeneratorSet::Elementary, 2, 1, 4);
  if (cert.to_string() != "e[1]^2 - 2*e[2]") {
    detail = "newton certificate differs: " + cert.to_string();
    return false;
  }
  if (cert.expand(2, 1) != p2) {
    detail = "newton certificate does not expand back";
    return false;
  }
  return true;
}

// --- criterion 9: enumeration completeness and determinism -----------------
bool margin_completeness(std::string& detail) {
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int n = 1; n <= 4; ++n) {
        std::vector<int> alpha(a, 0), beta(b, 0);
        std::function<bool(int)> walk_alpha = [&](int l) -> bool {
          if (l == a) {
            std::function<bool(int)> walk_beta = [&](int r) -> bool {
              if (r == b) {
                const auto enumerated = enumerate_L(alpha, beta, n);
                if (enumerated != scan_L(alpha, beta, n, 4)) {
                  detail = "margin scan mismatch";
                  return false;
                }
                if (enumerate_L_parallel(alpha, beta, n) != enumerated ||
                    enumerate_L(alpha, beta, n) != enumerated) {
                  detail = "margin determinism failure";
                  return false;
                }
                for (int m = 0; m <= 2; ++m) {
                  const auto cubes = enumerate_Q(alpha, beta, n, m, 2);
                  if (cubes != scan_Q(alpha, beta, n, m, 2, 4)) {
                    detail = "cubical scan mismatch";
                    return false;
                  }
                  if (enumerate_Q_parallel(alpha, beta, n, m, 2) != cubes) {
                    detail = "cubical determinism failure";
                    return false;
                  }
                }
                return true;
              }
              for (beta[r] = 0; beta[r] <= n; ++beta[r])
                if (!walk_beta(r + 1)) return false;
              beta[r] = 0;
              return true;
            };
            return walk_beta(0);
          }
          for (alpha[l] = 0; alpha[l] <= n; ++alpha[l])
            if (!walk_alpha(l + 1)) return false;
          alpha[l] = 0;
          return true;
        };
        if (!walk_alpha(0)) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"vaccarino-expansions-exact", 0.1, vaccarino_expansions},
      {"classical-product-two-by-two", 0.5, classical_product_2x2},
      {"classical-product-three-by-three", 5.0, classical_product_3x3},
      {"star-e2y-e3x", 0.5, star_e2y_e3x},
      {"star-e2xy-e1xy", 0.2, star_e2xy_e1xy},
      {"star-e2x2y-e2xy3", 0.2, star_e2x2y_e2xy3},
      {"property-suite-200", 120.0, property_suite},
      {"basis-decomposition", 30.0, basis_checks},
      {"margin-enumeration-completeness", 30.0, margin_completeness},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      detail = "runtime budget exceeded";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << std::fixed
         << std::setprecision(3) << elapsed << " s, budget " << c.budget_seconds
         << " s)";
    if (!ok && !detail.empty()) line << ": " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
