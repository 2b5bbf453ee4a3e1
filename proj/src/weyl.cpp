#include "multisym/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "multisym/margins.hpp"

namespace multisym {

namespace {

constexpr VarId kAbstractX = VarId::abstract(1);
constexpr VarId kAbstractY = VarId::abstract(2);

void validate_point_series(const HbarSeries& F, const PhaseContext& ctx,
                           const char* what) {
  for (const auto& [m, p] : F.coefficients()) {
    if (p.uses_abstract_vars())
      throw std::invalid_argument(std::string(what) +
                                  ": operands must use point variables only");
    if (p.max_point_index() > ctx.n)
      throw std::invalid_argument(std::string(what) + ": point index exceeds n");
    if (p.max_coord_index() > 2)
      throw std::invalid_argument(std::string(what) +
                                  ": phase space has two coordinates per point");
  }
}

void validate_phase_tuple(const PolyTuple& p, const char* what) {
  for (const Polynomial& q : p) {
    if (q.uses_point_vars())
      throw std::invalid_argument(std::string(what) +
                                  ": tuple entries must be abstract");
    if (q.max_coord_index() > 2)
      throw std::invalid_argument(std::string(what) +
                                  ": arguments may use at most two coordinates");
  }
}

class WeylFamily final : public BilinearFamily {
 public:
  Polynomial apply(int k, const Polynomial& f, const Polynomial& g) const override {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [mf, cf] : f.terms()) {
      for (const auto& [mg, cg] : g.terms()) {
        WeylTerm t = weyl_bk(mf.exponent(kAbstractX), mf.exponent(kAbstractY),
                             mg.exponent(kAbstractX), mg.exponent(kAbstractY), k);
        if (t.coefficient == 0) continue;
        std::vector<std::pair<VarId, int>> factors;
        if (t.x_exp > 0) factors.emplace_back(kAbstractX, t.x_exp);
        if (t.y_exp > 0) factors.emplace_back(kAbstractY, t.y_exp);
        terms.emplace_back(Monomial(std::move(factors)),
                           cf * cg * Rational(t.coefficient));
      }
    }
    return Polynomial::from_terms(std::move(terms));
  }

  int support_bound(const Polynomial& f, const Polynomial& g) const override {
    return std::min(f.max_exponent(kAbstractY), g.max_exponent(kAbstractX));
  }
};

// Star product of two point-variable monomials as a list of hbar coefficients,
// built point by point: entry k of the result collects the polynomial at
// hbar^k. The per-point factors come from the family applied to the abstract
// local monomials, substituted back at the point.
std::vector<Polynomial> star_monomials(const Monomial& mf, const Rational& cf,
                                       const Monomial& mg, const Rational& cg,
                                       std::optional<int> degree_cap,
                                       const BilinearFamily& family) {
  std::set<int> points;
  for (const auto& [v, e] : mf.factors()) points.insert(v.point);
  for (const auto& [v, e] : mg.factors()) points.insert(v.point);

  std::vector<Polynomial> acc{Polynomial::constant(cf * cg)};
  for (int i : points) {
    Monomial lf = Monomial({{kAbstractX, mf.exponent(VarId::at_point(i, 1))},
                            {kAbstractY, mf.exponent(VarId::at_point(i, 2))}});
    Monomial lg = Monomial({{kAbstractX, mg.exponent(VarId::at_point(i, 1))},
                            {kAbstractY, mg.exponent(VarId::at_point(i, 2))}});
    Polynomial pf = Polynomial::term(lf, 1);
    Polynomial pg = Polynomial::term(lg, 1);
    const int bound = family.support_bound(pf, pg);

    std::vector<Polynomial> local;
    for (int k = 0; k <= bound; ++k) {
      Polynomial bk = family.apply(k, pf, pg);
      local.push_back(bk.is_zero() ? bk : bk.substitute_point(i));
    }

    int cap = static_cast<int>(acc.size()) - 1 + bound;
    if (degree_cap) cap = std::min(cap, *degree_cap);
    if (cap < 0) return {};
    std::vector<Polynomial> next(cap + 1);
    for (int s = 0; s < static_cast<int>(acc.size()); ++s) {
      if (acc[s].is_zero()) continue;
      for (int k = 0; k <= bound && s + k <= cap; ++k) {
        if (local[k].is_zero()) continue;
        next[s + k] += acc[s] * local[k];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

WeylTerm weyl_bk(int c, int d, int f, int g, int k) {
  if (c < 0 || d < 0 || f < 0 || g < 0 || k < 0)
    throw std::invalid_argument("weyl_bk: exponents must be nonnegative");
  if (k > std::min(d, f)) return WeylTerm{0, 0, 0};
  Int coef = 1;
  for (int t = 1; t <= k; ++t) coef = coef * (d - t + 1) / t;  // C(d, k)
  for (int t = 0; t < k; ++t) coef *= (f - t);                 // (f)_k
  return WeylTerm{coef, c + f - k, d + g - k};
}

const BilinearFamily& weyl_family() {
  static const WeylFamily family;
  return family;
}

HbarSeries star(const HbarSeries& F, const HbarSeries& G, const PhaseContext& ctx,
                std::optional<int> order, const BilinearFamily& family) {
  validate_point_series(F, ctx, "star");
  validate_point_series(G, ctx, "star");
  const std::optional<int> out_order =
      min_order(order, min_order(F.order(), G.order()));
  HbarSeries out(out_order);
  for (const auto& [df, pf] : F.coefficients()) {
    for (const auto& [dg, pg] : G.coefficients()) {
      const int base = df + dg;
      if (out_order && base >= *out_order) continue;
      std::optional<int> cap;
      if (out_order) cap = *out_order - 1 - base;
      for (const auto& [mf, cf] : pf.terms()) {
        for (const auto& [mg, cg] : pg.terms()) {
          std::vector<Polynomial> parts =
              star_monomials(mf, cf, mg, cg, cap, family);
          for (int k = 0; k < static_cast<int>(parts.size()); ++k)
            out.add_term(base + k, parts[k]);
        }
      }
    }
  }
  return out;
}

ESum quantum_product(const PolyTuple& p, const MultiIndex& alpha, const PolyTuple& q,
                     const MultiIndex& beta, const PhaseContext& ctx,
                     std::optional<int> max_hbar, const BilinearFamily& family) {
  if (ctx.n < 1) throw std::invalid_argument("quantum_product: n must be >= 1");
  validate_phase_tuple(p, "quantum_product");
  validate_phase_tuple(q, "quantum_product");
  const int a = static_cast<int>(alpha.size());
  const int b = static_cast<int>(beta.size());
  if (static_cast<int>(p.size()) != a || static_cast<int>(q.size()) != b)
    throw std::invalid_argument("quantum_product: index length must match tuple");
  if (multiindex_total(alpha) > ctx.n || multiindex_total(beta) > ctx.n)
    throw std::invalid_argument("quantum_product: index total exceeds n");
  for (const Polynomial& f : p)
    if (f.is_zero()) throw std::invalid_argument("quantum_product: zero tuple entry");
  for (const Polynomial& f : q)
    if (f.is_zero()) throw std::invalid_argument("quantum_product: zero tuple entry");

  int k_max = 0;
  for (const Polynomial& f : p)
    for (const Polynomial& g : q) k_max = std::max(k_max, family.support_bound(f, g));
  if (max_hbar) k_max = std::max(k_max, *max_hbar);

  PolyTuple master = p;
  master.insert(master.end(), q.begin(), q.end());
  for (const Polynomial& f : p)
    for (const Polynomial& g : q)
      for (int k = 0; k <= k_max; ++k) master.push_back(family.apply(k, f, g));

  const int m_limit = max_hbar
                          ? *max_hbar
                          : k_max * std::min(multiindex_total(alpha),
                                             multiindex_total(beta));
  ESum out;
  for (int m = 0; m <= m_limit; ++m) {
    for (const CubicalMatrix& gamma : enumerate_Q(alpha, beta, ctx.n, m, k_max)) {
      ESymbol s;
      s.args = master;
      s.hbar = m;
      s.index.reserve(master.size());
      for (int l = 1; l <= a; ++l) s.index.push_back(gamma.at(l, 0, 0));
      for (int r = 1; r <= b; ++r) s.index.push_back(gamma.at(0, r, 0));
      for (int l = 1; l <= a; ++l)
        for (int r = 1; r <= b; ++r)
          for (int k = 0; k <= k_max; ++k) s.index.push_back(gamma.at(l, r, k));
      out.add(s);
    }
  }
  return out;
}

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g,
                           const PhaseContext& ctx) {
  HbarSeries wrapped_f(f), wrapped_g(g);
  validate_point_series(wrapped_f, ctx, "poisson_bracket");
  validate_point_series(wrapped_g, ctx, "poisson_bracket");
  Polynomial result;
  for (int i = 1; i <= ctx.n; ++i) {
    const VarId xi = VarId::at_point(i, 1);
    const VarId yi = VarId::at_point(i, 2);
    result += f.partial_derivative(xi) * g.partial_derivative(yi) -
              f.partial_derivative(yi) * g.partial_derivative(xi);
  }
  return result * Rational(ctx.sign);
}

ESum bracket_esum(const PolyTuple& p, const MultiIndex& alpha, const PolyTuple& q,
                  const MultiIndex& beta, const PhaseContext& ctx,
                  const BilinearFamily& family) {
  ESum product = quantum_product(p, alpha, q, beta, ctx, 1, family);
  ESum out;
  for (const ESymbol& s : product.terms()) {
    if (s.hbar != 1) continue;
    ESymbol doubled = s;
    doubled.hbar = 0;
    doubled.coeff *= 2;
    out.add(doubled);
  }
  return out;
}

HbarSeries commutator(const HbarSeries& F, const HbarSeries& G,
                      const PhaseContext& ctx, std::optional<int> order,
                      const BilinearFamily& family) {
  return star(F, G, ctx, order, family) - star(G, F, ctx, order, family);
}

}  // namespace multisym
