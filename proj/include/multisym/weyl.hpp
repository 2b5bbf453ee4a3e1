#pragma once

#include <optional>

#include "multisym/esym.hpp"
#include "multisym/hbar_series.hpp"
#include "multisym/polynomial.hpp"

namespace multisym {

/// Canonical phase space over n points with two coordinates per point:
/// x_i = x[i,1] and y_i = x[i,2]; abstract single-point polynomials use
/// x = y1 and y = y2. `sign` fixes the Poisson convention {x,y} = sign.
///
/// With the normal-ordered family below the star commutator satisfies
/// f*g - g*f = {f,g} hbar + O(hbar^2) for sign = -1.
struct PhaseContext {
  int n = 1;
  int sign = +1;
};

/// One term of the normal-ordered product rule
///   (x^c y^d) star (x^f y^g) = sum_k C(d,k) (f)_k x^{c+f-k} y^{d+g-k} hbar^k;
/// the coefficient is zero for k > min(d, f).
struct WeylTerm {
  Int coefficient;
  int x_exp = 0;
  int y_exp = 0;
};
WeylTerm weyl_bk(int c, int d, int f, int g, int k);

/// Indexed family k -> B_k of bilinear operators on single-point polynomials
/// in the abstract phase coordinates, with B_0 the plain product. The star
/// and quantum products are parametrized by the family;
/// only the normal-ordered Weyl family ships built in.
class BilinearFamily {
 public:
  virtual ~BilinearFamily() = default;

  virtual Polynomial apply(int k, const Polynomial& f, const Polynomial& g) const = 0;
  /// Bound K with B_k(f, g) = 0 for every k > K.
  virtual int support_bound(const Polynomial& f, const Polynomial& g) const = 0;
};

const BilinearFamily& weyl_family();

/// Star product of series over the point variables of ctx: on monomials the
/// per-point rule above, extended multiplicatively across points (distinct
/// points commute), bilinearly, and by the Cauchy rule in hbar. The result is
/// truncated at `order` when given; for the Weyl family the series is finite.
HbarSeries star(const HbarSeries& F, const HbarSeries& G, const PhaseContext& ctx,
                std::optional<int> order = {},
                const BilinearFamily& family = weyl_family());

/// Quantum product e_alpha(p) star e_beta(q) as symbols e_gamma(B(p,q)) hbar^m
/// summed over the cubical matrices with margins (alpha, beta), total <= n and
/// weight m. The argument tuple is (p_1..p_a, q_1..q_b, then per pair (l,r)
/// the column B_0(p_l,q_r), B_1(p_l,q_r), ..., B_kmax(p_l,q_r)). `max_hbar`
/// caps m inclusively; by default every nonvanishing degree is produced.
ESum quantum_product(const PolyTuple& p, const MultiIndex& alpha, const PolyTuple& q,
                     const MultiIndex& beta, const PhaseContext& ctx,
                     std::optional<int> max_hbar = {},
                     const BilinearFamily& family = weyl_family());

/// sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i) scaled by ctx.sign.
Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g,
                           const PhaseContext& ctx);

/// The bracket presentation 2 * sum over weight-1 cubical matrices of
/// e_gamma(B(p,q)), i.e. twice the hbar^1 slice of the quantum product; its
/// relation to poisson_bracket depends on the sign convention.
ESum bracket_esum(const PolyTuple& p, const MultiIndex& alpha, const PolyTuple& q,
                  const MultiIndex& beta, const PhaseContext& ctx,
                  const BilinearFamily& family = weyl_family());

/// star(F,G) - star(G,F); the hbar^0 part vanishes and the hbar^1 part equals
/// the Poisson bracket of the hbar^0 coefficients for sign = -1.
HbarSeries commutator(const HbarSeries& F, const HbarSeries& G,
                      const PhaseContext& ctx, std::optional<int> order = {},
                      const BilinearFamily& family = weyl_family());

}  // namespace multisym
