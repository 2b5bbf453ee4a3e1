#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multisym/hbar_series.hpp"
#include "multisym/polynomial.hpp"

namespace multisym {

/// Tuple (p_1, ..., p_a) of nonzero polynomials in abstract variables only.
using PolyTuple = std::vector<Polynomial>;

/// Multi-index (alpha_1, ..., alpha_a) of nonnegative parts.
using MultiIndex = std::vector<int>;

int multiindex_total(const MultiIndex& alpha);

/// One symbol c * e_gamma(args) * hbar^h. The index and argument tuple have
/// equal length after normalization, which drops parts equal to zero together
/// with their arguments (constant-1 arguments with positive parts stay).
struct ESymbol {
  MultiIndex index;
  PolyTuple args;
  Rational coeff = 1;
  int hbar = 0;

  /// Canonical form; nullopt when the symbol is identically zero (zero
  /// coefficient, or a zero argument carrying a positive part).
  std::optional<ESymbol> normalized() const;

  /// Polynomial expansion at n points, including the scalar coefficient but
  /// not the hbar power.
  Polynomial expand(int n) const;

  std::strong_ordering compare(const ESymbol& other) const;
  bool operator==(const ESymbol& other) const = default;

  std::string to_string(NameStyle style = NameStyle::General) const;
};

/// Formal sum of symbols. Semantic equality is expansion equality per hbar
/// degree; the symbol list itself is a presentation and is not unique.
class ESum {
 public:
  ESum() = default;

  void add(const ESymbol& s);
  void add(const ESum& other);

  const std::vector<ESymbol>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ESum operator*(const Rational& c) const;
  /// Shifts every symbol by the given hbar power.
  ESum shifted(int hbar) const;

  HbarSeries expand(int n) const;
  bool expand_equal(const ESum& other, int n) const;

  /// Merges structurally identical symbols and sorts the presentation
  /// canonically (by hbar degree, then symbol order).
  ESum collected() const;

  std::string to_string(NameStyle style = NameStyle::General) const;

 private:
  std::vector<ESymbol> terms_;
};

/// Elementary multi-symmetric function e_alpha for alpha in N^d, |alpha| <= n:
/// the sum over d-tuples of pairwise disjoint subsets a_j of [n] with
/// |a_j| = alpha_j of prod_j prod_{i in a_j} x[i,j]. Rejects |alpha| > n.
Polynomial expand_elementary(const std::vector<int>& alpha, int n, int d);

/// Vaccarino multi-symmetric function e_alpha(p): the sum over tuples c of
/// pairwise disjoint subsets of [n] with |c_l| = alpha_l of
/// prod_l prod_{i in c_l} p_l(i). Rejects |alpha| > n.
Polynomial expand_vaccarino(const PolyTuple& p, const MultiIndex& alpha, int n);

/// Homogeneous multi-symmetric function h_k: the coefficient of t^k in
/// prod_i (1 - x[i,1] t_1 - ... - x[i,d] t_d)^{-1}, computed as the sum over
/// decompositions k = v_1 + ... + v_n of prod_i multinomial(|v_i|; v_i) x_i^{v_i}.
Polynomial expand_homogeneous(const std::vector<int>& k, int n, int d);

/// Power sum e_1(m) = m(1) + ... + m(n) of a non-constant abstract monomial.
Polynomial power_sum(const Monomial& m, int n);

/// Unnormalized symmetrization: the sum of f over all n! point permutations.
Polynomial symmetrize(const Polynomial& f, int n);

/// The product p_1(1)...p_1(alpha_1) p_2(alpha_1+1)... with points 1..|alpha|
/// assigned to the tuple entries in blocks. Its symmetrization equals
/// (prod_l alpha_l!) * (n - |alpha|)! * expand_vaccarino(p, alpha, n).
Polynomial staircase_product(const PolyTuple& p, const MultiIndex& alpha);

/// Rewrite of e_alpha(p) over the monomials of the p_l: e_alpha(p) equals the
/// sum of expand_vaccarino(monomials, beta, n) * scalar over the listed pairs.
/// Rejects |alpha| > n (every beta would be out of range too).
struct MonomialReduction {
  PolyTuple monomials;  // flattened (m_11, ..., m_1k_1, ..., m_a1, ..., m_ak_a)
  std::vector<std::pair<MultiIndex, Rational>> terms;  // (beta, c^beta)
};
MonomialReduction monomial_reduction(const PolyTuple& p, const MultiIndex& alpha,
                                     int n);

/// Classical product e_alpha(p) * e_beta(q) as a sum of symbols
/// e_gamma(p, q, pq) over the margin matrices gamma with row sums alpha,
/// column sums beta and total <= n. The argument tuple is ordered
/// (p_1..p_a, q_1..q_b, p_1 q_1, ..., p_1 q_b, ..., p_a q_1, ..., p_a q_b).
ESum classical_product(const PolyTuple& p, const MultiIndex& alpha,
                       const PolyTuple& q, const MultiIndex& beta, int n);

/// Number of 0/1 cubical matrices A over [m] x [n] x [d] with
/// sum_i A(i,j,l) = a(j,l), sum_l A(i,j,l) <= 1 and sum_j A(i,j,l) = alpha_i(l);
/// equals the coefficient of x^a in the product of the e_{alpha_i}.
/// `a` is indexed a[j-1][l-1] for point j and coordinate l.
unsigned long long elementary_product_count(
    const std::vector<std::vector<int>>& alphas,
    const std::vector<std::vector<int>>& a, int n, int d);

}  // namespace multisym
