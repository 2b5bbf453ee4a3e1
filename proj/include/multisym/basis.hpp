#pragma once

#include <string>
#include <vector>

#include "multisym/esym.hpp"
#include "multisym/polynomial.hpp"

namespace multisym {

/// Basis index: a multiset of non-constant abstract monomials with positive
/// multiplicities, |alpha| = sum of multiplicities <= n. Corresponds to the
/// symbol e_(mult_1,...,mult_k)(m_1,...,m_k) with the monomials in descending
/// canonical order.
struct MonomialAlpha {
  std::vector<std::pair<Monomial, int>> entries;

  int total() const;
  /// Componentwise degree profile sum of mult * deg(m) over coordinates 1..d.
  std::vector<int> profile(int d) const;
  Polynomial expand(int n) const;
  ESymbol symbol() const;

  bool operator==(const MonomialAlpha&) const = default;
  std::strong_ordering operator<=>(const MonomialAlpha& other) const;

  std::string to_string(NameStyle style = NameStyle::General) const;
};

/// All basis indices whose expansion has exactly the given multidegree
/// profile, with |alpha| <= n; deterministic order (larger monomials first,
/// higher multiplicities first).
std::vector<MonomialAlpha> enumerate_alpha(const std::vector<int>& profile, int n,
                                           int d);

/// True when f is fixed by every point permutation (checked on the two
/// generators of the symmetric group).
bool is_symmetric(const Polynomial& f, int n);

/// Unique coefficients c_alpha with f = sum c_alpha * expand(e_alpha), found
/// by an exact linear solve on each multidegree block. Rejects non-invariant
/// input; a consistent solution always exists for invariant input.
std::vector<std::pair<MonomialAlpha, Rational>> decompose(const Polynomial& f, int n,
                                                          int d);

enum class GeneratorSet { Elementary, Homogeneous, PowerSums };

/// One named generator: e_k or h_k for a degree vector k, or the power sum of
/// a monomial.
struct Generator {
  GeneratorSet kind = GeneratorSet::Elementary;
  std::vector<int> k;  // Elementary/Homogeneous
  Monomial m;          // PowerSums

  std::vector<int> profile(int d) const;
  Polynomial expand(int n, int d) const;
  std::string to_string(NameStyle style = NameStyle::General) const;
};

/// Explicit presentation of an invariant polynomial in a generator set:
/// f = sum over terms of coeff * product of the listed generators.
struct Certificate {
  struct Term {
    std::vector<Generator> factors;
    Rational coeff;
  };
  std::vector<Term> terms;

  Polynomial expand(int n, int d) const;
  std::string to_string(NameStyle style = NameStyle::General) const;
};

/// Expresses f as a polynomial in the chosen generators by exact linear solve
/// over generator products matching each multidegree block of f. Throws when
/// f is not invariant, a block's total degree exceeds degree_bound, or no
/// combination exists.
Certificate verify_generation(const Polynomial& f, GeneratorSet set, int n, int d,
                              int degree_bound);

}  // namespace multisym
