#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace multisym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One commutative variable: either the abstract coordinate y_j (point == 0)
/// or the j-th coordinate of the i-th point, written x[i,j] (point == i >= 1).
///
/// The total order puts every abstract variable before every point variable
/// and is lexicographic on (point, coord) otherwise. All indices are 1-based.
struct VarId {
  std::int32_t point = 0;
  std::int32_t coord = 1;

  static constexpr VarId abstract(int j) {
    return VarId{0, static_cast<std::int32_t>(j)};
  }
  static constexpr VarId at_point(int i, int j) {
    return VarId{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)};
  }

  constexpr bool is_abstract() const { return point == 0; }

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

/// Naming convention used when rendering variables as text. General mode
/// spells abstract variables y1..yd and point variables x[i,j]; phase mode
/// (two coordinates) spells them x, y and x1..xn, y1..yn.
enum class NameStyle { General, Phase };

std::string var_name(VarId v, NameStyle style = NameStyle::General);

/// A product of variables with positive exponents, stored sorted by VarId.
///
/// Monomials compare graded-lexicographically: total degree decides first,
/// then the first variable (in VarId order) whose exponent differs, with the
/// larger exponent winning. This is the canonical term order everywhere.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<VarId, int>> factors);

  static Monomial one() { return Monomial{}; }
  static Monomial variable(VarId v, int exponent = 1);

  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
  int exponent(VarId v) const;
  int total_degree() const;
  bool is_constant() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  std::string to_string(NameStyle style = NameStyle::General) const;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

/// Multivariate polynomial over the rationals in canonical form: a list of
/// (monomial, coefficient) terms sorted by descending monomial order with no
/// zero coefficients and no duplicate monomials. Two equal polynomials have
/// identical representations, so equality is structural.
///
/// Values are immutable in practice: every operation returns a new value and
/// instances may be shared freely between threads.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational c);
  static Polynomial variable(VarId v, int exponent = 1);
  static Polynomial term(Monomial m, Rational c);
  /// Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(std::vector<std::pair<Monomial, Rational>> terms);

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial included).
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;
  int max_exponent(VarId v) const;
  /// Largest point index used, 0 if none.
  int max_point_index() const;
  /// Largest coordinate index used over both kinds of variables, 0 if none.
  int max_coord_index() const;
  bool uses_point_vars() const;
  bool uses_abstract_vars() const;
  /// Componentwise degree profile over coordinates 1..d: entry j-1 sums the
  /// exponents of x[i,j] over all points i of one term; uniform across terms
  /// only for multihomogeneous input, so callers pass a single term's monomial.
  static std::vector<int> multidegree(const Monomial& m, int d);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
  /// Canonical total order (term-list lexicographic); used only to make
  /// presentation orders deterministic.
  std::strong_ordering compare(const Polynomial& other) const;

  /// Replaces every abstract variable y_j by x[i,j]. Rejects input containing
  /// point variables.
  Polynomial substitute_point(int i) const;

  Polynomial partial_derivative(VarId v) const;

  /// Replaces x[i,j] by x[sigma(i),j]. `sigma` is 1-based with sigma[i-1] the
  /// image of point i; rejects abstract variables and points beyond sigma.
  Polynomial apply_permutation(std::span<const int> sigma) const;

  std::string to_string(NameStyle style = NameStyle::General) const;

 private:
  explicit Polynomial(std::vector<std::pair<Monomial, Rational>> canonical)
      : terms_(std::move(canonical)) {}

  std::vector<std::pair<Monomial, Rational>> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

std::string rational_to_string(const Rational& r);

}  // namespace multisym
