#pragma once

#include <map>
#include <optional>
#include <string>

#include "multisym/polynomial.hpp"

namespace multisym {

/// Finitely supported formal series in hbar with polynomial coefficients.
///
/// An optional truncation order M discards every degree >= M on construction
/// and through arithmetic; std::nullopt means unbounded. Degree-m output of a
/// product depends only on input degrees <= m, so truncating at M and then at
/// M' < M equals computing at M' directly. Equality compares coefficient maps
/// (the recorded order is bookkeeping, not part of the value).
class HbarSeries {
 public:
  HbarSeries() = default;
  explicit HbarSeries(std::optional<int> order) : order_(order) {}
  explicit HbarSeries(const Polynomial& p, std::optional<int> order = {});

  static HbarSeries hbar(int degree = 1, std::optional<int> order = {});

  const std::optional<int>& order() const { return order_; }
  const std::map<int, Polynomial>& coefficients() const { return coeffs_; }
  const Polynomial& coefficient(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest degree with a nonzero coefficient; -1 when zero.
  int max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  void add_term(int degree, const Polynomial& p);

  HbarSeries truncated(std::optional<int> order) const;

  HbarSeries operator-() const;
  HbarSeries operator+(const HbarSeries& g) const;
  HbarSeries operator-(const HbarSeries& g) const;
  /// Cauchy product; the result order is the minimum of the two orders.
  HbarSeries operator*(const HbarSeries& g) const;
  HbarSeries operator*(const Rational& c) const;

  bool operator==(const HbarSeries& g) const { return coeffs_ == g.coeffs_; }

  std::string to_string(NameStyle style = NameStyle::General) const;

 private:
  bool keeps(int degree) const { return !order_ || degree < *order_; }

  std::map<int, Polynomial> coeffs_;
  std::optional<int> order_;
};

/// min of two truncation orders, treating nullopt as unbounded.
std::optional<int> min_order(const std::optional<int>& a, const std::optional<int>& b);

}  // namespace multisym
