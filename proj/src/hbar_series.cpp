#include "multisym/hbar_series.hpp"

#include <sstream>
#include <stdexcept>

namespace multisym {

std::optional<int> min_order(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

HbarSeries::HbarSeries(const Polynomial& p, std::optional<int> order) : order_(order) {
  add_term(0, p);
}

HbarSeries HbarSeries::hbar(int degree, std::optional<int> order) {
  HbarSeries s(order);
  s.add_term(degree, Polynomial::constant(1));
  return s;
}

const Polynomial& HbarSeries::coefficient(int degree) const {
  static const Polynomial zero;
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? zero : it->second;
}

void HbarSeries::add_term(int degree, const Polynomial& p) {
  if (degree < 0) throw std::invalid_argument("negative hbar degree");
  if (!keeps(degree) || p.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(degree, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HbarSeries HbarSeries::truncated(std::optional<int> order) const {
  HbarSeries out(min_order(order_, order));
  for (const auto& [m, p] : coeffs_) out.add_term(m, p);
  return out;
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries out(order_);
  for (const auto& [m, p] : coeffs_) out.coeffs_.emplace(m, -p);
  return out;
}

HbarSeries HbarSeries::operator+(const HbarSeries& g) const {
  HbarSeries out(min_order(order_, g.order_));
  for (const auto& [m, p] : coeffs_) out.add_term(m, p);
  for (const auto& [m, p] : g.coeffs_) out.add_term(m, p);
  return out;
}

HbarSeries HbarSeries::operator-(const HbarSeries& g) const { return *this + (-g); }

HbarSeries HbarSeries::operator*(const HbarSeries& g) const {
  HbarSeries out(min_order(order_, g.order_));
  for (const auto& [ma, pa] : coeffs_) {
    for (const auto& [mb, pb] : g.coeffs_) {
      if (!out.keeps(ma + mb)) continue;
      out.add_term(ma + mb, pa * pb);
    }
  }
  return out;
}

HbarSeries HbarSeries::operator*(const Rational& c) const {
  HbarSeries out(order_);
  if (c == 0) return out;
  for (const auto& [m, p] : coeffs_) out.coeffs_.emplace(m, p * c);
  return out;
}

std::string HbarSeries::to_string(NameStyle style) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, p] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    if (m == 0) {
      out << p.to_string(style);
    } else {
      out << '(' << p.to_string(style) << ")*hbar";
      if (m > 1) out << '^' << m;
    }
  }
  return out.str();
}

}  // namespace multisym
