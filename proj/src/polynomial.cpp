#include "multisym/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace multisym {

std::string var_name(VarId v, NameStyle style) {
  std::ostringstream out;
  if (style == NameStyle::Phase) {
    if (v.coord != 1 && v.coord != 2)
      throw std::invalid_argument("phase naming requires coordinates 1 or 2");
    out << (v.coord == 1 ? 'x' : 'y');
    if (!v.is_abstract()) out << v.point;
    return out.str();
  }
  if (v.is_abstract()) {
    out << 'y' << v.coord;
  } else {
    out << "x[" << v.point << ',' << v.coord << ']';
  }
  return out.str();
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (e == 0) continue;
    if (v.point < 0 || v.coord < 1)
      throw std::invalid_argument("variable indices must be positive");
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(VarId v, int exponent) {
  return Monomial{{{v, exponent}}};
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a monomial");
  Monomial out;
  if (k == 0) return out;
  out.factors_ = factors_;
  for (auto& [v, e] : out.factors_) e *= k;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first != b->first) {
      // A positive exponent on an earlier variable outranks its absence.
      return a->first < b->first ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    if (a->second != b->second) return a->second <=> b->second;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(NameStyle style) const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) out << '*';
    first = false;
    out << var_name(v, style);
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

Polynomial Polynomial::constant(Rational c) {
  return term(Monomial::one(), std::move(c));
}

Polynomial Polynomial::variable(VarId v, int exponent) {
  return term(Monomial::variable(v, exponent), 1);
}

Polynomial Polynomial::term(Monomial m, Rational c) {
  Polynomial out;
  if (c != 0) out.terms_.emplace_back(std::move(m), std::move(c));
  return out;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Polynomial out;
  for (auto& [m, c] : terms) {
    if (c == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().first == m) {
      out.terms_.back().second += c;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else {
      out.terms_.emplace_back(std::move(m), std::move(c));
    }
  }
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const auto& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

int Polynomial::max_exponent(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Polynomial::max_point_index() const {
  int i = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) i = std::max<int>(i, v.point);
  return i;
}

int Polynomial::max_coord_index() const {
  int j = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) j = std::max<int>(j, v.coord);
  return j;
}

bool Polynomial::uses_point_vars() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (!v.is_abstract()) return true;
  return false;
}

bool Polynomial::uses_abstract_vars() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.is_abstract()) return true;
  return false;
}

std::vector<int> Polynomial::multidegree(const Monomial& m, int d) {
  std::vector<int> profile(d, 0);
  for (const auto& [v, e] : m.factors()) {
    if (v.coord < 1 || v.coord > d)
      throw std::invalid_argument("coordinate index outside configured dimension");
    profile[v.coord - 1] += e;
  }
  return profile;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first > a->first) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : g.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = acc.emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return {};
  Polynomial out = *this;
  for (auto& [m, coef] : out.terms_) coef *= c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  *this = *this + g;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a polynomial");
  Polynomial out = constant(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

std::strong_ordering Polynomial::compare(const Polynomial& other) const {
  const size_t len = std::min(terms_.size(), other.terms_.size());
  for (size_t i = 0; i < len; ++i) {
    if (auto c = terms_[i].first <=> other.terms_[i].first; c != 0) return c;
    if (terms_[i].second != other.terms_[i].second)
      return terms_[i].second < other.terms_[i].second
                 ? std::strong_ordering::less
                 : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

Polynomial Polynomial::substitute_point(int i) const {
  if (i < 1) throw std::invalid_argument("point index must be >= 1");
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<VarId, int>> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      if (!v.is_abstract())
        throw std::invalid_argument(
            "substitute_point requires abstract variables only");
      factors.emplace_back(VarId::at_point(i, v.coord), e);
    }
    terms.emplace_back(Monomial(std::move(factors)), c);
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::partial_derivative(VarId v) const {
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    std::vector<std::pair<VarId, int>> factors;
    for (const auto& [w, k] : m.factors()) {
      if (w == v) {
        if (k > 1) factors.emplace_back(w, k - 1);
      } else {
        factors.emplace_back(w, k);
      }
    }
    terms.emplace_back(Monomial(std::move(factors)), c * e);
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::apply_permutation(std::span<const int> sigma) const {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<VarId, int>> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      if (v.is_abstract())
        throw std::invalid_argument(
            "apply_permutation requires point variables only");
      if (v.point > n)
        throw std::invalid_argument("point index exceeds permutation size");
      factors.emplace_back(VarId::at_point(sigma[v.point - 1], v.coord), e);
    }
    terms.emplace_back(Monomial(std::move(factors)), c);
  }
  return from_terms(std::move(terms));
}

std::string Polynomial::to_string(NameStyle style) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_constant()) {
      out << a;
    } else if (a == 1) {
      out << m.to_string(style);
    } else {
      out << a << '*' << m.to_string(style);
    }
  }
  return out.str();
}

}  // namespace multisym
