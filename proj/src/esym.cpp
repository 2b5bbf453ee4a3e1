#include "multisym/esym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multisym/margins.hpp"

namespace multisym {

namespace {

void validate_tuple(const PolyTuple& p, const MultiIndex& alpha, int n,
                    const char* what) {
  if (n < 1) throw std::invalid_argument("number of points must be >= 1");
  if (p.size() != alpha.size())
    throw std::invalid_argument(std::string(what) +
                                ": index length must match tuple length");
  for (int part : alpha)
    if (part < 0) throw std::invalid_argument("multi-index parts must be >= 0");
  if (multiindex_total(alpha) > n)
    throw std::invalid_argument(std::string(what) + ": |alpha| exceeds n");
  for (const Polynomial& q : p) {
    if (q.is_zero())
      throw std::invalid_argument(std::string(what) + ": zero tuple entry");
    if (q.uses_point_vars())
      throw std::invalid_argument(std::string(what) +
                                  ": tuple entries must use abstract variables");
  }
}

// Sum over assignments of points to tuple entries with the given quotas.
// subs[l][i-1] holds p_l substituted at point i; entries with quota 0 are
// never touched.
Polynomial sum_over_disjoint_tuples(const std::vector<std::vector<Polynomial>>& subs,
                                    MultiIndex quotas, int n) {
  Polynomial result;
  const int a = static_cast<int>(quotas.size());
  std::function<void(int, int, const Polynomial&)> rec =
      [&](int i, int remaining, const Polynomial& acc) {
        if (remaining > n - i + 1) return;
        if (i > n) {
          result += acc;
          return;
        }
        rec(i + 1, remaining, acc);  // point i unused
        for (int l = 0; l < a; ++l) {
          if (quotas[l] == 0) continue;
          --quotas[l];
          rec(i + 1, remaining - 1, acc * subs[l][i - 1]);
          ++quotas[l];
        }
      };
  rec(1, multiindex_total(quotas), Polynomial::constant(1));
  return result;
}

}  // namespace

int multiindex_total(const MultiIndex& alpha) {
  int s = 0;
  for (int part : alpha) s += part;
  return s;
}

std::optional<ESymbol> ESymbol::normalized() const {
  if (index.size() != args.size())
    throw std::invalid_argument("symbol index and argument lengths differ");
  if (coeff == 0) return std::nullopt;
  ESymbol out;
  out.coeff = coeff;
  out.hbar = hbar;
  for (size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0) throw std::invalid_argument("negative multi-index part");
    if (index[i] == 0) continue;
    if (args[i].is_zero()) return std::nullopt;  // a zero argument kills the term
    out.index.push_back(index[i]);
    out.args.push_back(args[i]);
  }
  return out;
}

Polynomial ESymbol::expand(int n) const {
  auto norm = normalized();
  if (!norm) return {};
  if (norm->index.empty()) return Polynomial::constant(norm->coeff);
  return expand_vaccarino(norm->args, norm->index, n) * norm->coeff;
}

std::strong_ordering ESymbol::compare(const ESymbol& other) const {
  if (auto c = hbar <=> other.hbar; c != 0) return c;
  if (auto c = index <=> other.index; c != 0) return c;
  const size_t len = std::min(args.size(), other.args.size());
  for (size_t i = 0; i < len; ++i)
    if (auto c = args[i].compare(other.args[i]); c != 0) return c;
  if (auto c = args.size() <=> other.args.size(); c != 0) return c;
  if (coeff != other.coeff)
    return coeff < other.coeff ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ESymbol::to_string(NameStyle style) const {
  std::ostringstream out;
  if (index.empty()) {
    // Scalar symbol: coefficient times a power of hbar.
    if (hbar == 0) {
      out << coeff;
    } else {
      if (coeff == -1)
        out << '-';
      else if (coeff != 1)
        out << coeff << '*';
      out << "hbar";
      if (hbar > 1) out << '^' << hbar;
    }
    return out.str();
  }
  if (coeff == -1) {
    out << '-';
  } else if (coeff != 1) {
    out << coeff << '*';
  }
  out << "e[";
  for (size_t i = 0; i < index.size(); ++i) {
    if (i) out << ',';
    out << index[i];
  }
  out << ']';
  if (!args.empty()) {
    out << '(';
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out << ", ";
      out << args[i].to_string(style);
    }
    out << ')';
  }
  if (hbar >= 1) {
    out << "*hbar";
    if (hbar > 1) out << '^' << hbar;
  }
  return out.str();
}

void ESum::add(const ESymbol& s) {
  if (auto norm = s.normalized()) terms_.push_back(std::move(*norm));
}

void ESum::add(const ESum& other) {
  for (const ESymbol& s : other.terms_) add(s);
}

ESum ESum::operator*(const Rational& c) const {
  ESum out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (ESymbol& s : out.terms_) s.coeff *= c;
  return out;
}

ESum ESum::shifted(int hbar) const {
  ESum out;
  out.terms_ = terms_;
  for (ESymbol& s : out.terms_) s.hbar += hbar;
  return out;
}

HbarSeries ESum::expand(int n) const {
  HbarSeries out;
  for (const ESymbol& s : terms_) out.add_term(s.hbar, s.expand(n));
  return out;
}

bool ESum::expand_equal(const ESum& other, int n) const {
  return expand(n) == other.expand(n);
}

ESum ESum::collected() const {
  std::vector<ESymbol> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [](const ESymbol& x, const ESymbol& y) { return x.compare(y) < 0; });
  ESum out;
  for (ESymbol& s : sorted) {
    if (!out.terms_.empty()) {
      ESymbol& last = out.terms_.back();
      if (last.hbar == s.hbar && last.index == s.index && last.args == s.args) {
        last.coeff += s.coeff;
        if (last.coeff == 0) out.terms_.pop_back();
        continue;
      }
    }
    out.terms_.push_back(std::move(s));
  }
  return out;
}

std::string ESum::to_string(NameStyle style) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const ESymbol& s : terms_) {
    ESymbol shown = s;
    if (!first) {
      out << (s.coeff < 0 ? " - " : " + ");
      if (s.coeff < 0) shown.coeff = -shown.coeff;
    }
    first = false;
    out << shown.to_string(style);
  }
  return out.str();
}

Polynomial expand_elementary(const std::vector<int>& alpha, int n, int d) {
  if (static_cast<int>(alpha.size()) != d)
    throw std::invalid_argument("expand_elementary: |alpha| must have length d");
  PolyTuple coords;
  coords.reserve(d);
  for (int j = 1; j <= d; ++j)
    coords.push_back(Polynomial::variable(VarId::abstract(j)));
  return expand_vaccarino(coords, alpha, n);
}

Polynomial expand_vaccarino(const PolyTuple& p, const MultiIndex& alpha, int n) {
  validate_tuple(p, alpha, n, "expand_vaccarino");
  std::vector<std::vector<Polynomial>> subs(p.size());
  for (size_t l = 0; l < p.size(); ++l) {
    if (alpha[l] == 0) continue;
    subs[l].reserve(n);
    for (int i = 1; i <= n; ++i) subs[l].push_back(p[l].substitute_point(i));
  }
  return sum_over_disjoint_tuples(subs, alpha, n);
}

Polynomial expand_homogeneous(const std::vector<int>& k, int n, int d) {
  if (static_cast<int>(k.size()) != d)
    throw std::invalid_argument("expand_homogeneous: k must have length d");
  if (n < 1) throw std::invalid_argument("number of points must be >= 1");
  for (int part : k)
    if (part < 0) throw std::invalid_argument("degree vector must be nonnegative");

  // Multinomial coefficient (|v|; v_1, ..., v_d) times x_i^v, accumulated over
  // all splittings of k across the n points.
  std::vector<int> remaining = k;
  Polynomial result;
  std::function<void(int, const Polynomial&)> per_point = [&](int i,
                                                              const Polynomial& acc) {
    if (i > n) {
      if (std::all_of(remaining.begin(), remaining.end(),
                      [](int x) { return x == 0; }))
        result += acc;
      return;
    }
    // Choose v_i <= remaining componentwise.
    std::vector<int> v(d, 0);
    std::function<void(int)> choose = [&](int j) {
      if (j == d) {
        Int coef = 1;
        {
          // multinomial(|v|; v) = |v|! / prod v_j!
          int used = 0;
          for (int j2 = 0; j2 < d; ++j2) {
            for (int t = 1; t <= v[j2]; ++t) {
              ++used;
              coef = coef * used / t;
            }
          }
        }
        std::vector<std::pair<VarId, int>> factors;
        for (int j2 = 0; j2 < d; ++j2)
          if (v[j2] > 0) factors.emplace_back(VarId::at_point(i, j2 + 1), v[j2]);
        Polynomial factor =
            Polynomial::term(Monomial(std::move(factors)), Rational(coef));
        for (int j2 = 0; j2 < d; ++j2) remaining[j2] -= v[j2];
        per_point(i + 1, acc * factor);
        for (int j2 = 0; j2 < d; ++j2) remaining[j2] += v[j2];
        return;
      }
      for (v[j] = 0; v[j] <= remaining[j]; ++v[j]) choose(j + 1);
      v[j] = 0;
    };
    choose(0);
  };
  per_point(1, Polynomial::constant(1));
  return result;
}

Polynomial power_sum(const Monomial& m, int n) {
  if (n < 1) throw std::invalid_argument("number of points must be >= 1");
  if (m.is_constant())
    throw std::invalid_argument("power_sum requires a non-constant monomial");
  for (const auto& [v, e] : m.factors())
    if (!v.is_abstract())
      throw std::invalid_argument("power_sum requires an abstract monomial");
  Polynomial q = Polynomial::term(m, 1);
  Polynomial result;
  for (int i = 1; i <= n; ++i) result += q.substitute_point(i);
  return result;
}

Polynomial symmetrize(const Polynomial& f, int n) {
  if (n < 1) throw std::invalid_argument("number of points must be >= 1");
  if (f.max_point_index() > n)
    throw std::invalid_argument("symmetrize: point index exceeds n");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  Polynomial result;
  do {
    result += f.apply_permutation(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return result;
}

Polynomial staircase_product(const PolyTuple& p, const MultiIndex& alpha) {
  if (p.size() != alpha.size())
    throw std::invalid_argument("staircase_product: length mismatch");
  Polynomial result = Polynomial::constant(1);
  int point = 1;
  for (size_t l = 0; l < p.size(); ++l)
    for (int t = 0; t < alpha[l]; ++t) result *= p[l].substitute_point(point++);
  return result;
}

MonomialReduction monomial_reduction(const PolyTuple& p, const MultiIndex& alpha,
                                     int n) {
  if (p.size() != alpha.size())
    throw std::invalid_argument("monomial_reduction: length mismatch");
  for (int part : alpha)
    if (part < 0) throw std::invalid_argument("multi-index parts must be >= 0");
  if (multiindex_total(alpha) > n)
    throw std::invalid_argument("monomial_reduction: |alpha| exceeds n");

  MonomialReduction out;
  std::vector<std::vector<Rational>> coeffs(p.size());
  std::vector<int> widths(p.size());
  for (size_t l = 0; l < p.size(); ++l) {
    if (p[l].is_zero())
      throw std::invalid_argument("monomial_reduction: zero tuple entry");
    for (const auto& [m, c] : p[l].terms()) {
      out.monomials.push_back(Polynomial::term(m, 1));
      coeffs[l].push_back(c);
    }
    widths[l] = static_cast<int>(p[l].terms().size());
  }

  // Compositions of alpha_l over the monomials of p_l, one block at a time,
  // in lexicographic order of the flattened beta vector.
  MultiIndex beta;
  std::function<void(size_t, Rational)> block = [&](size_t l, Rational scalar) {
    if (l == p.size()) {
      out.terms.emplace_back(beta, scalar);
      return;
    }
    std::function<void(int, int, Rational)> comp = [&](int j, int rem, Rational acc) {
      if (j == widths[l] - 1) {
        beta.push_back(rem);
        Rational factor = acc;
        for (int t = 0; t < rem; ++t) factor *= coeffs[l][j];
        block(l + 1, scalar * factor);
        beta.pop_back();
        return;
      }
      Rational powered = acc;
      for (int v = 0; v <= rem; ++v) {
        beta.push_back(v);
        comp(j + 1, rem - v, powered);
        beta.pop_back();
        powered *= coeffs[l][j];
      }
    };
    comp(0, alpha[l], 1);
  };
  block(0, 1);
  return out;
}

ESum classical_product(const PolyTuple& p, const MultiIndex& alpha,
                       const PolyTuple& q, const MultiIndex& beta, int n) {
  validate_tuple(p, alpha, n, "classical_product (left)");
  validate_tuple(q, beta, n, "classical_product (right)");
  const int a = static_cast<int>(alpha.size());
  const int b = static_cast<int>(beta.size());

  PolyTuple master = p;
  master.insert(master.end(), q.begin(), q.end());
  for (int l = 0; l < a; ++l)
    for (int r = 0; r < b; ++r) master.push_back(p[l] * q[r]);

  ESum out;
  for (const MarginMatrix& gamma : enumerate_L(alpha, beta, n)) {
    ESymbol s;
    s.args = master;
    s.index.reserve(master.size());
    for (int l = 1; l <= a; ++l) s.index.push_back(gamma.at(l, 0));
    for (int r = 1; r <= b; ++r) s.index.push_back(gamma.at(0, r));
    for (int l = 1; l <= a; ++l)
      for (int r = 1; r <= b; ++r) s.index.push_back(gamma.at(l, r));
    out.add(s);
  }
  return out;
}

unsigned long long elementary_product_count(
    const std::vector<std::vector<int>>& alphas,
    const std::vector<std::vector<int>>& a, int n, int d) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("elementary_product_count: target needs n rows");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("elementary_product_count: target needs d columns");
    for (int x : row)
      if (x < 0) throw std::invalid_argument("target entries must be nonnegative");
  }
  for (const auto& alpha : alphas) {
    if (static_cast<int>(alpha.size()) != d)
      throw std::invalid_argument("elementary_product_count: alpha needs length d");
    int total = 0;
    for (int x : alpha) {
      if (x < 0) throw std::invalid_argument("alpha entries must be nonnegative");
      total += x;
    }
    if (total > n)
      throw std::invalid_argument("elementary_product_count: |alpha| exceeds n");
  }

  // usage[j][l] accumulates how often coordinate l of point j has been picked;
  // each factor contributes a tuple of disjoint subsets of [n] with the sizes
  // prescribed by its alpha.
  std::vector<std::vector<int>> usage(n, std::vector<int>(d, 0));
  unsigned long long count = 0;
  std::function<void(size_t)> factor = [&](size_t idx) {
    if (idx == alphas.size()) {
      if (usage == a) ++count;
      return;
    }
    std::vector<int> quota = alphas[idx];
    // Assign each point at most one coordinate for this factor.
    std::function<void(int, int)> assign = [&](int j, int remaining) {
      if (remaining > n - j + 1) return;
      if (j > n) {
        factor(idx + 1);
        return;
      }
      assign(j + 1, remaining);
      for (int l = 0; l < d; ++l) {
        if (quota[l] == 0) continue;
        if (usage[j - 1][l] + 1 > a[j - 1][l]) continue;  // would overshoot
        --quota[l];
        ++usage[j - 1][l];
        assign(j + 1, remaining - 1);
        --usage[j - 1][l];
        ++quota[l];
      }
    };
    assign(1, std::accumulate(quota.begin(), quota.end(), 0));
  };
  factor(0);
  return count;
}

}  // namespace multisym
