#include "multisym/basis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multisym/linsolve.hpp"

namespace multisym {

namespace {

std::vector<int> monomial_profile(const Monomial& m, int d) {
  return Polynomial::multidegree(m, d);
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Non-constant abstract monomials with exponent vector <= cap componentwise,
// descending in the canonical monomial order.
std::vector<Monomial> candidate_monomials(const std::vector<int>& cap, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(d, 0);
  std::function<void(int)> odometer = [&](int j) {
    if (j == d) {
      if (all_zero(e)) return;
      std::vector<std::pair<VarId, int>> factors;
      for (int j2 = 0; j2 < d; ++j2)
        if (e[j2] > 0) factors.emplace_back(VarId::abstract(j2 + 1), e[j2]);
      out.push_back(Monomial(std::move(factors)));
      return;
    }
    for (e[j] = 0; e[j] <= cap[j]; ++e[j]) odometer(j + 1);
    e[j] = 0;
  };
  odometer(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void validate_point_polynomial(const Polynomial& f, int n, int d, const char* what) {
  if (f.uses_abstract_vars())
    throw std::invalid_argument(std::string(what) +
                                ": input must use point variables only");
  if (f.max_point_index() > n)
    throw std::invalid_argument(std::string(what) + ": point index exceeds n");
  if (f.max_coord_index() > d)
    throw std::invalid_argument(std::string(what) + ": coordinate index exceeds d");
}

// Multidegree blocks of f, keyed by profile.
std::map<std::vector<int>, Polynomial> split_blocks(const Polynomial& f, int d) {
  std::map<std::vector<int>, Polynomial> blocks;
  for (const auto& [m, c] : f.terms())
    blocks[monomial_profile(m, d)] += Polynomial::term(m, c);
  return blocks;
}

// Solves sum c_i * basis[i] = target exactly over the union of monomials.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target) {
  std::map<Monomial, int, std::greater<Monomial>> row_of;
  auto note = [&row_of](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
  };
  for (const Polynomial& p : basis) note(p);
  note(target);
  int next = 0;
  for (auto& [m, idx] : row_of) idx = next++;

  std::vector<std::vector<Rational>> a(row_of.size(),
                                       std::vector<Rational>(basis.size(), 0));
  std::vector<Rational> rhs(row_of.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (const auto& [m, c] : basis[i].terms()) a[row_of[m]][i] = c;
  for (const auto& [m, c] : target.terms()) rhs[row_of[m]] = c;
  return exact_solve(std::move(a), std::move(rhs));
}

}  // namespace

int MonomialAlpha::total() const {
  int s = 0;
  for (const auto& [m, mult] : entries) s += mult;
  return s;
}

std::vector<int> MonomialAlpha::profile(int d) const {
  std::vector<int> out(d, 0);
  for (const auto& [m, mult] : entries) {
    std::vector<int> deg = monomial_profile(m, d);
    for (int j = 0; j < d; ++j) out[j] += mult * deg[j];
  }
  return out;
}

Polynomial MonomialAlpha::expand(int n) const {
  if (entries.empty()) return Polynomial::constant(1);
  PolyTuple args;
  MultiIndex index;
  for (const auto& [m, mult] : entries) {
    args.push_back(Polynomial::term(m, 1));
    index.push_back(mult);
  }
  return expand_vaccarino(args, index, n);
}

ESymbol MonomialAlpha::symbol() const {
  ESymbol s;
  for (const auto& [m, mult] : entries) {
    s.args.push_back(Polynomial::term(m, 1));
    s.index.push_back(mult);
  }
  return s;
}

std::strong_ordering MonomialAlpha::operator<=>(const MonomialAlpha& other) const {
  const size_t len = std::min(entries.size(), other.entries.size());
  for (size_t i = 0; i < len; ++i) {
    if (auto c = entries[i].first <=> other.entries[i].first; c != 0) return c;
    if (auto c = entries[i].second <=> other.entries[i].second; c != 0) return c;
  }
  return entries.size() <=> other.entries.size();
}

std::string MonomialAlpha::to_string(NameStyle style) const {
  return symbol().to_string(style);
}

std::vector<MonomialAlpha> enumerate_alpha(const std::vector<int>& profile, int n,
                                           int d) {
  if (static_cast<int>(profile.size()) != d)
    throw std::invalid_argument("enumerate_alpha: profile must have length d");
  for (int x : profile)
    if (x < 0) throw std::invalid_argument("enumerate_alpha: negative profile");

  const std::vector<Monomial> candidates = candidate_monomials(profile, d);
  std::vector<MonomialAlpha> out;
  MonomialAlpha current;
  std::vector<int> remaining = profile;

  std::function<void(size_t, int)> rec = [&](size_t idx, int budget) {
    if (all_zero(remaining)) {
      MonomialAlpha found = current;
      out.push_back(std::move(found));
      return;
    }
    if (idx == candidates.size() || budget == 0) return;
    const Monomial& m = candidates[idx];
    std::vector<int> deg = monomial_profile(m, d);
    int max_mult = budget;
    for (int j = 0; j < d; ++j)
      if (deg[j] > 0) max_mult = std::min(max_mult, remaining[j] / deg[j]);
    for (int mult = max_mult; mult >= 1; --mult) {
      for (int j = 0; j < d; ++j) remaining[j] -= mult * deg[j];
      current.entries.emplace_back(m, mult);
      rec(idx + 1, budget - mult);
      current.entries.pop_back();
      for (int j = 0; j < d; ++j) remaining[j] += mult * deg[j];
    }
    rec(idx + 1, budget);
  };
  rec(0, n);
  return out;
}

bool is_symmetric(const Polynomial& f, int n) {
  if (n <= 1) return true;
  std::vector<int> swap_first(n), cycle(n);
  std::iota(swap_first.begin(), swap_first.end(), 1);
  std::swap(swap_first[0], swap_first[1]);
  for (int i = 0; i < n; ++i) cycle[i] = i % n + 1;
  return f.apply_permutation(swap_first) == f && f.apply_permutation(cycle) == f;
}

std::vector<std::pair<MonomialAlpha, Rational>> decompose(const Polynomial& f, int n,
                                                          int d) {
  validate_point_polynomial(f, n, d, "decompose");
  if (!is_symmetric(f, n))
    throw std::invalid_argument("decompose: input is not S_n-invariant");

  std::vector<std::pair<MonomialAlpha, Rational>> out;
  for (const auto& [profile, block] : split_blocks(f, d)) {
    std::vector<MonomialAlpha> alphas = enumerate_alpha(profile, n, d);
    std::vector<Polynomial> expansions;
    expansions.reserve(alphas.size());
    for (const MonomialAlpha& alpha : alphas) expansions.push_back(alpha.expand(n));
    auto solution = solve_in_span(expansions, block);
    if (!solution)
      throw std::logic_error("decompose: invariant polynomial outside the span");
    for (size_t i = 0; i < alphas.size(); ++i)
      if ((*solution)[i] != 0) out.emplace_back(alphas[i], (*solution)[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<int> Generator::profile(int d) const {
  if (kind == GeneratorSet::PowerSums) return monomial_profile(m, d);
  return k;
}

Polynomial Generator::expand(int n, int d) const {
  switch (kind) {
    case GeneratorSet::Elementary:
      return expand_elementary(k, n, d);
    case GeneratorSet::Homogeneous:
      return expand_homogeneous(k, n, d);
    case GeneratorSet::PowerSums:
      return power_sum(m, n);
  }
  throw std::logic_error("unreachable");
}

std::string Generator::to_string(NameStyle style) const {
  std::ostringstream out;
  if (kind == GeneratorSet::PowerSums) {
    out << "p(" << m.to_string(style) << ')';
    return out.str();
  }
  out << (kind == GeneratorSet::Elementary ? 'e' : 'h') << '[';
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) out << ',';
    out << k[i];
  }
  out << ']';
  return out.str();
}

Polynomial Certificate::expand(int n, int d) const {
  Polynomial out;
  for (const Term& t : terms) {
    Polynomial prod = Polynomial::constant(t.coeff);
    for (const Generator& g : t.factors) prod *= g.expand(n, d);
    out += prod;
  }
  return out;
}

std::string Certificate::to_string(NameStyle style) const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (c != 1 || t.factors.empty()) out << c;
    bool need_star = (c != 1 || t.factors.empty());
    // Group equal factors as powers.
    for (size_t i = 0; i < t.factors.size();) {
      size_t j = i;
      while (j < t.factors.size() &&
             t.factors[j].to_string(style) == t.factors[i].to_string(style))
        ++j;
      if (need_star) out << '*';
      need_star = true;
      out << t.factors[i].to_string(style);
      if (j - i > 1) out << '^' << (j - i);
      i = j;
    }
  }
  return out.str();
}

Certificate verify_generation(const Polynomial& f, GeneratorSet set, int n, int d,
                              int degree_bound) {
  validate_point_polynomial(f, n, d, "verify_generation");
  if (!is_symmetric(f, n))
    throw std::invalid_argument("verify_generation: input is not S_n-invariant");

  Certificate cert;
  for (const auto& entry : split_blocks(f, d)) {
    const std::vector<int>& profile = entry.first;
    const Polynomial& block = entry.second;
    const int profile_total = std::accumulate(profile.begin(), profile.end(), 0);
    if (profile_total > degree_bound)
      throw std::invalid_argument("verify_generation: multidegree exceeds bound");

    // Generators usable inside this block.
    std::vector<Generator> gens;
    if (set == GeneratorSet::PowerSums) {
      for (const Monomial& m : candidate_monomials(profile, d))
        if (m.total_degree() <= n) gens.push_back({set, {}, m});
    } else {
      std::vector<int> k(d, 0);
      std::function<void(int)> odometer = [&](int j) {
        if (j == d) {
          int total = std::accumulate(k.begin(), k.end(), 0);
          if (total >= 1 && total <= n) gens.push_back({set, k, Monomial()});
          return;
        }
        for (k[j] = 0; k[j] <= profile[j]; ++k[j]) odometer(j + 1);
        k[j] = 0;
      };
      odometer(0);
    }

    // Multisets of generators whose profiles add up to the block profile.
    std::vector<std::vector<Generator>> products;
    std::vector<Generator> current;
    std::vector<int> remaining = profile;
    std::function<void(size_t)> rec = [&](size_t idx) {
      if (all_zero(remaining)) {
        products.push_back(current);
        return;
      }
      if (idx == gens.size()) return;
      std::vector<int> deg = gens[idx].profile(d);
      int max_mult = degree_bound;
      for (int j = 0; j < d; ++j)
        if (deg[j] > 0) max_mult = std::min(max_mult, remaining[j] / deg[j]);
      for (int mult = max_mult; mult >= 0; --mult) {
        for (int j = 0; j < d; ++j) remaining[j] -= mult * deg[j];
        for (int t = 0; t < mult; ++t) current.push_back(gens[idx]);
        rec(idx + 1);
        for (int t = 0; t < mult; ++t) current.pop_back();
        for (int j = 0; j < d; ++j) remaining[j] += mult * deg[j];
        if (mult == 0) break;
      }
    };
    rec(0);

    std::vector<Polynomial> expansions;
    expansions.reserve(products.size());
    for (const auto& factors : products) {
      Polynomial prod = Polynomial::constant(1);
      for (const Generator& g : factors) prod *= g.expand(n, d);
      expansions.push_back(std::move(prod));
    }
    auto solution = solve_in_span(expansions, block);
    if (!solution)
      throw std::runtime_error("verify_generation: not generated at this degree");
    for (size_t i = 0; i < products.size(); ++i)
      if ((*solution)[i] != 0)
        cert.terms.push_back({products[i], (*solution)[i]});
  }
  return cert;
}

}  // namespace multisym
