#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "multisym/basis.hpp"
#include "multisym/linsolve.hpp"
#include "support/generators.hpp"

using namespace multisym;
using multisym::test::Rng;

namespace {

Polynomial xp(int i, int j) { return Polynomial::variable(VarId::at_point(i, j)); }
Polynomial yv(int j) { return Polynomial::variable(VarId::abstract(j)); }
Polynomial C(long long c) { return Polynomial::constant(Rational(c)); }

Polynomial reassemble(const std::vector<std::pair<MonomialAlpha, Rational>>& coeffs,
                      int n) {
  Polynomial out;
  for (const auto& [alpha, c] : coeffs) out += alpha.expand(n) * c;
  return out;
}

}  // namespace

TEST_CASE("exact rank and solve") {
  SUBCASE("rank of a singular matrix") {
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(exact_rank({{Rational(1, 2), Rational(1, 3)},
                      {Rational(1, 4), Rational(1, 6)}}) == 1);
  }
  SUBCASE("consistent and inconsistent systems") {
    auto sol = exact_solve({{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(sol);
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);
    CHECK(!exact_solve({{1, 1}, {2, 2}}, {1, 3}));
  }
  SUBCASE("free variables are pinned to zero") {
    auto sol = exact_solve({{1, 1}}, {5});
    REQUIRE(sol);
    CHECK((*sol)[0] == 5);
    CHECK((*sol)[1] == 0);
  }
}

TEST_CASE("alpha enumeration by degree profile") {
  SUBCASE("degree one has a single choice") {
    const auto out = enumerate_alpha({1}, 2, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].to_string() == "e[1](y1)");
  }
  SUBCASE("degree two splits into the square and the pair") {
    const auto out = enumerate_alpha({2}, 2, 1);
    REQUIRE(out.size() == 2);
    CHECK(out[0].to_string() == "e[1](y1^2)");
    CHECK(out[1].to_string() == "e[2](y1)");
  }
  SUBCASE("one point excludes multiplicity two") {
    const auto out = enumerate_alpha({2}, 1, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].to_string() == "e[1](y1^2)");
  }
  SUBCASE("zero profile gives the empty index") {
    const auto out = enumerate_alpha({0, 0}, 2, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].entries.empty());
    CHECK(out[0].expand(2) == C(1));
  }
}

TEST_CASE("decompose recovers basis elements and simple squares") {
  SUBCASE("a basis element decomposes with coefficient one") {
    const Polynomial f = expand_elementary({1}, 2, 1);
    const auto coeffs = decompose(f, 2, 1);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs[0].first.to_string() == "e[1](y1)");
    CHECK(coeffs[0].second == 1);
  }
  SUBCASE("the squared power sum splits over the degree-two basis") {
    const Polynomial f = (xp(1, 1) + xp(2, 1)).pow(2);
    const auto coeffs = decompose(f, 2, 1);
    REQUIRE(coeffs.size() == 2);
    // Basis normalization: e over {y1 -> 2} expands to x1*x2, so its
    // coefficient here is 2 (the repeated-argument symbol e[1,1](y1, y1)
    // expands to twice that).
    CHECK(coeffs[0].first.to_string() == "e[2](y1)");
    CHECK(coeffs[0].second == 2);
    CHECK(coeffs[1].first.to_string() == "e[1](y1^2)");
    CHECK(coeffs[1].second == 1);
    CHECK(reassemble(coeffs, 2) == f);
  }
  SUBCASE("zero decomposes to the empty map") {
    CHECK(decompose(Polynomial{}, 2, 1).empty());
  }
  SUBCASE("non-invariant input is rejected") {
    CHECK_THROWS_AS(decompose(xp(1, 1), 2, 1), std::invalid_argument);
  }
}

TEST_CASE("expansion vectors are independent within each profile block") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      std::vector<int> profile(d, 0);
      std::function<void(int)> sweep = [&](int j) {
        if (j == d) {
          const auto alphas = enumerate_alpha(profile, n, d);
          if (alphas.empty()) return;
          std::map<Monomial, int, std::greater<Monomial>> rows;
          std::vector<Polynomial> expansions;
          for (const auto& alpha : alphas) {
            expansions.push_back(alpha.expand(n));
            for (const auto& [m, c] : expansions.back().terms()) rows.emplace(m, 0);
          }
          int next = 0;
          for (auto& [m, idx] : rows) idx = next++;
          std::vector<std::vector<Rational>> mat(
              rows.size(), std::vector<Rational>(alphas.size(), 0));
          for (size_t i = 0; i < expansions.size(); ++i)
            for (const auto& [m, c] : expansions[i].terms()) mat[rows[m]][i] = c;
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(profile);
          CHECK(exact_rank(mat) == static_cast<int>(alphas.size()));
          return;
        }
        for (profile[j] = 0; profile[j] <= 3; ++profile[j]) sweep(j + 1);
        profile[j] = 0;
      };
      sweep(0);
    }
  }
}

TEST_CASE("decompose round trip on random invariants") {
  Rng rng(808);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = rng.uniform(1, 3);
    const int d = rng.uniform(1, 2);
    const Polynomial f = symmetrize(rng.point_polynomial(n, d, 2, 2), n);
    if (f.is_zero()) continue;
    CAPTURE(n);
    CAPTURE(d);
    const auto coeffs = decompose(f, n, d);
    CHECK(reassemble(coeffs, n) == f);
  }
}

TEST_CASE("decompose is consistent with the classical product") {
  // e1 * e1 at two points: the classical product writes it as
  // e[1](y1^2) + e[1,1](y1, y1), and e[1,1](y1, y1) = 2 * e over {y1 -> 2}.
  const PolyTuple y{yv(1)};
  const ESum product = classical_product(y, {1}, y, {1}, 2);
  const Polynomial expanded = product.expand(2).coefficient(0);
  const auto coeffs = decompose(expanded, 2, 1);
  Polynomial direct = expand_vaccarino(y, {1}, 2).pow(2);
  CHECK(reassemble(coeffs, 2) == direct);
}

TEST_CASE("newton identity certificate for the squared power sum") {
  const Polynomial p2 = power_sum(Monomial::variable(VarId::abstract(1), 2), 2);
  const Certificate cert =
      verify_generation(p2, GeneratorSet::Elementary, 2, 1, 4);
  CHECK(cert.to_string() == "e[1]^2 - 2*e[2]");
  CHECK(cert.expand(2, 1) == p2);
}

TEST_CASE("a generator certifies itself") {
  const Polynomial e2 = expand_elementary({2}, 3, 1);
  const Certificate cert = verify_generation(e2, GeneratorSet::Elementary, 3, 1, 4);
  CHECK(cert.to_string() == "e[2]");
  CHECK(cert.expand(3, 1) == e2);
}

TEST_CASE("a power sum of a product monomial certifies itself") {
  const Monomial y1y2 =
      Monomial::variable(VarId::abstract(1)) * Monomial::variable(VarId::abstract(2));
  const Polynomial f = expand_vaccarino({Polynomial::term(y1y2, 1)}, {1}, 2);
  const Certificate cert = verify_generation(f, GeneratorSet::PowerSums, 2, 2, 4);
  CHECK(cert.to_string() == "p(y1*y2)");
  CHECK(cert.expand(2, 2) == f);
}

TEST_CASE("homogeneous generators express elementary functions") {
  // e2 = h1^2 - h2 in one coordinate.
  const Polynomial e2 = expand_elementary({2}, 2, 1);
  const Certificate cert =
      verify_generation(e2, GeneratorSet::Homogeneous, 2, 1, 4);
  CHECK(cert.expand(2, 1) == e2);
}

TEST_CASE("random invariants are generated by each family") {
  Rng rng(9091);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.uniform(1, 2);
    const int d = rng.uniform(1, 2);
    const Polynomial f = symmetrize(rng.point_polynomial(n, d, 2, 2), n);
    if (f.is_zero()) continue;
    CAPTURE(n);
    CAPTURE(d);
    for (GeneratorSet set : {GeneratorSet::Elementary, GeneratorSet::Homogeneous,
                             GeneratorSet::PowerSums}) {
      const Certificate cert = verify_generation(f, set, n, d, 8);
      CHECK(cert.expand(n, d) == f);
    }
  }
}
