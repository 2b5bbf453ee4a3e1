#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multisym/margins.hpp"
#include "support/oracles.hpp"

using namespace multisym;
using multisym::test::scan_L;
using multisym::test::scan_Q;

namespace {

void check_margins(const MarginMatrix& g, const std::vector<int>& alpha,
                   const std::vector<int>& beta, int n) {
  CHECK(g.at(0, 0) == 0);
  CHECK(g.total() <= n);
  for (size_t l = 1; l <= alpha.size(); ++l)
    CHECK(g.row_sum(static_cast<int>(l)) == alpha[l - 1]);
  for (size_t r = 1; r <= beta.size(); ++r)
    CHECK(g.col_sum(static_cast<int>(r)) == beta[r - 1]);
}

void check_margins(const CubicalMatrix& g, const std::vector<int>& alpha,
                   const std::vector<int>& beta, int n, int m) {
  CHECK(g.total() <= n);
  CHECK(g.weight() == m);
  for (size_t l = 1; l <= alpha.size(); ++l)
    CHECK(g.row_sum(static_cast<int>(l)) == alpha[l - 1]);
  for (size_t r = 1; r <= beta.size(); ++r)
    CHECK(g.col_sum(static_cast<int>(r)) == beta[r - 1]);
  for (int k = 0; k <= g.k_bound(); ++k) CHECK(g.at(0, 0, k) == 0);
  for (int k = 1; k <= g.k_bound(); ++k) {
    for (int r = 0; r < g.col_count(); ++r) CHECK(g.at(0, r, k) == 0);
    for (int l = 0; l < g.row_count(); ++l) CHECK(g.at(l, 0, k) == 0);
  }
}

}  // namespace

TEST_CASE("two-by-two margins at n=3 give three matrices") {
  const auto out = enumerate_L({1, 1}, {2, 1}, 3);
  REQUIRE(out.size() == 3);
  for (const auto& g : out) check_margins(g, {1, 1}, {2, 1}, 3);
  CHECK(count_L({1, 1}, {2, 1}, 3) == 3);
}

TEST_CASE("three-by-three margins at n=4 give twelve matrices") {
  const auto out = enumerate_L({1, 1, 1}, {1, 2, 1}, 4);
  CHECK(out.size() == 12);
  CHECK(count_L({1, 1, 1}, {1, 2, 1}, 4) == 12);
}

TEST_CASE("total bound excludes the slack-only solution at n=1") {
  const auto out = enumerate_L({1}, {1}, 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0].at(1, 1) == 1);
  CHECK(out[0].at(1, 0) == 0);
  CHECK(out[0].at(0, 1) == 0);
}

TEST_CASE("infeasible margins give the empty sequence") {
  CHECK(enumerate_L({5}, {1}, 3).empty());
  CHECK(count_L({5}, {1}, 3) == 0);
  CHECK(enumerate_L({1}, {5}, 3).empty());
}

TEST_CASE("cubical solutions for one-by-one margins alpha=2, beta=3, n=3") {
  // Expected flattened entries (gamma_100, gamma_010, gamma_110, gamma_111).
  struct Case {
    int m;
    int g100, g010, g110, g111;
  };
  const Case cases[] = {{0, 0, 1, 2, 0}, {1, 0, 1, 1, 1}, {2, 0, 1, 0, 2}};
  for (const auto& c : cases) {
    CAPTURE(c.m);
    const auto out = enumerate_Q({2}, {3}, 3, c.m, 1);
    REQUIRE(out.size() == 1);
    const CubicalMatrix& g = out[0];
    CHECK(g.at(1, 0, 0) == c.g100);
    CHECK(g.at(0, 1, 0) == c.g010);
    CHECK(g.at(1, 1, 0) == c.g110);
    CHECK(g.at(1, 1, 1) == c.g111);
    check_margins(g, {2}, {3}, 3, c.m);
  }
}

TEST_CASE("weight-zero slice reproduces the margin matrices") {
  const std::vector<int> alpha{1, 1};
  const std::vector<int> beta{2, 1};
  const auto cubes = enumerate_Q(alpha, beta, 3, 0, 2);
  const auto flats = enumerate_L(alpha, beta, 3);
  REQUIRE(cubes.size() == flats.size());
  for (size_t i = 0; i < cubes.size(); ++i) CHECK(cubes[i].slice0() == flats[i]);
}

TEST_CASE("weight beyond n*k_max is unreachable") {
  CHECK(enumerate_Q({2}, {2}, 3, 7, 2).empty());
  CHECK(enumerate_Q({1}, {1}, 1, 2, 1).empty());
}

TEST_CASE("enumeration agrees with the bounded scan") {
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int n = 1; n <= 3; ++n) {
        std::vector<int> alpha(a), beta(b);
        // A couple of representative margins per shape.
        for (int variant = 0; variant < 2; ++variant) {
          for (int l = 0; l < a; ++l) alpha[l] = (l + variant) % (n + 1);
          for (int r = 0; r < b; ++r) beta[r] = (r + 1) % (n + 1);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(n);
          CAPTURE(variant);
          CHECK(enumerate_L(alpha, beta, n) == scan_L(alpha, beta, n, 4));
          for (int m = 0; m <= 2; ++m)
            CHECK(enumerate_Q(alpha, beta, n, m, 2) ==
                  scan_Q(alpha, beta, n, m, 2, 4));
        }
      }
    }
  }
}

TEST_CASE("weight slices partition the unconstrained enumeration") {
  const std::vector<int> alpha{2, 1};
  const std::vector<int> beta{1, 2};
  const int n = 4, k_max = 2;
  size_t total = 0;
  for (int m = 0; m <= n * k_max; ++m) {
    for (const auto& g : enumerate_Q(alpha, beta, n, m, k_max))
      CHECK(g.weight() == m);
    total += enumerate_Q(alpha, beta, n, m, k_max).size();
  }
  // Scan with the weight constraint dropped: count all margin-feasible cubes.
  size_t unconstrained = 0;
  for (int m = 0; m <= n * k_max; ++m)
    unconstrained += scan_Q(alpha, beta, n, m, k_max, 4).size();
  CHECK(total == unconstrained);
}

TEST_CASE("repeated and parallel runs emit identical sequences") {
  const std::vector<int> alpha{2, 1};
  const std::vector<int> beta{1, 2};
  const auto first = enumerate_L(alpha, beta, 4);
  const auto second = enumerate_L(alpha, beta, 4);
  CHECK(first == second);
  CHECK(enumerate_L_parallel(alpha, beta, 4) == first);
  CHECK(enumerate_L_parallel(alpha, beta, 4, 3) == first);

  const auto q_serial = enumerate_Q(alpha, beta, 4, 2, 2);
  CHECK(enumerate_Q_parallel(alpha, beta, 4, 2, 2) == q_serial);
  CHECK(enumerate_Q_parallel(alpha, beta, 4, 2, 2, 2) == q_serial);
}

TEST_CASE("lexicographic emission order") {
  const auto out = enumerate_L({1, 1}, {2, 1}, 3);
  for (size_t i = 1; i < out.size(); ++i)
    CHECK(out[i - 1].flattened() < out[i].flattened());
  const auto cubes = enumerate_Q({2, 1}, {1, 2}, 4, 1, 2);
  for (size_t i = 1; i < cubes.size(); ++i)
    CHECK(cubes[i - 1].flattened() < cubes[i].flattened());
}
