#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace multisym {

/// Nonnegative integer matrix indexed [0..a] x [0..b] with the corner (0,0)
/// pinned to zero. Instances produced by enumerate_L satisfy: row sums over
/// r in [0..b] equal alpha_l for l in [1..a], column sums over l in [0..a]
/// equal beta_r for r in [1..b], and the total of all entries is <= n.
class MarginMatrix {
 public:
  MarginMatrix(int a, int b) : a_(a), b_(b), entries_((a + 1) * (b + 1), 0) {}

  int row_count() const { return a_ + 1; }
  int col_count() const { return b_ + 1; }
  int at(int l, int r) const { return entries_[l * (b_ + 1) + r]; }
  void set(int l, int r, int v) { entries_[l * (b_ + 1) + r] = v; }

  int total() const;
  int row_sum(int l) const;
  int col_sum(int r) const;

  /// Row-major entry vector skipping position (0,0); this is the order used
  /// for lexicographic enumeration and for textual dumps.
  std::vector<int> flattened() const;

  bool operator==(const MarginMatrix&) const = default;

  std::string to_string() const;

 private:
  int a_, b_;
  std::vector<int> entries_;
};

/// Nonnegative integer array indexed [0..a] x [0..b] x [0..k_max] with
/// gamma(0,0,k) = 0 for all k and gamma(l,r,k) = 0 for k >= 1 whenever l = 0
/// or r = 0. Instances produced by enumerate_Q additionally satisfy the
/// margin constraints of MarginMatrix (summed over k) together with the
/// weight constraint sum of k*gamma(l,r,k) = m.
class CubicalMatrix {
 public:
  CubicalMatrix(int a, int b, int k_max)
      : a_(a), b_(b), k_max_(k_max), entries_((a + 1) * (b + 1) * (k_max + 1), 0) {}

  int row_count() const { return a_ + 1; }
  int col_count() const { return b_ + 1; }
  int k_bound() const { return k_max_; }
  int at(int l, int r, int k) const { return entries_[index(l, r, k)]; }
  void set(int l, int r, int k, int v) { entries_[index(l, r, k)] = v; }

  int total() const;
  int weight() const;
  int row_sum(int l) const;
  int col_sum(int r) const;

  /// The k = 0 slice as a margin matrix.
  MarginMatrix slice0() const;

  /// Free entries in (l, r) row-major order with k innermost: gamma(0,r,0)
  /// for r in [1..b], then per row l >= 1 the entry gamma(l,0,0) followed by
  /// gamma(l,r,0..k_max) for r in [1..b]. Forced-zero positions are omitted.
  std::vector<int> flattened() const;

  bool operator==(const CubicalMatrix&) const = default;

  std::string to_string() const;

 private:
  int index(int l, int r, int k) const {
    return (l * (b_ + 1) + r) * (k_max_ + 1) + k;
  }

  int a_, b_, k_max_;
  std::vector<int> entries_;
};

/// All matrices with margins (alpha, beta) and total <= n, in lexicographic
/// order of the flattened entry vector. Infeasible margins (|alpha| > n or
/// |beta| > n) yield the empty sequence.
std::vector<MarginMatrix> enumerate_L(const std::vector<int>& alpha,
                                      const std::vector<int>& beta, int n);

/// Cardinality of enumerate_L without materializing the sequence.
unsigned long long count_L(const std::vector<int>& alpha,
                           const std::vector<int>& beta, int n);

/// All cubical matrices with margins (alpha, beta), total <= n, weight m and
/// slice indices k <= k_max, in lexicographic order of the flattened vector.
std::vector<CubicalMatrix> enumerate_Q(const std::vector<int>& alpha,
                                       const std::vector<int>& beta, int n, int m,
                                       int k_max);

/// Same sequences computed by partitioning the search on the first free entry
/// and running the branches on concurrent workers; the merge restores
/// lexicographic order, so the output is bit-identical to the serial run.
std::vector<MarginMatrix> enumerate_L_parallel(const std::vector<int>& alpha,
                                               const std::vector<int>& beta, int n,
                                               unsigned workers = 0);
std::vector<CubicalMatrix> enumerate_Q_parallel(const std::vector<int>& alpha,
                                                const std::vector<int>& beta, int n,
                                                int m, int k_max,
                                                unsigned workers = 0);

}  // namespace multisym
