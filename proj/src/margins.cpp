#include "multisym/margins.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace multisym {

namespace {

int vec_total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("margin entries must be nonnegative");
    s += x;
  }
  return s;
}

// Recursive descent over the free positions in flattened order, trying values
// in ascending order so that emission is lexicographic. Column remainders are
// updated in place; prunes only cut branches with no valid completion.
struct LEnumerator {
  const std::vector<int>& alpha;
  const std::vector<int>& beta;
  int a, b, n, alpha_total, beta_total;
  std::vector<int> alpha_suffix;  // sum of alpha[l-1..a-1]
  std::vector<int> col_rem;       // col_rem[r], r in [1..b]
  int col0_used = 0;
  MarginMatrix mat;
  std::optional<int> first_value;  // pins the first free position (parallel split)
  const std::function<void(const MarginMatrix&)>& emit;

  LEnumerator(const std::vector<int>& alpha_, const std::vector<int>& beta_, int n_,
              const std::function<void(const MarginMatrix&)>& emit_)
      : alpha(alpha_),
        beta(beta_),
        a(static_cast<int>(alpha_.size())),
        b(static_cast<int>(beta_.size())),
        n(n_),
        alpha_total(vec_total(alpha_)),
        beta_total(vec_total(beta_)),
        alpha_suffix(a + 2, 0),
        col_rem(b + 1, 0),
        mat(a, b),
        emit(emit_) {
    for (int l = a; l >= 1; --l) alpha_suffix[l] = alpha_suffix[l + 1] + alpha[l - 1];
  }

  void run() {
    if (alpha_total > n || beta_total > n) return;
    row0(1, 0);
  }

  void row0(int r, int used) {
    if (r > b) {
      row(1);
      return;
    }
    const int bound = std::min(beta[r - 1], n - alpha_total - used);
    int lo = 0, hi = bound;
    if (r == 1 && first_value) {
      if (*first_value > bound) return;
      lo = hi = *first_value;
    }
    for (int v = lo; v <= hi; ++v) {
      mat.set(0, r, v);
      col_rem[r] = beta[r - 1] - v;
      row0(r + 1, used + v);
    }
  }

  void row(int l) {
    if (l > a) {
      for (int r = 1; r <= b; ++r)
        if (col_rem[r] != 0) return;
      emit(mat);
      return;
    }
    int col_needed = 0;
    for (int r = 1; r <= b; ++r) col_needed += col_rem[r];
    if (col_needed > alpha_suffix[l]) return;
    const int bound0 = std::min(alpha[l - 1], n - beta_total - col0_used);
    int lo = 0, hi = bound0;
    if (b == 0 && l == 1 && first_value) {
      if (*first_value > bound0) return;
      lo = hi = *first_value;
    }
    for (int v = lo; v <= hi; ++v) {
      mat.set(l, 0, v);
      col0_used += v;
      cells(l, 1, alpha[l - 1] - v);
      col0_used -= v;
    }
  }

  void cells(int l, int r, int row_rem) {
    if (r > b) {
      if (row_rem == 0) row(l + 1);
      return;
    }
    int later = 0;
    for (int r2 = r + 1; r2 <= b; ++r2) later += col_rem[r2];
    const int lo = std::max(0, row_rem - later);
    const int hi = std::min(row_rem, col_rem[r]);
    for (int v = lo; v <= hi; ++v) {
      mat.set(l, r, v);
      col_rem[r] -= v;
      cells(l, r + 1, row_rem - v);
      col_rem[r] += v;
    }
  }
};

// Cubical variant; free positions are (0,r,0) for r in [1..b], then per row
// l >= 1 the slack (l,0,0) followed by (l,r,k) with k innermost. The weight
// remainder tracks sum k*gamma(l,r,k) against the target m.
struct QEnumerator {
  const std::vector<int>& alpha;
  const std::vector<int>& beta;
  int a, b, n, k_max, alpha_total, beta_total;
  std::vector<int> alpha_suffix;
  std::vector<int> col_rem;
  int col0_used = 0;
  int weight_rem;
  CubicalMatrix mat;
  std::optional<int> first_value;
  const std::function<void(const CubicalMatrix&)>& emit;

  QEnumerator(const std::vector<int>& alpha_, const std::vector<int>& beta_, int n_,
              int m_, int k_max_, const std::function<void(const CubicalMatrix&)>& emit_)
      : alpha(alpha_),
        beta(beta_),
        a(static_cast<int>(alpha_.size())),
        b(static_cast<int>(beta_.size())),
        n(n_),
        k_max(k_max_),
        alpha_total(vec_total(alpha_)),
        beta_total(vec_total(beta_)),
        alpha_suffix(a + 2, 0),
        col_rem(b + 1, 0),
        weight_rem(m_),
        mat(a, b, std::max(k_max_, 0)),
        emit(emit_) {
    for (int l = a; l >= 1; --l) alpha_suffix[l] = alpha_suffix[l + 1] + alpha[l - 1];
  }

  void run() {
    if (k_max < 0 || weight_rem < 0) return;
    if (alpha_total > n || beta_total > n) return;
    if (weight_rem > k_max * alpha_total || weight_rem > k_max * beta_total) return;
    row0(1, 0);
  }

  void row0(int r, int used) {
    if (r > b) {
      row(1);
      return;
    }
    const int bound = std::min(beta[r - 1], n - alpha_total - used);
    int lo = 0, hi = bound;
    if (r == 1 && first_value) {
      if (*first_value > bound) return;
      lo = hi = *first_value;
    }
    for (int v = lo; v <= hi; ++v) {
      mat.set(0, r, 0, v);
      col_rem[r] = beta[r - 1] - v;
      row0(r + 1, used + v);
    }
  }

  void row(int l) {
    if (l > a) {
      if (weight_rem != 0) return;
      for (int r = 1; r <= b; ++r)
        if (col_rem[r] != 0) return;
      emit(mat);
      return;
    }
    int col_needed = 0;
    for (int r = 1; r <= b; ++r) col_needed += col_rem[r];
    if (col_needed > alpha_suffix[l]) return;
    if (weight_rem > k_max * alpha_suffix[l]) return;
    const int bound0 = std::min(alpha[l - 1], n - beta_total - col0_used);
    for (int v = 0; v <= bound0; ++v) {
      mat.set(l, 0, 0, v);
      col0_used += v;
      cells(l, 1, 0, alpha[l - 1] - v);
      col0_used -= v;
    }
  }

  void cells(int l, int r, int k, int row_rem) {
    if (r > b) {
      if (row_rem == 0) row(l + 1);
      return;
    }
    if (k > k_max) {
      cells(l, r + 1, 0, row_rem);
      return;
    }
    int later_cols = 0;
    for (int r2 = r + 1; r2 <= b; ++r2) later_cols += col_rem[r2];
    // Can the rest of this row still absorb row_rem?
    if (k < k_max) {
      if (row_rem > col_rem[r] + later_cols) return;
    }
    const int lo = (k == k_max) ? std::max(0, row_rem - later_cols) : 0;
    int hi = std::min(row_rem, col_rem[r]);
    if (k >= 1) hi = std::min(hi, weight_rem / k);
    if (weight_rem > k_max * (row_rem + alpha_suffix[l + 1])) return;
    for (int v = lo; v <= hi; ++v) {
      mat.set(l, r, k, v);
      col_rem[r] -= v;
      weight_rem -= k * v;
      cells(l, r, k + 1, row_rem - v);
      weight_rem += k * v;
      col_rem[r] += v;
    }
  }
};

unsigned effective_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : hw;
}

}  // namespace

int MarginMatrix::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int MarginMatrix::row_sum(int l) const {
  int s = 0;
  for (int r = 0; r <= b_; ++r) s += at(l, r);
  return s;
}

int MarginMatrix::col_sum(int r) const {
  int s = 0;
  for (int l = 0; l <= a_; ++l) s += at(l, r);
  return s;
}

std::vector<int> MarginMatrix::flattened() const {
  std::vector<int> out;
  out.reserve((a_ + 1) * (b_ + 1) - 1);
  for (int l = 0; l <= a_; ++l)
    for (int r = 0; r <= b_; ++r)
      if (l != 0 || r != 0) out.push_back(at(l, r));
  return out;
}

std::string MarginMatrix::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int v : flattened()) {
    if (!first) out << ' ';
    first = false;
    out << v;
  }
  return out.str();
}

int CubicalMatrix::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int CubicalMatrix::weight() const {
  int w = 0;
  for (int l = 0; l <= a_; ++l)
    for (int r = 0; r <= b_; ++r)
      for (int k = 0; k <= k_max_; ++k) w += k * at(l, r, k);
  return w;
}

int CubicalMatrix::row_sum(int l) const {
  int s = 0;
  for (int r = 0; r <= b_; ++r)
    for (int k = 0; k <= k_max_; ++k) s += at(l, r, k);
  return s;
}

int CubicalMatrix::col_sum(int r) const {
  int s = 0;
  for (int l = 0; l <= a_; ++l)
    for (int k = 0; k <= k_max_; ++k) s += at(l, r, k);
  return s;
}

MarginMatrix CubicalMatrix::slice0() const {
  MarginMatrix out(a_, b_);
  for (int l = 0; l <= a_; ++l)
    for (int r = 0; r <= b_; ++r) out.set(l, r, at(l, r, 0));
  return out;
}

std::vector<int> CubicalMatrix::flattened() const {
  std::vector<int> out;
  for (int r = 1; r <= b_; ++r) out.push_back(at(0, r, 0));
  for (int l = 1; l <= a_; ++l) {
    out.push_back(at(l, 0, 0));
    for (int r = 1; r <= b_; ++r)
      for (int k = 0; k <= k_max_; ++k) out.push_back(at(l, r, k));
  }
  return out;
}

std::string CubicalMatrix::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int v : flattened()) {
    if (!first) out << ' ';
    first = false;
    out << v;
  }
  return out.str();
}

std::vector<MarginMatrix> enumerate_L(const std::vector<int>& alpha,
                                      const std::vector<int>& beta, int n) {
  std::vector<MarginMatrix> out;
  std::function<void(const MarginMatrix&)> emit = [&out](const MarginMatrix& m) {
    out.push_back(m);
  };
  LEnumerator e(alpha, beta, n, emit);
  e.run();
  return out;
}

unsigned long long count_L(const std::vector<int>& alpha,
                           const std::vector<int>& beta, int n) {
  unsigned long long count = 0;
  std::function<void(const MarginMatrix&)> emit = [&count](const MarginMatrix&) {
    ++count;
  };
  LEnumerator e(alpha, beta, n, emit);
  e.run();
  return count;
}

std::vector<CubicalMatrix> enumerate_Q(const std::vector<int>& alpha,
                                       const std::vector<int>& beta, int n, int m,
                                       int k_max) {
  std::vector<CubicalMatrix> out;
  std::function<void(const CubicalMatrix&)> emit = [&out](const CubicalMatrix& c) {
    out.push_back(c);
  };
  QEnumerator e(alpha, beta, n, m, k_max, emit);
  e.run();
  return out;
}

std::vector<MarginMatrix> enumerate_L_parallel(const std::vector<int>& alpha,
                                               const std::vector<int>& beta, int n,
                                               unsigned workers) {
  if (beta.empty() || effective_workers(workers) == 1)
    return enumerate_L(alpha, beta, n);
  const int alpha_total = vec_total(alpha);
  const int bound = std::min(beta[0], n - alpha_total);
  if (bound < 0) return {};
  std::vector<std::future<std::vector<MarginMatrix>>> branches;
  for (int v = 0; v <= bound; ++v) {
    branches.push_back(std::async(std::launch::async, [&alpha, &beta, n, v] {
      std::vector<MarginMatrix> part;
      std::function<void(const MarginMatrix&)> emit =
          [&part](const MarginMatrix& m) { part.push_back(m); };
      LEnumerator e(alpha, beta, n, emit);
      e.first_value = v;
      e.run();
      return part;
    }));
  }
  std::vector<MarginMatrix> out;
  for (auto& f : branches) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CubicalMatrix> enumerate_Q_parallel(const std::vector<int>& alpha,
                                                const std::vector<int>& beta, int n,
                                                int m, int k_max, unsigned workers) {
  if (beta.empty() || effective_workers(workers) == 1)
    return enumerate_Q(alpha, beta, n, m, k_max);
  const int alpha_total = vec_total(alpha);
  const int bound = std::min(beta[0], n - alpha_total);
  if (bound < 0 || k_max < 0) return {};
  std::vector<std::future<std::vector<CubicalMatrix>>> branches;
  for (int v = 0; v <= bound; ++v) {
    branches.push_back(std::async(std::launch::async, [&alpha, &beta, n, m, k_max, v] {
      std::vector<CubicalMatrix> part;
      std::function<void(const CubicalMatrix&)> emit =
          [&part](const CubicalMatrix& c) { part.push_back(c); };
      QEnumerator e(alpha, beta, n, m, k_max, emit);
      e.first_value = v;
      e.run();
      return part;
    }));
  }
  std::vector<CubicalMatrix> out;
  for (auto& f : branches) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace multisym
