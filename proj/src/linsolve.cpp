#include "multisym/linsolve.hpp"

#include <stdexcept>

namespace multisym {

namespace {

// Clears denominators row by row; the row scaling does not change rank or the
// solution set.
std::vector<std::vector<Int>> to_integer_rows(
    const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Int l = 1;
    for (const Rational& x : row) l = lcm(l, denominator(x));
    std::vector<Int> scaled;
    scaled.reserve(row.size());
    for (const Rational& x : row)
      scaled.push_back(numerator(x) * (l / denominator(x)));
    out.push_back(std::move(scaled));
  }
  return out;
}

// Fraction-free forward elimination. Returns the pivot columns; on exit the
// matrix is upper-trapezoidal with exact integer entries.
std::vector<int> bareiss(std::vector<std::vector<Int>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivot_cols;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int exact_rank(std::vector<std::vector<Rational>> m) {
  auto rows = to_integer_rows(m);
  return static_cast<int>(bareiss(rows).size());
}

std::optional<std::vector<Rational>> exact_solve(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const int rows = static_cast<int>(a.size());
  if (static_cast<int>(rhs.size()) != rows)
    throw std::invalid_argument("exact_solve: rhs length mismatch");
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("exact_solve: ragged matrix");
  }

  // Augment and eliminate fraction-free; the last column is the rhs.
  std::vector<std::vector<Rational>> augmented = std::move(a);
  for (int r = 0; r < rows; ++r) augmented[r].push_back(rhs[r]);
  auto m = to_integer_rows(augmented);
  std::vector<int> pivots = bareiss(m);

  // A pivot in the rhs column marks an inconsistent system.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

  std::vector<Rational> x(cols, 0);
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int col = pivots[i];
    Rational acc(m[i][cols]);
    for (int c = col + 1; c < cols; ++c)
      if (x[c] != 0) acc -= Rational(m[i][c]) * x[c];
    x[col] = acc / Rational(m[i][col]);
  }
  return x;
}

}  // namespace multisym
