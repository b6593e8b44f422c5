#include "lelong/linalg.hpp"

#include <cassert>
#include <utility>

namespace lelong {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix integer_rows(const Matrix& m) {
  IntMatrix out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm_den = 1;
    for (const auto& x : m.row(r)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> row;
    row.reserve(m.cols());
    for (const auto& x : m.row(r)) row.push_back(x.get_num() * (lcm_den / x.get_den()));
    out.push_back(std::move(row));
  }
  return out;
}

// Returns rank; leaves `a` in fraction-free echelon form. `swaps` counts row
// exchanges so the determinant sign can be recovered.
std::size_t bareiss(IntMatrix& a, std::size_t cols, int& swaps) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  swaps = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      ++swaps;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

void Matrix::push_row(RowVector row) {
  assert(row.size() == cols_);
  rows_.push_back(std::move(row));
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a = integer_rows(m);
  int swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

Rational determinant(const Matrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = integer_rows(m);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm_den = 1;
    for (const auto& x : m.row(r)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    scale *= lcm_den;
  }
  int swaps = 0;
  if (bareiss(a, n, swaps) < n) return 0;
  Rational det(a[n - 1][n - 1], scale);
  det.canonicalize();
  return swaps % 2 == 0 ? det : Rational(-det);
}

std::vector<RowVector> nullspace(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RowVector> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = 1 / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RowVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RowVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lelong
