#pragma once

#include <cstddef>
#include <vector>

#include "lelong/rational.hpp"

namespace lelong {

using RowVector = std::vector<Rational>;

/// Dense row-major rational matrix. Rows may be empty (zero rows) but all
/// rows share the column count given at construction.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, RowVector(cols)) {}

  void push_row(RowVector row);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const RowVector& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t cols_ = 0;
  std::vector<RowVector> rows_;
};

/// Exact rank. Rows are scaled to integers, then reduced with Bareiss'
/// fraction-free elimination so intermediate entries stay bounded by minors.
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, from the reduced row echelon form. Each basis
/// vector has a 1 in its free column. Empty when m has full column rank.
std::vector<RowVector> nullspace(const Matrix& m);

/// Determinant of a square matrix (Bareiss).
Rational determinant(const Matrix& m);

}  // namespace lelong
