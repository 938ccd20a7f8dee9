#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arrtop/qmatrix.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

// Entries sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// v += factor * w
void axpy(SparseVector& v, const Rational& factor, const SparseVector& w);
SparseVector scaled(const SparseVector& v, const Rational& factor);
Rational coefficient(const SparseVector& v, std::size_t index);

// Row-major sparse matrix over Q.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  SparseVector& row(std::size_t r) { return rows_[r]; }
  void add(std::size_t r, std::size_t c, const Rational& value);

  bool is_zero() const;
  std::size_t nonzeros() const;
  SparseMatrix transpose() const;
  QMatrix to_dense() const;
  static SparseMatrix from_dense(const QMatrix& m);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

// Incrementally built row-echelon basis of a subspace of Q^n. With
// fully_reduced set, every pivot column is zero outside its own row, which
// turns reduce() into a normal form modulo the span.
class Echelon {
 public:
  explicit Echelon(std::size_t dimension, bool fully_reduced = false)
      : dimension_(dimension), fully_reduced_(fully_reduced), pivot_row_(dimension) {}

  // Returns true when v was independent of the rows inserted so far.
  bool insert(SparseVector v);
  SparseVector reduce(SparseVector v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column].has_value(); }
  // Row whose leading entry sits in `column`; normalized to leading 1.
  const SparseVector& pivot_row(std::size_t column) const { return rows_[*pivot_row_[column]]; }
  std::vector<std::size_t> pivot_columns() const;

 private:
  std::size_t dimension_;
  bool fully_reduced_;
  std::vector<std::optional<std::size_t>> pivot_row_;
  std::vector<SparseVector> rows_;
};

std::size_t rank(const SparseMatrix& m);

}  // namespace arrtop
