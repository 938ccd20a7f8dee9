#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

// Dense matrix over Q. Arrangements at desk scale keep these small; the
// large tensor-slice computations use SparseMatrix instead.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Gauss-Jordan elimination to reduced row-echelon form.
RowReduction row_reduce(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Rows form a basis of {x : m x = 0}.
QMatrix nullspace(const QMatrix& m);

}  // namespace arrtop
