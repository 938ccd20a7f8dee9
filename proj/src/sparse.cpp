#include "arrtop/sparse.hpp"

#include <algorithm>

#include "arrtop/error.hpp"

namespace arrtop {

void axpy(SparseVector& v, const Rational& factor, const SparseVector& w) {
  if (factor == 0 || w.empty()) return;
  SparseVector out;
  out.reserve(v.size() + w.size());
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() || j != w.end()) {
    if (j == w.end() || (i != v.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == v.end() || j->first < i->first) {
      out.emplace_back(j->first, factor * j->second);
      ++j;
    } else {
      Rational sum = i->second + factor * j->second;
      if (sum != 0) out.emplace_back(i->first, std::move(sum));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Rational& factor) {
  if (factor == 0) return {};
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * factor);
  return out;
}

Rational coefficient(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == index) return it->second;
  return 0;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  require(r < rows_.size() && c < cols_, ErrorCode::InternalAssertion,
          "sparse matrix index out of range");
  axpy(rows_[r], value, SparseVector{{c, Rational(1)}});
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, x] : rows_[r]) t.rows_[c].emplace_back(r, x);
  return t;
}

QMatrix SparseMatrix::to_dense() const {
  QMatrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, x] : rows_[r]) m(r, c) = x;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const QMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.rows_[r].emplace_back(c, m(r, c));
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  require(a.cols() == b.rows(), ErrorCode::InternalAssertion, "sparse shape mismatch");
  SparseMatrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, x] : a.rows_[r]) axpy(p.rows_[r], x, b.rows_[k]);
  return p;
}

SparseVector Echelon::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t col = v[pos].first;
    if (pivot_row_[col]) {
      const Rational factor = -v[pos].second;
      axpy(v, factor, rows_[*pivot_row_[col]]);
      // Pivot rows only touch columns >= col, so entries before pos survive.
    } else {
      ++pos;
    }
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t lead = v.front().first;
  const Rational inv = 1 / v.front().second;
  for (auto& [c, x] : v) x *= inv;
  if (fully_reduced_) {
    for (auto& r : rows_) {
      const Rational f = coefficient(r, lead);
      if (f != 0) axpy(r, -f, v);
    }
  }
  pivot_row_[lead] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < dimension_; ++c)
    if (pivot_row_[c]) cols.push_back(c);
  return cols;
}

std::size_t rank(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return rank(m.transpose());
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

}  // namespace arrtop
