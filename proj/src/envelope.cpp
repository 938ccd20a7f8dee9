#include "arrtop/envelope.hpp"

#include <cstdlib>
#include <string>

#include "arrtop/error.hpp"

namespace arrtop {

std::uint64_t default_work_bound() {
  if (const char* env = std::getenv("ARRTOP_WORK_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

UEnvelope::UEnvelope(std::size_t generators, const SparseMatrix& relations, std::size_t max_degree,
                     std::uint64_t work_bound)
    : generators_(generators) {
  require(relations.cols() == generators * generators, ErrorCode::InternalAssertion,
          "relations must live in V (x) V");
  {
    std::uint64_t work = 1;
    for (std::size_t k = 0; k < max_degree; ++k) {
      if (generators != 0 && work > work_bound / generators) work = work_bound + 1;
      else work *= generators;
      require(work <= work_bound, ErrorCode::WorkBoundExceeded,
              "tensor slice " + std::to_string(generators) + "^" + std::to_string(max_degree) +
                  " exceeds the work bound " + std::to_string(work_bound));
    }
  }
  const std::size_t n = generators;
  dims_ = {1};
  parent_ = {{0}};
  last_ = {{0}};
  for (std::size_t k = 1; k <= max_degree; ++k) {
    const std::size_t prev = dims_[k - 1];
    Echelon ech(prev * n, true);
    if (k >= 2)
      for (std::size_t w = 0; w < dims_[k - 2]; ++w)
        for (std::size_t r = 0; r < relations.rows(); ++r) {
          SparseVector v;
          for (const auto& [ij, c] : relations.row(r)) {
            const std::size_t i = ij / n, j = ij % n;
            for (const auto& [u, d] : right_[k - 2][w * n + i]) axpy(v, c * d, {{u * n + j, Rational(1)}});
          }
          ech.insert(std::move(v));
        }
    // Nonpivot columns form the basis.
    std::vector<std::size_t> new_index(prev * n, 0);
    std::vector<std::size_t> parents, lasts;
    for (std::size_t c = 0; c < prev * n; ++c)
      if (!ech.is_pivot(c)) {
        new_index[c] = parents.size();
        parents.push_back(c / n);
        lasts.push_back(c % n);
      }
    std::vector<SparseVector> right(prev * n);
    for (std::size_t c = 0; c < prev * n; ++c) {
      if (!ech.is_pivot(c)) {
        right[c] = {{new_index[c], Rational(1)}};
        continue;
      }
      SparseVector v;
      for (const auto& [col, x] : ech.pivot_row(c))
        if (col != c) v.emplace_back(new_index[col], -x);
      right[c] = std::move(v);
    }
    right_.push_back(std::move(right));
    dims_.push_back(parents.size());
    parent_.push_back(std::move(parents));
    last_.push_back(std::move(lasts));
  }
  // Left multiplication through g * (p h) = (g * p) * h.
  for (std::size_t k = 0; k < max_degree; ++k) {
    std::vector<SparseVector> left(n * dims_[k]);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t u = 0; u < dims_[k]; ++u) {
        if (k == 0) {
          left[g * dims_[k] + u] = right_[0][g];
        } else {
          left[g * dims_[k] + u] =
              right_multiply(k, left_[k - 1][g * dims_[k - 1] + parent_[k][u]], last_[k][u]);
        }
      }
    left_.push_back(std::move(left));
  }
}

std::vector<std::size_t> UEnvelope::word(std::size_t k, std::size_t index) const {
  std::vector<std::size_t> w(k);
  for (std::size_t d = k; d > 0; --d) {
    w[d - 1] = last_[d][index];
    index = parent_[d][index];
  }
  return w;
}

const SparseVector& UEnvelope::right_multiply(std::size_t k, std::size_t index, std::size_t g) const {
  require(k < right_.size(), ErrorCode::InternalAssertion, "product beyond the truncation degree");
  return right_[k][index * generators_ + g];
}

const SparseVector& UEnvelope::left_multiply(std::size_t g, std::size_t k, std::size_t index) const {
  require(k < left_.size(), ErrorCode::InternalAssertion, "product beyond the truncation degree");
  return left_[k][g * dims_[k] + index];
}

SparseVector UEnvelope::right_multiply(std::size_t k, const SparseVector& v, std::size_t g) const {
  SparseVector out;
  for (const auto& [u, c] : v) axpy(out, c, right_multiply(k, u, g));
  return out;
}

SparseVector UEnvelope::left_multiply(std::size_t g, std::size_t k, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [u, c] : v) axpy(out, c, left_multiply(g, k, u));
  return out;
}

SparseVector UEnvelope::normal_form(const std::vector<std::size_t>& w) const {
  require(w.size() <= max_degree(), ErrorCode::PreconditionViolation, "word longer than the truncation");
  SparseVector v{{0, Rational(1)}};
  for (std::size_t k = 0; k < w.size(); ++k) {
    require(w[k] < generators_, ErrorCode::PreconditionViolation, "letter out of range");
    v = right_multiply(k, v, w[k]);
  }
  return v;
}

bool UEnvelope::integral() const {
  for (const auto& table : {&right_, &left_})
    for (const auto& level : *table)
      for (const auto& v : level)
        for (const auto& [i, c] : v)
          if (c.get_den() != 1) return false;
  return true;
}

UEnvelope u_envelope(const OSAlgebra& os, std::size_t max_degree, std::uint64_t work_bound) {
  require(os.complement() == Complement::Projective, ErrorCode::InternalAssertion,
          "holonomy envelope uses the projective algebra");
  return UEnvelope(os.betti(1), os.reduced_diagonal(), max_degree, work_bound);
}

UEnvelope u_envelope(const Arrangement& a, std::size_t max_degree, std::uint64_t work_bound) {
  return u_envelope(OSAlgebra(a, Complement::Projective), max_degree, work_bound);
}

}  // namespace arrtop
