#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/os_algebra.hpp"
#include "arrtop/sparse.hpp"

namespace arrtop {

// 10^6 unless ARRTOP_WORK_BOUND is set to a positive integer.
std::uint64_t default_work_bound();

// Quadratic algebra T(V)/(R) truncated at max_degree, with a monomial basis
// in each degree obtained from fully reduced echelon forms. A basis element
// of degree k is a word; its parent is the prefix of length k-1 (itself a
// basis element) and `last` is the final letter.
class UEnvelope {
 public:
  // Relations are rows over V (x) V with index i * generators + j.
  // Throws WorkBoundExceeded when generators^max_degree exceeds work_bound.
  UEnvelope(std::size_t generators, const SparseMatrix& relations, std::size_t max_degree,
            std::uint64_t work_bound = default_work_bound());

  std::size_t generators() const { return generators_; }
  std::size_t max_degree() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t k) const { return dims_.at(k); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::vector<std::size_t> word(std::size_t k, std::size_t index) const;

  // Basis element `index` of degree k times generator g, in degree k + 1.
  const SparseVector& right_multiply(std::size_t k, std::size_t index, std::size_t g) const;
  // Generator g times basis element `index` of degree k.
  const SparseVector& left_multiply(std::size_t g, std::size_t k, std::size_t index) const;
  SparseVector right_multiply(std::size_t k, const SparseVector& v, std::size_t g) const;
  SparseVector left_multiply(std::size_t g, std::size_t k, const SparseVector& v) const;

  // Normal form of an arbitrary word of length <= max_degree.
  SparseVector normal_form(const std::vector<std::size_t>& word) const;

  // True when every multiplication table entry is an integer.
  bool integral() const;

 private:
  std::size_t generators_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> last_;
  // right_[k][index * generators + g], k < max_degree
  std::vector<std::vector<SparseVector>> right_;
  // left_[k][g * dim(k) + index], k < max_degree
  std::vector<std::vector<SparseVector>> left_;
};

// Holonomy algebra of the projective complement: generators are the degree
// one projective Orlik-Solomon basis, relations the reduced diagonal image.
UEnvelope u_envelope(const OSAlgebra& projective_os, std::size_t max_degree,
                     std::uint64_t work_bound = default_work_bound());
UEnvelope u_envelope(const Arrangement& a, std::size_t max_degree,
                     std::uint64_t work_bound = default_work_bound());

}  // namespace arrtop
