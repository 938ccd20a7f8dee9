#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/sparse.hpp"

namespace arrtop {

// Which complement the cohomology describes: C^l minus the hyperplanes, or
// its projectivization. The projective algebra is the quotient of the
// central one by the ideal generated by the first generator e_0.
enum class Complement { Central, Projective };

struct NBCBasis {
  std::size_t degree = 0;
  // Sorted hyperplane-index tuples, lexicographic order.
  std::vector<std::vector<std::size_t>> monomials;
};

// Orlik-Solomon algebra with its no-broken-circuit basis. Hyperplane order
// is the normalized input order.
class OSAlgebra {
 public:
  explicit OSAlgebra(const Arrangement& a, Complement complement = Complement::Central);

  Complement complement() const { return complement_; }
  const Arrangement& arrangement() const { return oracle_.arrangement(); }
  // Largest degree with a nonzero basis.
  std::size_t top_degree() const { return basis_.size() - 1; }
  std::size_t betti(std::size_t q) const { return q < basis_.size() ? basis_[q].size() : 0; }
  std::vector<std::size_t> betti_numbers() const;
  const std::vector<HyperplaneSet>& basis(std::size_t q) const { return basis_.at(q); }
  std::size_t basis_index(HyperplaneSet s) const;

  // Ordered product e_{w_1} ... e_{w_k}, expanded in basis(k).
  SparseVector product(std::span<const std::size_t> word) const;

  // Row (s * b_1 + i) is the NBC expansion of e_s * e_i, s in basis(q-1),
  // i in basis(1). Columns index basis(q).
  SparseMatrix cup_matrix(std::size_t q) const;
  // Row (i * b_{q-1} + s) is the expansion of e_i * e_s.
  SparseMatrix left_cup_matrix(std::size_t q) const;

  // Dual maps H_q -> H_{q-1} (x) H_1 and H_q -> H_1 (x) H_{q-1}. Row t is the
  // image of the dual basis vector of basis(q)[t]; columns follow the pair
  // indexing of cup_matrix / left_cup_matrix.
  SparseMatrix delta_R(std::size_t q) const { return cup_matrix(q).transpose(); }
  SparseMatrix delta_L(std::size_t q) const { return left_cup_matrix(q).transpose(); }

  // Rows span the image of the reduced diagonal H_2 -> H_1 (x) H_1 (index
  // i * b_1 + j); each row is antisymmetric under the factor swap.
  SparseMatrix reduced_diagonal() const;

  // Generator index (in basis(1)) of hyperplane h, if it is a generator.
  std::optional<std::size_t> generator_of(std::size_t hyperplane) const;

 private:
  using Expansion = std::vector<std::pair<HyperplaneSet, Integer>>;
  const Expansion& expand_central(HyperplaneSet s) const;
  bool is_nbc(HyperplaneSet s) const;

  Complement complement_;
  RankOracle oracle_;
  std::vector<std::vector<HyperplaneSet>> basis_;
  std::unordered_map<HyperplaneSet, std::size_t, HyperplaneSetHash> index_;
  mutable std::unordered_map<HyperplaneSet, Expansion, HyperplaneSetHash> memo_;
};

NBCBasis nbc_basis(const Arrangement& a, std::size_t q);

}  // namespace arrtop
