#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/polynomial.hpp"

namespace arrtop {

// A flat is identified by the closed set of hyperplanes containing it.
struct Flat {
  HyperplaneSet hyperplanes;
  std::size_t codim = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t ambient_dim, std::size_t hyperplane_count,
                      std::vector<Flat> flats);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t hyperplane_count() const { return hyperplane_count_; }
  // Codimension of the top flat.
  std::size_t rank() const { return flats_.back().codim; }

  // Sorted by codimension, then by hyperplane set.
  const std::vector<Flat>& flats() const { return flats_; }
  const Integer& mobius(std::size_t flat_index) const { return mobius_[flat_index]; }
  std::optional<std::size_t> find(HyperplaneSet s) const;
  bool is_flat(HyperplaneSet s) const { return find(s).has_value(); }
  std::vector<std::size_t> count_by_codim() const;

 private:
  std::size_t ambient_dim_;
  std::size_t hyperplane_count_;
  std::vector<Flat> flats_;
  std::vector<Integer> mobius_;
  std::unordered_map<HyperplaneSet, std::size_t, HyperplaneSetHash> index_;
};

IntersectionLattice intersection_lattice(const Arrangement& a);

// Sum of |mu(X)| t^codim(X): Betti numbers of the central complement.
IntPolynomial poincare_central(const IntersectionLattice& lattice);
IntPolynomial poincare_central(const Arrangement& a);
// Central Poincare polynomial divided by (1 + t).
IntPolynomial poincare_projective(const IntersectionLattice& lattice);
IntPolynomial poincare_projective(const Arrangement& a);
// Sum of mu(X) t^dim(X).
IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice);

// Projective Betti numbers b_0..b_{rank-1}.
std::vector<Integer> projective_betti(const Arrangement& a);

// True iff some bijection of hyperplanes carries the flats of one lattice
// onto the flats of the other.
bool lattices_isomorphic(const IntersectionLattice& a, const IntersectionLattice& b);

}  // namespace arrtop
