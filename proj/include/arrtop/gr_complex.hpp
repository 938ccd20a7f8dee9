#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/envelope.hpp"
#include "arrtop/os_algebra.hpp"
#include "arrtop/sparse.hpp"

namespace arrtop {

// Truncation default for gr-level computations.
inline constexpr std::size_t kDefaultMaxInternalDegree = 4;

// Free blocks C(q, t) = H_q (x) U^{t-q} in chain degree q and internal degree
// t, with differentials C(q, t) -> C(q-1, t). Matrices are row-major with one
// row per source basis element (index h * dim U^{t-q} + u for right
// complexes, u * b_q + h for left ones).
struct GrChainComplex {
  std::vector<std::size_t> generator_ranks;
  std::vector<std::size_t> u_dims;
  std::size_t max_internal_degree = 0;
  std::map<std::pair<std::size_t, std::size_t>, SparseMatrix> differentials;

  std::size_t top_degree() const { return generator_ranks.size() - 1; }
  std::size_t block_dim(std::size_t q, std::size_t t) const;
  // Zero-row matrix when q == 0 or the block is outside the complex.
  SparseMatrix differential(std::size_t q, std::size_t t) const;
  // First (q, t) with d_{q-1} d_q != 0, if any.
  std::optional<std::pair<std::size_t, std::size_t>> square_zero_failure() const;
};

// Koszul-type complex of the polynomial ring on n generators with the
// exterior generators x_I: d(x_I (x) m) = sum_r (-1)^(r-1) x_{I - i_r} (x) (-x_{i_r} m).
// Monomial basis of degree k is ordered lexicographically by exponent vector
// (descending in the first variable).
GrChainComplex torus_gr_complex(std::size_t n, std::size_t max_internal_degree);
std::vector<std::vector<std::size_t>> monomial_exponents(std::size_t n, std::size_t k);

// Right complex H_q (x) U with differential (-1)^q delta^R_q followed by left
// multiplication into U. Uses the projective complement.
GrChainComplex gr_complex(const OSAlgebra& projective_os, const UEnvelope& u);
GrChainComplex gr_complex(const Arrangement& a, std::size_t max_internal_degree,
                          std::uint64_t work_bound = default_work_bound());

// Left complex U (x) H_q with u (x) h -> -sum (u x) (x) h' from delta^L_q.
GrChainComplex gr_complex_left(const OSAlgebra& projective_os, const UEnvelope& u);

struct ResolutionReport {
  // Homology rank of the augmented complex per (q, t); only bidegrees inside
  // the truncation are listed.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> homology;
  bool acyclic() const;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> nonzero() const;
};

ResolutionReport verify_resolution(const GrChainComplex& c);

// Z-coefficient mode. Meaningful when the U basis and all differentials are
// integral; exactness over Z then means exactness over Q plus trivial
// invariant factors of every differential block.
struct IntegerCheck {
  bool available = false;
  std::string reason;
  bool exact_over_z = false;
  // Bidegrees whose incoming differential has a nontrivial invariant factor.
  std::vector<std::pair<std::size_t, std::size_t>> torsion_at;
};

IntegerCheck integer_check(const GrChainComplex& c, const UEnvelope& u);

// Nonzero invariant factors (Smith normal form) of an integer matrix.
std::vector<Integer> invariant_factors(const SparseMatrix& m);

}  // namespace arrtop
