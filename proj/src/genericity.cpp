#include "arrtop/genericity.hpp"

#include <random>

#include "arrtop/error.hpp"

namespace arrtop {

std::size_t Level::value() const {
  require(!infinite_, ErrorCode::InternalAssertion, "value() of INFINITE level");
  return value_;
}

std::string Level::to_string() const { return infinite_ ? "INFINITE" : std::to_string(value_); }

namespace {

// Rank of the forms indexed by s, restricted to U.
std::size_t restricted_rank(const Arrangement& a, const Subspace& u, HyperplaneSet s) {
  const auto idx = s.indices();
  QMatrix m(idx.size(), u.dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t j = 0; j < u.dim(); ++j) {
      Integer acc = 0;
      for (std::size_t c = 0; c < a.ambient_dim; ++c) acc += a.forms[idx[r]][c] * u.basis[j][c];
      m(r, j) = acc;
    }
  return rank(m);
}

}  // namespace

bool is_Lk_generic(const Arrangement& a, const IntersectionLattice& lattice, const Subspace& u,
                   std::size_t k) {
  u.validate(a.ambient_dim);
  require(k < lattice.rank(), ErrorCode::PreconditionViolation,
          "genericity level " + std::to_string(k) + " must be below the rank " +
              std::to_string(lattice.rank()));
  for (const auto& f : lattice.flats()) {
    if (f.codim == 0 || f.codim > k + 1) continue;
    if (restricted_rank(a, u, f.hyperplanes) != f.codim) return false;
  }
  return true;
}

bool is_Lk_generic(const Arrangement& a, const Subspace& u, std::size_t k) {
  return is_Lk_generic(a, intersection_lattice(a), u, k);
}

bool is_whole_space(const Arrangement& a, const Subspace& u) {
  u.validate(a.ambient_dim);
  return u.dim() == a.ambient_dim;
}

Level k_genericity(const Arrangement& a, const Subspace& u) {
  const IntersectionLattice lattice = intersection_lattice(a);
  require(is_Lk_generic(a, lattice, u, 0), ErrorCode::NotL0Generic,
          "some hyperplane contains the subspace");
  if (is_whole_space(a, u)) return Level::infinite();
  std::size_t k = 0;
  while (k + 1 < lattice.rank() && is_Lk_generic(a, lattice, u, k + 1)) ++k;
  return Level::finite(k);
}

Level p_connectivity(const Arrangement& a, const Subspace& u) {
  const auto b = projective_betti(a);
  const auto bu = projective_betti(restrict_to_subspace(a, u));
  const std::size_t n = std::max(b.size(), bu.size());
  auto at = [](const std::vector<Integer>& v, std::size_t i) { return i < v.size() ? v[i] : Integer(0); };
  for (std::size_t r = 0; r < n; ++r)
    if (at(b, r) != at(bu, r)) {
      require(r > 0, ErrorCode::InternalAssertion, "b_0 mismatch");
      return Level::finite(r - 1);
    }
  return Level::infinite();
}

std::vector<Integer> generic_section_betti(const Arrangement& a, std::size_t r) {
  require(is_essential(a), ErrorCode::PreconditionViolation, "arrangement must be essential");
  const auto b = projective_betti(a);
  require(r >= 1 && r <= b.size(), ErrorCode::RankOutOfRange,
          "section rank " + std::to_string(r) + " outside [1, " + std::to_string(b.size()) + "]");
  return {b.begin(), b.begin() + static_cast<long>(r)};
}

Subspace random_generic_subspace(const Arrangement& a, std::size_t dim, std::size_t level,
                                 std::uint64_t seed, long bound) {
  require(dim >= 1 && dim <= a.ambient_dim, ErrorCode::PreconditionViolation,
          "subspace dimension out of range");
  const IntersectionLattice lattice = intersection_lattice(a);
  require(level < lattice.rank(), ErrorCode::PreconditionViolation, "genericity level too large");
  // mt19937_64 output is fully specified, and the modular mapping below keeps
  // the draws identical across standard libraries.
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Subspace u;
    for (std::size_t i = 0; i < dim; ++i) {
      Covector v(a.ambient_dim);
      for (auto& x : v) x = static_cast<long>(rng() % width) - bound;
      u.basis.push_back(std::move(v));
    }
    if (rank(u.matrix()) != dim) continue;
    if (is_Lk_generic(a, lattice, u, level)) return u;
  }
  fail(ErrorCode::PreconditionViolation, "no generic subspace found after 10000 draws");
}

}  // namespace arrtop
