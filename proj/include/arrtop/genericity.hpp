#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/lattice.hpp"

namespace arrtop {

// Nonnegative count or the distinguished value INFINITE.
class Level {
 public:
  static Level finite(std::size_t n) { return Level(n, false); }
  static Level infinite() { return Level(0, true); }

  bool is_infinite() const { return infinite_; }
  // Requires !is_infinite().
  std::size_t value() const;
  std::string to_string() const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  Level(std::size_t n, bool inf) : value_(n), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

// Default seed for generic-subspace sampling.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// codim_V(X) == codim_U(X cap U) for every flat of codimension <= k + 1.
bool is_Lk_generic(const Arrangement& a, const Subspace& u, std::size_t k);
bool is_Lk_generic(const Arrangement& a, const IntersectionLattice& lattice, const Subspace& u,
                   std::size_t k);

// True when U spans the ambient space.
bool is_whole_space(const Arrangement& a, const Subspace& u);

// Largest l < rank(a) with U L_l-generic; INFINITE when U = V.
// Throws NotL0Generic when some hyperplane contains U.
Level k_genericity(const Arrangement& a, const Subspace& u);

// Largest q with b_r(M(a)) == b_r(M(a^U)) for all r <= q; INFINITE when
// all projective Betti numbers agree.
Level p_connectivity(const Arrangement& a, const Subspace& u);

// Projective Betti numbers of an iterated generic section of rank r.
std::vector<Integer> generic_section_betti(const Arrangement& a, std::size_t r);

// Seeded rejection sampling of a dim-dimensional integer subspace that is
// L_level-generic for a. Entries are drawn from [-bound, bound].
Subspace random_generic_subspace(const Arrangement& a, std::size_t dim, std::size_t level,
                                 std::uint64_t seed = kDefaultSeed, long bound = 5);

}  // namespace arrtop
