#pragma once

#include <cstddef>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

struct ExponentData {
  std::vector<long> exponents;  // ascending, d_1 = 1 for genuine inputs
  std::size_t length() const { return exponents.size(); }
  friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

struct SupersolvabilityResult {
  bool supersolvable = false;
  ExponentData exponents;
  // Hyperplane sets of the modular chain, bottom (empty) to top.
  std::vector<HyperplaneSet> chain;
  // When not supersolvable: lowest rank of an interval [0, X] reached by
  // the search in which no modular coatom exists.
  std::size_t failure_rank = 0;
};

// Requires an essential arrangement (PreconditionViolation otherwise).
SupersolvabilityResult analyze_supersolvability(const Arrangement& a);

// Throws NotSupersolvable carrying the failure rank in its message.
ExponentData supersolvable_exponents(const Arrangement& a);

}  // namespace arrtop
