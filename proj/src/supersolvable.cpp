#include "arrtop/supersolvable.hpp"

#include <algorithm>

#include "arrtop/error.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/polynomial.hpp"

namespace arrtop {

namespace {

struct Search {
  const IntersectionLattice& lattice;
  const RankOracle& oracle;
  std::size_t failure_rank;
  std::vector<HyperplaneSet> chain;  // top down

  // A coatom X of [0, top] is modular iff every pair of atoms below top
  // and outside X spans a rank-2 flat meeting X.
  bool modular_coatom(HyperplaneSet top, HyperplaneSet x) const {
    std::vector<std::size_t> outside;
    for (auto h : top.indices())
      if (!x.contains(h)) outside.push_back(h);
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j) {
        const HyperplaneSet line = oracle.closure(HyperplaneSet{}.with(outside[i]).with(outside[j]));
        if ((line & x).empty()) return false;
      }
    return true;
  }

  bool descend(HyperplaneSet top, std::size_t rank) {
    chain.push_back(top);
    if (rank == 0) return true;
    for (const auto& f : lattice.flats()) {
      if (f.codim != rank - 1 || !f.hyperplanes.subset_of(top)) continue;
      if (!modular_coatom(top, f.hyperplanes)) continue;
      if (descend(f.hyperplanes, rank - 1)) return true;
    }
    failure_rank = std::min(failure_rank, rank);
    chain.pop_back();
    return false;
  }
};

}  // namespace

SupersolvabilityResult analyze_supersolvability(const Arrangement& a) {
  require(is_essential(a), ErrorCode::PreconditionViolation,
          "supersolvability is tested on essential arrangements");
  const IntersectionLattice lattice = intersection_lattice(a);
  const RankOracle oracle(a);
  Search search{lattice, oracle, lattice.rank(), {}};
  SupersolvabilityResult out;
  if (!search.descend(HyperplaneSet::first(a.size()), lattice.rank())) {
    out.failure_rank = search.failure_rank;
    return out;
  }
  out.supersolvable = true;
  out.chain.assign(search.chain.rbegin(), search.chain.rend());
  for (std::size_t i = 1; i < out.chain.size(); ++i)
    out.exponents.exponents.push_back(static_cast<long>(out.chain[i].size() - out.chain[i - 1].size()));
  std::sort(out.exponents.exponents.begin(), out.exponents.exponents.end());
  std::vector<Integer> cs(out.exponents.exponents.begin(), out.exponents.exponents.end());
  require(product_of_linear(cs) == poincare_central(lattice), ErrorCode::InternalAssertion,
          "exponents do not factor the Poincare polynomial");
  return out;
}

ExponentData supersolvable_exponents(const Arrangement& a) {
  auto r = analyze_supersolvability(a);
  require(r.supersolvable, ErrorCode::NotSupersolvable,
          "no modular coatom in an interval of rank " + std::to_string(r.failure_rank));
  return r.exponents;
}

}  // namespace arrtop
