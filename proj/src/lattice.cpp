#include "arrtop/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arrtop/error.hpp"

namespace arrtop {

IntersectionLattice::IntersectionLattice(std::size_t ambient_dim, std::size_t hyperplane_count,
                                         std::vector<Flat> flats)
    : ambient_dim_(ambient_dim), hyperplane_count_(hyperplane_count), flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
    return x.codim != y.codim ? x.codim < y.codim : x.hyperplanes < y.hyperplanes;
  });
  require(!flats_.empty() && flats_.front().hyperplanes.empty(), ErrorCode::InternalAssertion,
          "lattice without bottom element");
  for (std::size_t i = 0; i < flats_.size(); ++i) index_.emplace(flats_[i].hyperplanes, i);
  mobius_.resize(flats_.size());
  mobius_[0] = 1;
  for (std::size_t i = 1; i < flats_.size(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (flats_[j].codim < flats_[i].codim && flats_[j].hyperplanes.subset_of(flats_[i].hyperplanes))
        sum += mobius_[j];
    mobius_[i] = -sum;
  }
}

std::optional<std::size_t> IntersectionLattice::find(HyperplaneSet s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::size_t> IntersectionLattice::count_by_codim() const {
  std::vector<std::size_t> counts(rank() + 1, 0);
  for (const auto& f : flats_) ++counts[f.codim];
  return counts;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  RankOracle oracle(a);
  std::vector<Flat> all{{HyperplaneSet{}, 0}};
  std::vector<HyperplaneSet> level{HyperplaneSet{}};
  for (std::size_t codim = 1; !level.empty(); ++codim) {
    std::set<HyperplaneSet> next;
    for (HyperplaneSet x : level)
      for (std::size_t h = 0; h < a.size(); ++h)
        if (!x.contains(h)) next.insert(oracle.closure(x.with(h)));
    level.assign(next.begin(), next.end());
    for (HyperplaneSet x : level) all.push_back({x, codim});
  }
  return IntersectionLattice(a.ambient_dim, a.size(), std::move(all));
}

IntPolynomial poincare_central(const IntersectionLattice& lattice) {
  std::vector<Integer> coeffs(lattice.rank() + 1);
  for (std::size_t i = 0; i < lattice.flats().size(); ++i)
    coeffs[lattice.flats()[i].codim] += abs(lattice.mobius(i));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial poincare_central(const Arrangement& a) {
  return poincare_central(intersection_lattice(a));
}

IntPolynomial poincare_projective(const IntersectionLattice& lattice) {
  // Exactness is guaranteed by the factorization of the central polynomial;
  // a failure here is an internal error.
  try {
    return poly_divide_exact(poincare_central(lattice), IntPolynomial{1, 1});
  } catch (const Error& e) {
    fail(ErrorCode::InternalAssertion, std::string("central Poincare polynomial not divisible by 1+t: ") + e.what());
  }
}

IntPolynomial poincare_projective(const Arrangement& a) {
  return poincare_projective(intersection_lattice(a));
}

IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice) {
  std::vector<Integer> coeffs(lattice.ambient_dim() + 1);
  for (std::size_t i = 0; i < lattice.flats().size(); ++i)
    coeffs[lattice.ambient_dim() - lattice.flats()[i].codim] += lattice.mobius(i);
  return IntPolynomial(std::move(coeffs));
}

std::vector<Integer> projective_betti(const Arrangement& a) {
  const IntersectionLattice lattice = intersection_lattice(a);
  const IntPolynomial p = poincare_projective(lattice);
  std::vector<Integer> b;
  for (std::size_t j = 0; j < lattice.rank(); ++j) b.push_back(p[j]);
  return b;
}

namespace {

// Per-hyperplane signature: number of flats containing it, per codimension.
std::vector<std::vector<std::size_t>> signatures(const IntersectionLattice& l) {
  std::vector<std::vector<std::size_t>> sig(l.hyperplane_count(),
                                            std::vector<std::size_t>(l.rank() + 1, 0));
  for (const auto& f : l.flats())
    for (auto h : f.hyperplanes.indices()) ++sig[h][f.codim];
  return sig;
}

}  // namespace

bool lattices_isomorphic(const IntersectionLattice& a, const IntersectionLattice& b) {
  if (a.hyperplane_count() != b.hyperplane_count() || a.count_by_codim() != b.count_by_codim())
    return false;
  const std::size_t n = a.hyperplane_count();
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  // Flats of `a` that become fully assigned once hyperplane i is placed.
  std::vector<std::vector<HyperplaneSet>> completed_at(n);
  for (const auto& f : a.flats())
    if (!f.hyperplanes.empty()) {
      auto idx = f.hyperplanes.indices();
      completed_at[idx.back()].push_back(f.hyperplanes);
    }

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      image[i] = j;
      bool ok = true;
      for (HyperplaneSet x : completed_at[i]) {
        HyperplaneSet mapped;
        for (auto h : x.indices()) mapped = mapped.with(image[h]);
        if (!b.is_flat(mapped)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace arrtop
