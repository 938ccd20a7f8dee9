#include <catch_amalgamated.hpp>

#include <random>

#include "arrtop/arrangement.hpp"
#include "arrtop/error.hpp"
#include "arrtop/genericity.hpp"
#include "arrtop/lattice.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

Arrangement braid_in_c4() {
  std::vector<Covector> forms;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Covector v(4, 0);
      v[i] = 1;
      v[j] = -1;
      forms.push_back(v);
    }
  return normalize(forms, 4);
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("normalization collapses proportional forms") {
  const auto a = normalize({{2, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 3);
  CHECK(a.size() == 2);
  CHECK(a.reduced_on_load());
  const auto b = normalize({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(b == gen::boolean(3));
  const auto c = normalize({{1, 1, 0}, {-1, -1, 0}}, 3);
  CHECK(c.size() == 1);
  CHECK(c.forms[0] == Covector{1, 1, 0});
  CHECK_THROWS_AS(normalize({{0, 0, 0}}, 3), Error);
  CHECK_THROWS_AS(normalize({{1, 0}}, 3), Error);
}

TEST_CASE("intersection lattice small cases") {
  const auto l2 = intersection_lattice(gen::boolean(2));
  REQUIRE(l2.flats().size() == 4);
  CHECK(l2.mobius(0) == 1);
  CHECK(l2.mobius(*l2.find(HyperplaneSet::of({0}))) == -1);
  CHECK(l2.mobius(*l2.find(HyperplaneSet::of({1}))) == -1);
  CHECK(l2.mobius(*l2.find(HyperplaneSet::of({0, 1}))) == 1);

  const auto l3 = intersection_lattice(gen::boolean(3));
  CHECK(l3.count_by_codim() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(l3.mobius(l3.flats().size() - 1) == -1);

  // Three generic planes through a common line: top Mobius -2.
  const auto pencil = normalize({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 3);
  const auto lp = intersection_lattice(pencil);
  CHECK(lp.count_by_codim() == std::vector<std::size_t>{1, 3, 1});
  CHECK(lp.mobius(lp.flats().size() - 1) == 2);
}

TEST_CASE("Poincare polynomials of named arrangements") {
  CHECK(poincare_central(gen::boolean(3)) == IntPolynomial{1, 3, 3, 1});
  CHECK(poincare_central(gen::braid3()) == IntPolynomial{1, 6, 11, 6});
  CHECK(poincare_central(gen::near_pencil(3)) == IntPolynomial{1, 4, 5, 2});
  CHECK(projective_betti(gen::boolean(3)) == ints({1, 2, 1}));
  CHECK(projective_betti(gen::braid3()) == ints({1, 5, 6}));
  CHECK(projective_betti(gen::near_pencil(3)) == ints({1, 3, 2}));
  // chi(t) = (t-1)(t-2)(t-3) for the braid arrangement.
  CHECK(characteristic_polynomial(intersection_lattice(gen::braid3())) == IntPolynomial{-6, 11, -6, 1});
}

TEST_CASE("lattice agrees with the subset-expansion oracle on random arrangements") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = gen::random_essential(rng, 4, 7);
    INFO("trial " << trial);
    const auto lattice = intersection_lattice(a);
    CHECK(characteristic_polynomial(lattice) == oracle::whitney_characteristic(a));
    CHECK(poincare_central(a) == oracle::whitney_poincare(a));
    CHECK(poincare_projective(a) == oracle::divide_by_one_plus_t(oracle::whitney_poincare(a)));
    // Every flat's closure is itself, and rank oracle agrees with the minor oracle.
    RankOracle ro(a);
    for (const auto& f : lattice.flats()) {
      CHECK(ro.closure(f.hyperplanes) == f.hyperplanes);
      CHECK(f.codim == oracle::subset_rank(a, f.hyperplanes.bits()));
    }
  }
}

TEST_CASE("deletion-restriction recursion") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = gen::random_essential(rng, 4, 7);
    if (a.size() < 2) continue;
    const std::size_t h = rng() % a.size();
    const auto deleted = delete_hyperplane(a, h);
    const auto restricted = restrict_to_subspace(deleted, hyperplane_subspace(a, h));
    INFO("trial " << trial);
    CHECK(poincare_central(a) == poincare_central(deleted) + IntPolynomial{0, 1} * poincare_central(restricted));
  }
}

TEST_CASE("essentiality and essentialization") {
  CHECK(is_essential(gen::boolean(3)));
  CHECK_FALSE(is_essential(normalize({{1, 0, 0}, {0, 1, 0}}, 3)));
  const auto braid4 = braid_in_c4();
  CHECK_FALSE(is_essential(braid4));
  CHECK(braid4.rank() == 3);
  const auto e = essentialize(braid4);
  CHECK(e.ambient_dim == 3);
  CHECK(is_essential(e));
  CHECK(lattices_isomorphic(intersection_lattice(e), intersection_lattice(gen::braid3())));
  CHECK(essentialize(gen::boolean(3)) == gen::boolean(3));
  const auto single = essentialize(normalize({{1, 0, 0}}, 3));
  CHECK(single.ambient_dim == 1);
  CHECK(single.size() == 1);
}

TEST_CASE("restriction to subspaces") {
  const Subspace plane{{{1, 1, 2}, {1, 3, 1}}};
  const auto r = restrict_to_subspace(gen::boolean(3), plane);
  CHECK(r.ambient_dim == 2);
  CHECK(r.size() == 3);
  CHECK(restrict_to_subspace(gen::braid3(), Subspace::whole(3)) == gen::braid3());
  const auto two = normalize({{1, 0, 0}, {0, 1, 0}}, 3);
  const auto r2 = restrict_to_subspace(two, Subspace{{{1, 1, 0}, {0, 0, 1}}});
  CHECK(r2.size() == 1);
  // A hyperplane containing U is rejected.
  CHECK_THROWS_AS(restrict_to_subspace(two, Subspace{{{0, 1, 0}, {0, 0, 1}}}), Error);
}

TEST_CASE("L_k genericity and equality of k and p") {
  const auto b4 = gen::boolean(4);
  const Subspace u{{{1, 2, 3, 5}, {2, -1, 1, 3}, {1, 1, -2, 7}}};
  CHECK(is_Lk_generic(b4, u, 0));
  CHECK(is_Lk_generic(b4, u, 2));
  CHECK(k_genericity(b4, u) == Level::finite(2));
  CHECK(p_connectivity(b4, u) == Level::finite(2));
  CHECK(k_genericity(b4, Subspace::whole(4)).is_infinite());
  CHECK(p_connectivity(b4, Subspace::whole(4)).is_infinite());

  // U contains the direction of the codim-2 flat x0=x1=0 and cuts it badly.
  const Subspace bad{{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 2, 0, 0}}};
  CHECK(is_Lk_generic(b4, bad, 0));
  CHECK_FALSE(is_Lk_generic(b4, bad, 1));
  CHECK(k_genericity(b4, bad) == p_connectivity(b4, bad));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = gen::random_essential(rng, 4, 6);
    const auto ess = a.ambient_dim;
    if (ess < 3) continue;
    const auto sub = gen::random_subspace(rng, ess, 2 + rng() % (ess - 2));
    if (!is_Lk_generic(a, sub, 0)) continue;
    CHECK(k_genericity(a, sub) == p_connectivity(a, sub));
  }
}

TEST_CASE("generic section Betti numbers truncate") {
  CHECK(generic_section_betti(gen::braid3(), 3) == ints({1, 5, 6}));
  CHECK(generic_section_betti(gen::braid3(), 2) == ints({1, 5}));
  CHECK(generic_section_betti(gen::boolean(4), 3) == ints({1, 3, 3}));
  const auto h = random_generic_subspace(gen::boolean(4), 3, 2);
  CHECK(k_genericity(gen::boolean(4), h) == Level::finite(2));
}
