#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "arrtop/envelope.hpp"
#include "arrtop/error.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/os_algebra.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

// Exterior product of degree-one generators, as a signed monomial.
std::map<std::uint64_t, Rational> exterior(const std::vector<std::size_t>& word) {
  std::uint64_t mask = 0;
  int sign = 1;
  for (auto w : word) {
    const auto [m, s] = oracle::BruteOS::wedge(mask, std::uint64_t{1} << w);
    if (s == 0) return {};
    mask = m;
    sign *= s;
  }
  return {{mask, Rational(sign)}};
}

std::map<std::uint64_t, Rational> as_exterior(const OSAlgebra& os, std::size_t q, const SparseVector& v) {
  std::map<std::uint64_t, Rational> out;
  for (const auto& [i, c] : v) out[os.basis(q)[i].bits()] += c;
  return out;
}

SparseVector add(const SparseVector& a, const SparseVector& b, const Rational& f) {
  SparseVector r = a;
  axpy(r, f, b);
  return r;
}

Arrangement permuted(const Arrangement& a, std::mt19937_64& rng) {
  std::vector<Covector> forms = a.forms;
  std::shuffle(forms.begin(), forms.end(), rng);
  return normalize(forms, a.ambient_dim);
}

}  // namespace

TEST_CASE("NBC basis sizes") {
  CHECK(nbc_basis(gen::braid3(), 0).monomials.size() == 1);
  CHECK(nbc_basis(gen::braid3(), 0).monomials[0].empty());
  CHECK(nbc_basis(gen::boolean(3), 2).monomials.size() == 3);
  CHECK(nbc_basis(gen::braid3(), 2).monomials.size() == 11);
  const OSAlgebra proj(gen::braid3(), Complement::Projective);
  CHECK(proj.betti_numbers() == std::vector<std::size_t>{1, 5, 6});
}

TEST_CASE("NBC expansions agree with the exterior-algebra oracle") {
  std::mt19937_64 rng(404);
  std::vector<Arrangement> cases{gen::braid3(), gen::near_pencil(3), gen::generic4(),
                                 normalize({{1, 0}, {0, 1}, {1, 1}}, 2)};
  for (int i = 0; i < 12; ++i) cases.push_back(gen::random_essential(rng, 4, 6));
  for (const auto& a : cases) {
    const OSAlgebra os(a);
    const oracle::BruteOS brute(a);
    const auto whitney = oracle::whitney_poincare(a);
    for (std::size_t q = 0; q <= a.rank(); ++q) {
      CHECK(os.betti(q) == brute.dim(q));
      CHECK(Integer(os.betti(q)) == whitney[q]);
    }
    // Random words: our expansion minus the exterior product lies in the OS ideal.
    for (int t = 0; t < 15; ++t) {
      const std::size_t q = 1 + rng() % std::min<std::size_t>(3, a.rank());
      std::vector<std::size_t> word;
      for (std::size_t k = 0; k < q; ++k) word.push_back(rng() % a.size());
      auto ours = as_exterior(os, q, os.product(word));
      for (const auto& [m, c] : exterior(word)) ours[m] -= c;
      CHECK(brute.in_ideal(q, ours));
    }
  }
}

TEST_CASE("graded commutativity and associativity") {
  std::mt19937_64 rng(8);
  for (const auto& a : {gen::braid3(), gen::generic4(), gen::random_essential(rng, 4, 7)}) {
    const OSAlgebra os(a);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij[] = {i, j}, ji[] = {j, i};
        CHECK(add(os.product(ij), os.product(ji), 1).empty());
      }
    if (a.rank() < 3) continue;
    const auto cup3 = os.cup_matrix(3);
    const std::size_t b1 = os.betti(1);
    for (int t = 0; t < 20; ++t) {
      const std::size_t x = rng() % n, y = rng() % n, z = rng() % n;
      const std::size_t xy[] = {x, y}, xyz[] = {x, y, z};
      SparseVector via_cup;
      for (const auto& [s, c] : os.product(xy)) axpy(via_cup, c, cup3.row(s * b1 + *os.generator_of(z)));
      CHECK(add(via_cup, os.product(xyz), -1).empty());
    }
    // Degree-one times degree-two: e_x (e_y e_z) = (e_y e_z) e_x.
    const auto left3 = os.left_cup_matrix(3);
    const std::size_t b2 = os.betti(2);
    for (std::size_t s = 0; s < b2; ++s)
      for (std::size_t i = 0; i < b1; ++i) CHECK(left3.row(i * b2 + s) == cup3.row(s * b1 + i));
  }
}

TEST_CASE("degree-one pairing is the identity") {
  const OSAlgebra os(gen::braid3());
  const auto m = os.cup_matrix(1);
  CHECK(m.to_dense() == QMatrix::identity(6));
  CHECK(os.left_cup_matrix(1).to_dense() == QMatrix::identity(6));
}

TEST_CASE("three concurrent lines: one circuit") {
  const auto a = normalize({{1, 0}, {0, 1}, {1, 1}}, 2);
  const OSAlgebra os(a);
  CHECK(rank(os.cup_matrix(2)) == 2);
  // e_1 e_2 = e_0 e_2 - e_0 e_1 in NBC form.
  const std::size_t w[] = {1, 2};
  const auto v = os.product(w);
  REQUIRE(v.size() == 2);
  CHECK(coefficient(v, os.basis_index(HyperplaneSet::of({0, 2}))) == 1);
  CHECK(coefficient(v, os.basis_index(HyperplaneSet::of({0, 1}))) == -1);
  const auto diag = os.reduced_diagonal();
  CHECK(rank(diag) == 2);
}

TEST_CASE("reduced diagonal is antisymmetric with rank b_2") {
  std::mt19937_64 rng(21);
  std::vector<Arrangement> cases{gen::boolean(4), gen::braid3(), gen::generic4()};
  for (int i = 0; i < 6; ++i) cases.push_back(gen::random_essential(rng, 4, 7));
  for (const auto& a : cases) {
    const OSAlgebra os(a, Complement::Projective);
    const auto d = os.reduced_diagonal();
    const std::size_t b1 = os.betti(1);
    CHECK(rank(d) == os.betti(2));
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [col, c] : d.row(r)) {
        const std::size_t i = col / b1, j = col % b1;
        CHECK(coefficient(d.row(r), j * b1 + i) == -c);
      }
  }
  // Boolean: the cup map is onto the exterior square.
  const OSAlgebra b(gen::boolean(5), Complement::Projective);
  CHECK(b.betti(2) == 6);
  CHECK(rank(b.reduced_diagonal()) == 6);
}

TEST_CASE("enveloping algebra dimensions") {
  CHECK(u_envelope(gen::boolean(3), 4).dims() == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(u_envelope(gen::braid3(), 3).dims() == std::vector<std::size_t>{1, 5, 19, 65});
  CHECK(u_envelope(gen::braid3(), 0).dims() == std::vector<std::size_t>{1});
  const auto s = series_of_rational({1}, IntPolynomial{1, -2} * IntPolynomial{1, -3}, 4).integer_coefficients();
  const auto u = u_envelope(gen::braid3(), 4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(Integer(u.dim(k)) == s[k]);
  CHECK(u.integral());
}

TEST_CASE("enveloping dims do not depend on hyperplane order") {
  std::mt19937_64 rng(17);
  for (const auto& a : {gen::braid3(), gen::generic4(), gen::near_pencil(4)}) {
    const auto dims = u_envelope(a, 4).dims();
    for (int t = 0; t < 3; ++t) CHECK(u_envelope(permuted(a, rng), 4).dims() == dims);
  }
}

TEST_CASE("enveloping multiplication is associative") {
  const auto u = u_envelope(gen::braid3(), 4);
  const std::size_t n = u.generators();
  for (std::size_t k = 0; k + 2 <= 4; ++k)
    for (std::size_t i = 0; i < u.dim(k); i += 3)
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; h += 2) {
          const auto a = u.right_multiply(k + 1, u.left_multiply(g, k, i), h);
          const auto b = u.left_multiply(g, k + 1, u.right_multiply(k, i, h));
          CHECK(a == b);
        }
  // Basis words reduce to themselves.
  for (std::size_t i = 0; i < u.dim(3); ++i) {
    const auto nf = u.normal_form(u.word(3, i));
    REQUIRE(nf.size() == 1);
    CHECK(nf[0].first == i);
    CHECK(nf[0].second == 1);
  }
}

TEST_CASE("work bound is enforced") {
  try {
    u_envelope(gen::braid3(), 8, 1000);
    FAIL("expected WorkBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WorkBoundExceeded);
  }
}
