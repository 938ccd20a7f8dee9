// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "arrtop/error.hpp"
#include "arrtop/genericity.hpp"
#include "arrtop/io.hpp"
#include "arrtop/gr_complex.hpp"
#include "arrtop/homotopy.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/lie_ranks.hpp"
#include "arrtop/polar.hpp"
#include "arrtop/supersolvable.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "json.hpp"

using namespace arrtop;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const Error& e) {
    o = {false, std::string("error ") + std::string(error_name(e.code())) + ": " + e.what()};
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 10.0) o = {false, o.detail + " (took " + std::to_string(secs) + " s, limit 10 s)"};
  if (!o.ok) ++failures;
  std::printf("%s %2d %s%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.empty() ? "" : " :: ",
              o.detail.c_str());
}

std::string list(const std::vector<Integer>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return "[" + s.str() + "]";
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

int main() {
  criterion(1, "boolean arrangement in P^n, n=2,3,4: polar degree 1, BOOLEAN_B1", [] {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto r = polar_degree(gen::boolean(n + 1));
      if (r.degree != 1 || r.classification != PolarClass::BooleanB1)
        return Outcome{false, "n=" + std::to_string(n) + " degree " + r.degree.get_str()};
    }
    return Outcome{true, ""};
  });

  criterion(2, "near-pencil {x0..xn, x0+x1}, n=2,3: polar degree 2, NEARPENCIL_B2", [] {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto r = polar_degree(gen::near_pencil(n + 1));
      if (r.degree != 2 || r.classification != PolarClass::NearPencilB2)
        return Outcome{false, "n=" + std::to_string(n) + " degree " + r.degree.get_str() + " " +
                                  to_string(r.classification)};
    }
    return Outcome{true, ""};
  });

  criterion(3, "triangle xyz in P^2: polar degree 1 (homaloidal)", [] {
    const auto r = polar_degree(normalize({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
    return Outcome{r.degree == 1, "degree " + r.degree.get_str()};
  });

  criterion(4, "essential braid rank 3: P=(1+t)(1+2t)(1+3t), exponents {1,2,3}, polar degree 6", [] {
    const auto a = gen::braid3();
    const IntPolynomial expected = IntPolynomial{1, 1} * IntPolynomial{1, 2} * IntPolynomial{1, 3};
    const IntPolynomial p = poincare_central(a);
    const bool oracle_ok = oracle::whitney_poincare(a) == expected;
    const auto e = supersolvable_exponents(a);
    const auto d = polar_degree(a).degree;
    // Frozen CLI outputs must still agree.
    const std::string dir = std::string(ARRTOP_SOURCE_DIR) + "/tests/golden/";
    const auto gp = nlohmann::json::parse(read_file(dir + "braid3_poincare.json"));
    const auto ge = nlohmann::json::parse(read_file(dir + "braid3_exponents.json"));
    const auto gd = nlohmann::json::parse(read_file(dir + "braid3_polar-degree.json"));
    const bool golden_ok = gp["results"]["coefficients"] == nlohmann::json({1, 6, 11, 6}) &&
                           ge["results"]["exponents"] == nlohmann::json({1, 2, 3}) &&
                           gd["results"]["degree"] == 6;
    const bool ok = p == expected && oracle_ok && golden_ok && e.exponents == std::vector<long>{1, 2, 3} && d == 6;
    return Outcome{ok, "P=" + p.to_string() + " degree " + d.get_str()};
  });

  criterion(5, "Euler characteristic identity (-1)^n[chi(M)-chi(M cap H)] = b_n on 24 random arrangements", [] {
    std::mt19937_64 rng(20240501);
    for (int i = 0; i < 24; ++i) {
      const auto a = gen::random_essential(rng, 4, 8);
      const std::size_t l = a.ambient_dim, n = l - 1;
      const Integer bn = poincare_projective(a)[n];
      // Left side entirely from the subset-expansion oracle.
      const std::size_t level = std::min(a.rank(), l - 1) - 1;
      const Subspace h = random_generic_subspace(a, l - 1, level, 1000 + static_cast<std::uint64_t>(i));
      const Integer chi_m = oracle::divide_by_one_plus_t(oracle::whitney_poincare(a)).evaluate(-1);
      const Integer chi_mh =
          oracle::divide_by_one_plus_t(oracle::whitney_poincare(restrict_to_subspace(a, h))).evaluate(-1);
      Integer lhs = chi_m - chi_mh;
      if (n % 2 == 1) lhs = -lhs;
      if (lhs != bn)
        return Outcome{false, "case " + std::to_string(i) + ": " + lhs.get_str() + " vs " + bn.get_str()};
      if (polar_degree(a).euler_check_value != bn) return Outcome{false, "library check disagrees"};
    }
    return Outcome{true, "24 cases"};
  });

  criterion(6, "k(A,U) = p(A,U) on seeded pairs including degenerate subspaces", [] {
    std::mt19937_64 rng(77);
    int pairs = 0, degenerate = 0;
    while (pairs < 30) {
      const auto a = gen::random_essential(rng, 4, 7);
      if (a.rank() < 3) continue;
      const std::size_t l = a.ambient_dim;
      Subspace u;
      bool is_degenerate = false;
      const int kind = pairs % 3;
      if (kind == 0) {
        u = gen::random_subspace(rng, l, 2 + rng() % (l - 2));
      } else {
        const std::size_t codim = kind == 1 ? 2 : 3;
        if (l <= codim) continue;
        const std::size_t dim = codim + rng() % (l - codim);
        if (dim < 2 || dim >= l || !gen::degenerate_subspace(rng, a, dim, codim, u)) continue;
        is_degenerate = true;
      }
      if (!is_Lk_generic(a, u, 0)) continue;
      const Level k = k_genericity(a, u);
      const Level p = p_connectivity(a, u);
      if (!(k == p)) return Outcome{false, "k=" + k.to_string() + " p=" + p.to_string()};
      if (is_degenerate && !k.is_infinite() && k.value() + 1 < u.dim()) ++degenerate;
      ++pairs;
    }
    // Whole space: both INFINITE.
    const auto b = gen::boolean(4);
    if (!k_genericity(b, Subspace::whole(4)).is_infinite() || !p_connectivity(b, Subspace::whole(4)).is_infinite())
      return Outcome{false, "U=V not INFINITE"};
    return Outcome{degenerate >= 5, std::to_string(pairs) + " pairs, " + std::to_string(degenerate) +
                                        " with k below dim U - 1"};
  });

  criterion(7, "Hattori case: cokernel ranks = closed-form series = [1,3,6,10,15,21], gr^0 = b_3 = 1", [] {
    const auto s = make_section(gen::boolean(4), 3);
    const auto coker = gr_pi_p_cokernel(s, 5);
    const auto h = pi_p_hilbert_series(s.exponents, s.p, 5);
    const auto expected = ints({1, 3, 6, 10, 15, 21});
    const auto b = projective_betti(gen::boolean(4));
    bool ok = coker == expected && h.series.integer_coefficients() == expected && coker[0] == b[3];
    return Outcome{ok, "cokernel " + list(coker) + " series " + list(h.series.integer_coefficients())};
  });

  criterion(8, "braid rank 3: U dims [1,5,19,65] = 1/((1-2t)(1-3t))", [] {
    const auto u = u_envelope(gen::braid3(), 3);
    const auto series = series_of_rational(IntPolynomial{1}, IntPolynomial{1, -2} * IntPolynomial{1, -3}, 3);
    std::vector<Integer> dims(u.dims().begin(), u.dims().end());
    const bool ok = dims == ints({1, 5, 19, 65}) && series.integer_coefficients() == dims;
    return Outcome{ok, "dims " + list(dims)};
  });

  criterion(9, "resolution property: zero homology to internal degree 4 (boolean rank 4, braid rank 3)", [] {
    for (const auto& a : {gen::boolean(4), gen::braid3()}) {
      const auto r = verify_resolution(gr_complex(a, 4));
      if (!r.acyclic()) return Outcome{false, "nonzero homology"};
    }
    return Outcome{true, ""};
  });

  criterion(10, "generic 4 planes in C^3: NotSupersolvable and nonzero homology below the truncation", [] {
    const auto a = gen::generic4();
    bool rejected = false;
    try {
      supersolvable_exponents(a);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NotSupersolvable;
    }
    const auto r = verify_resolution(gr_complex(a, 4));
    bool low = false;
    std::string where;
    for (const auto& [key, rank] : r.nonzero()) {
      where += " (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")=" + std::to_string(rank);
      if (key.second < 4) low = true;
    }
    return Outcome{rejected && low, "homology" + where};
  });

  criterion(11, "LCS ranks for {1,2,3}: 6,4,10 and re-expansion gives (1-t)(1-2t)(1-3t)", [] {
    const auto phi = lcs_ranks(ExponentData{{1, 2, 3}}, 3);
    const auto back = lcs_product(phi, 3);
    return Outcome{phi == ints({6, 4, 10}) && back == ints({1, -6, 11, -6}), "phi " + list(phi)};
  });

  criterion(12, "nodal cubic: isolated-singularity degree 3 = plane-curve b_1 3", [] {
    const auto d = isolated_singularity_degree(3, 2, {Integer(1)}).value;
    const auto b = plane_curve_affine_b1(0, 1, 3);
    return Outcome{d == 3 && b == 3, d.get_str() + " vs " + b.get_str()};
  });

  criterion(13, "torus complexes n<=4 augmented-acyclic to internal degree 5", [] {
    for (std::size_t n = 1; n <= 4; ++n)
      if (!verify_resolution(torus_gr_complex(n, 5)).acyclic()) return Outcome{false, "n=" + std::to_string(n)};
    return Outcome{true, ""};
  });

  criterion(14, "polar degree invariant under 50 duplicating/rescaling mutations", [] {
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 50; ++i) {
      const auto a = gen::random_essential(rng, 4, 6);
      std::vector<Covector> raw;
      for (const auto& f : a.forms) {
        const std::size_t copies = 1 + rng() % 3;
        for (std::size_t c = 0; c < copies; ++c) {
          long scale = gen::draw(rng, 4);
          if (scale == 0) scale = 1;
          Covector v(f);
          for (auto& x : v) x *= scale;
          raw.push_back(v);
        }
      }
      std::shuffle(raw.begin(), raw.end(), rng);
      const Arrangement m = normalize(raw, a.ambient_dim);
      if (polar_degree(m).degree != polar_degree(a).degree)
        return Outcome{false, "mutation " + std::to_string(i)};
    }
    return Outcome{true, "50 mutations"};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
