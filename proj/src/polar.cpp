#include "arrtop/polar.hpp"

#include "arrtop/error.hpp"
#include "arrtop/lattice.hpp"

namespace arrtop {

std::string to_string(PolarClass c) {
  switch (c) {
    case PolarClass::Zero: return "ZERO";
    case PolarClass::BooleanB1: return "BOOLEAN_B1";
    case PolarClass::NearPencilB2: return "NEARPENCIL_B2";
    case PolarClass::General: return "GENERAL";
  }
  return "GENERAL";
}

namespace {

Arrangement boolean_normal_form(std::size_t l) {
  std::vector<Covector> forms;
  for (std::size_t i = 0; i < l; ++i) {
    Covector v(l, 0);
    v[i] = 1;
    forms.push_back(v);
  }
  return normalize(forms, l);
}

Arrangement near_pencil_normal_form(std::size_t l) {
  auto a = boolean_normal_form(l);
  Covector v(l, 0);
  v[0] = v[1] = 1;
  auto forms = a.forms;
  forms.push_back(v);
  return normalize(forms, l);
}

}  // namespace

Integer projective_euler_characteristic(const Arrangement& a) {
  return poincare_projective(a).evaluate(-1);
}

PolarReport polar_degree(const Arrangement& a, std::uint64_t seed) {
  const IntersectionLattice lattice = intersection_lattice(a);
  const std::size_t n = a.ambient_dim - 1;
  const IntPolynomial p = poincare_projective(lattice);
  PolarReport r;
  r.degree = p[n];
  r.top_betti = p[n];
  r.affine_sphere_count = p[n];
  r.essential = lattice.rank() == a.ambient_dim;
  require((r.degree > 0) == r.essential, ErrorCode::InternalAssertion,
          "top Betti number positive exactly for essential arrangements");
  if (r.degree > 0) r.bound_satisfied = Integer(a.size()) <= Integer(n) + r.degree;

  if (r.degree == 0) {
    r.classification = PolarClass::Zero;
  } else if (r.degree == 1 && a.size() == n + 1 &&
             lattices_isomorphic(lattice, intersection_lattice(boolean_normal_form(a.ambient_dim)))) {
    r.classification = PolarClass::BooleanB1;
  } else if (r.degree == 2 && a.size() == n + 2 && a.ambient_dim >= 2 &&
             lattices_isomorphic(lattice, intersection_lattice(near_pencil_normal_form(a.ambient_dim)))) {
    r.classification = PolarClass::NearPencilB2;
  } else {
    r.classification = PolarClass::General;
  }

  // Euler characteristic cross-check against an explicit generic hyperplane.
  if (a.ambient_dim >= 2) {
    const std::size_t level = std::min(lattice.rank(), a.ambient_dim - 1) - 1;
    const Subspace h = random_generic_subspace(a, a.ambient_dim - 1, level, seed);
    const Integer chi_m = projective_euler_characteristic(a);
    const Integer chi_mh = projective_euler_characteristic(restrict_to_subspace(a, h));
    Integer v = chi_m - chi_mh;
    if (n % 2 == 1) v = -v;
    r.euler_check_evaluated = true;
    r.euler_check_value = v;
    require(v == r.top_betti, ErrorCode::InternalAssertion,
            "Euler characteristic of the complement of a generic hyperplane section (" +
                v.get_str() + ") differs from the top Betti number (" + r.top_betti.get_str() + ")");
  }
  return r;
}

Integer polar_invariant(const Arrangement& a) {
  return Integer(a.size()) * polar_degree(a).degree;
}

Integer affine_part_sphere_count(const Arrangement& a) { return polar_degree(a).degree; }

AnnotatedCount isolated_singularity_degree(long d, long n, const std::vector<Integer>& milnor_numbers) {
  require(d >= 1 && n >= 1, ErrorCode::PreconditionViolation, "need d >= 1 and n >= 1");
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(d - 1), static_cast<unsigned long>(n));
  for (const auto& mu : milnor_numbers) {
    require(mu >= 0, ErrorCode::PreconditionViolation, "Milnor numbers are nonnegative");
    v -= mu;
  }
  require(v >= 0, ErrorCode::InconsistentMilnorData,
          "(d-1)^n minus the Milnor numbers is negative: " + v.get_str());
  AnnotatedCount out{v, {}};
  if (v == 0) out.notes.push_back("degree 0: the hypersurface is a cone");
  if (n > 2 && d > 2 && v == 1)
    out.notes.push_back("advisory: degree 1 with n > 2 and d > 2 is expected not to occur for isolated singularities (open conjecture)");
  return out;
}

Integer quasihomogeneous_milnor(const std::vector<Rational>& weights, const Rational& degree) {
  Rational mu = 1;
  for (const auto& w : weights) {
    require(w > 0, ErrorCode::PreconditionViolation, "weights must be positive");
    const Rational factor = (degree - w) / w;
    require(factor > 0, ErrorCode::NonIsolated,
            "weight " + w.get_str() + " is not below the degree " + degree.get_str());
    mu *= factor;
  }
  mu.canonicalize();
  require(mu.get_den() == 1, ErrorCode::NonIntegerMu, "Milnor number " + mu.get_str() + " is not an integer");
  return mu.get_num();
}

Integer plane_curve_affine_b1(long g, long m, long d) {
  require(d >= 1 && g >= 0 && m >= 0, ErrorCode::PreconditionViolation, "need d >= 1, g >= 0, m >= 0");
  return Integer(2 * g + m + d - 1);
}

Integer milnor_fiber_sphere_count(const Integer& critical_count, long e, long n) {
  require(e >= 1 && n >= 0, ErrorCode::PreconditionViolation, "need e >= 1 and n >= 0");
  Integer sub;
  mpz_ui_pow_ui(sub.get_mpz_t(), static_cast<unsigned long>(e - 1), static_cast<unsigned long>(n + 1));
  require(critical_count >= sub, ErrorCode::InconsistentCount,
          "critical point count below (e-1)^(n+1) = " + sub.get_str());
  return critical_count - sub;
}

std::vector<Integer> twisted_betti_bound(const std::vector<Integer>& betti, long rep_dim) {
  require(rep_dim >= 1, ErrorCode::PreconditionViolation, "representation dimension must be positive");
  std::vector<Integer> out;
  for (const auto& b : betti) out.push_back(b * rep_dim);
  return out;
}

}  // namespace arrtop
