#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/genericity.hpp"

namespace arrtop {

enum class PolarClass { Zero, BooleanB1, NearPencilB2, General };
std::string to_string(PolarClass c);

struct PolarReport {
  Integer degree;
  Integer top_betti;
  Integer affine_sphere_count;
  bool essential = false;
  // d <= n + degree whenever degree > 0; vacuously true otherwise.
  bool bound_satisfied = true;
  PolarClass classification = PolarClass::Zero;
  // (-1)^n [chi(M) - chi(M cap H)] for an explicit generic hyperplane H.
  // Not evaluated when the projective space is a point.
  bool euler_check_evaluated = false;
  Integer euler_check_value;
};

// deg(grad Q) for the product of the forms; seed drives the generic
// hyperplane used by the Euler characteristic cross-check, which throws
// InternalAssertion on disagreement.
PolarReport polar_degree(const Arrangement& a, std::uint64_t seed = kDefaultSeed);

// Euler characteristic of the projective complement.
Integer projective_euler_characteristic(const Arrangement& a);

// d * deg(grad Q).
Integer polar_invariant(const Arrangement& a);

Integer affine_part_sphere_count(const Arrangement& a);

// A number together with annotations for the report.
struct AnnotatedCount {
  Integer value;
  std::vector<std::string> notes;
};

// (d-1)^n - sum of Milnor numbers. InconsistentMilnorData when negative.
AnnotatedCount isolated_singularity_degree(long d, long n, const std::vector<Integer>& milnor_numbers);

// prod_i (degree - w_i) / w_i for a weighted homogeneous isolated singularity.
Integer quasihomogeneous_milnor(const std::vector<Rational>& weights, const Rational& degree);

// b_1 of the affine part of an irreducible plane curve of genus g with m
// singular branches counted as circles, degree d.
Integer plane_curve_affine_b1(long g, long m, long d);

// |C(g)| - (e-1)^(n+1). InconsistentCount when negative.
Integer milnor_fiber_sphere_count(const Integer& critical_count, long e, long n);

// rep_dim * b_q for each q. PreconditionViolation when rep_dim == 0.
std::vector<Integer> twisted_betti_bound(const std::vector<Integer>& betti, long rep_dim);

}  // namespace arrtop
