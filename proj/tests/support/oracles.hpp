#pragma once

// Brute-force reference computations used to cross-check the library. They
// share no code with the algorithms they check beyond the basic value types.

#include <cstdint>
#include <map>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/polynomial.hpp"
#include "arrtop/qmatrix.hpp"

namespace oracle {

using arrtop::Arrangement;
using arrtop::Integer;
using arrtop::IntPolynomial;
using arrtop::QMatrix;
using arrtop::Rational;

// Determinant by cofactor expansion along the first row.
Rational determinant(const QMatrix& m);
// Largest size of a nonzero minor.
std::size_t minor_rank(const QMatrix& m);

// Rank of the forms indexed by the bits of mask.
std::size_t subset_rank(const Arrangement& a, std::uint64_t mask);

// Whitney's subset expansions: sum over all subsets S of the hyperplanes.
// chi(t) = sum (-1)^|S| t^(l - rank S), P(t) = sum (-1)^|S| (-t)^rank S.
IntPolynomial whitney_characteristic(const Arrangement& a);
IntPolynomial whitney_poincare(const Arrangement& a);
// P(t) / (1 + t) by synthetic division, asserting a zero remainder.
IntPolynomial divide_by_one_plus_t(const IntPolynomial& p);

// Orlik-Solomon algebra as the exterior algebra modulo the ideal generated
// by boundaries of dependent sets, each degree computed by linear algebra in
// the full exterior power.
class BruteOS {
 public:
  explicit BruteOS(const Arrangement& a);
  std::size_t dim(std::size_t q) const;
  // x: coefficients on q-subsets (bitmask -> coefficient). True when x lies
  // in the degree q part of the ideal.
  bool in_ideal(std::size_t q, const std::map<std::uint64_t, Rational>& x) const;
  // e_A wedge e_B in the exterior algebra, as (mask, sign); sign 0 if they meet.
  static std::pair<std::uint64_t, int> wedge(std::uint64_t a, std::uint64_t b);

 private:
  struct Degree {
    std::vector<std::uint64_t> monomials;
    std::map<std::uint64_t, std::size_t> index;
    QMatrix ideal_rref;
    std::size_t ideal_rank = 0;
  };
  std::size_t n_;
  std::vector<Degree> degrees_;
};

}  // namespace oracle
