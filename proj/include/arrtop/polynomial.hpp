#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

// Univariate polynomial over Z, coefficient index = degree. The zero
// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coefficients);
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  // 1 + c t
  static IntPolynomial linear(const Integer& c);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  // Truncation to degrees <= d.
  IntPolynomial truncated(std::size_t d) const;
  Integer evaluate(const Integer& t) const;
  // p(-t)
  IntPolynomial alternated() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Power series truncated after degree truncation_degree.
struct TruncatedSeries {
  std::vector<Rational> coefficients;  // size truncation_degree + 1

  std::size_t truncation_degree() const { return coefficients.size() - 1; }
  bool is_integral() const;
  std::vector<Integer> integer_coefficients() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

// Expansion of numerator/denominator to degree max_degree.
// Throws ZeroConstantTerm when denominator(0) == 0.
TruncatedSeries series_of_rational(const IntPolynomial& numerator,
                                   const IntPolynomial& denominator, std::size_t max_degree);

// Throws InexactDivision unless q divides p over Z.
IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q);

// Product of (1 + c t) over the given c.
IntPolynomial product_of_linear(const std::vector<Integer>& cs);

}  // namespace arrtop
