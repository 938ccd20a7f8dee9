#include "arrtop/rational.hpp"

#include <limits>

#include "arrtop/error.hpp"

namespace arrtop {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  require(denominator != 0, ErrorCode::InternalAssertion, "zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  require(is_integer(q), ErrorCode::InternalAssertion,
          "expected an integer, got " + q.get_str());
  return q.get_num();
}

std::int64_t to_int64(const Integer& z) {
  require(z.fits_slong_p(), ErrorCode::InternalAssertion,
          "integer " + z.get_str() + " does not fit in 64 bits");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace arrtop
