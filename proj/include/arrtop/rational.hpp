#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace arrtop {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonically reduced numerator/denominator pair; the denominator must be
// nonzero and is made positive.
Rational make_rational(const Integer& numerator, const Integer& denominator);

bool is_integer(const Rational& q);

// Requires is_integer(q).
Integer to_integer(const Rational& q);

// Throws InternalAssertion when the value does not fit.
std::int64_t to_int64(const Integer& z);

std::string to_string(const Rational& q);

}  // namespace arrtop
