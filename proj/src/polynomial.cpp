#include "arrtop/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "arrtop/error.hpp"

namespace arrtop {

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& c) { return IntPolynomial({Integer(1), c}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::truncated(std::size_t d) const {
  std::vector<Integer> v(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), d + 1));
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::alternated() const {
  std::vector<Integer> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Integer c = coeffs_[i];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Integer mag = abs(c);
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return arrtop::is_integer(q); });
}

std::vector<Integer> TruncatedSeries::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(coefficients.size());
  for (const auto& q : coefficients) out.push_back(to_integer(q));
  return out;
}

TruncatedSeries series_of_rational(const IntPolynomial& numerator,
                                   const IntPolynomial& denominator, std::size_t max_degree) {
  require(denominator[0] != 0, ErrorCode::ZeroConstantTerm,
          "denominator " + denominator.to_string() + " has zero constant term");
  TruncatedSeries s;
  s.coefficients.resize(max_degree + 1);
  const Rational lead(denominator[0]);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Rational acc(numerator[k]);
    const std::size_t top = std::min<std::size_t>(k, std::max<long>(denominator.degree(), 0));
    for (std::size_t j = 1; j <= top; ++j) acc -= Rational(denominator[j]) * s.coefficients[k - j];
    s.coefficients[k] = acc / lead;
  }
  return s;
}

IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  require(!q.is_zero(), ErrorCode::InexactDivision, "division by the zero polynomial");
  if (p.is_zero()) return {};
  require(p.degree() >= q.degree(), ErrorCode::InexactDivision,
          p.to_string() + " is not divisible by " + q.to_string());
  std::vector<Integer> rem = p.coefficients();
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  const Integer lead = q[dq];
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + dq];
    if (top == 0) continue;
    require(top % lead == 0, ErrorCode::InexactDivision,
            p.to_string() + " is not divisible by " + q.to_string() + " over the integers");
    quot[k] = top / lead;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= quot[k] * q[j];
  }
  for (const auto& r : rem)
    require(r == 0, ErrorCode::InexactDivision,
            p.to_string() + " is not divisible by " + q.to_string());
  return IntPolynomial(std::move(quot));
}

IntPolynomial product_of_linear(const std::vector<Integer>& cs) {
  IntPolynomial acc{1};
  for (const auto& c : cs) acc = acc * IntPolynomial::linear(c);
  return acc;
}

}  // namespace arrtop
