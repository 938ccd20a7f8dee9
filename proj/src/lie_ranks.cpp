#include "arrtop/lie_ranks.hpp"

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

int number_theoretic_mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

// Multiplies the truncated series s by (1 + sign * t^q)^e, e >= 0, via
// repeated binomial steps.
void multiply_binomial_power(std::vector<Integer>& s, std::size_t q, long sign, const Integer& e) {
  // (1 + sign t^q)^e = sum_j C(e, j) sign^j t^{qj}
  const std::size_t n = s.size() - 1;
  std::vector<Integer> factor(n + 1, 0);
  Integer binom = 1;
  for (std::size_t j = 0; j * q <= n; ++j) {
    if (j > 0) {
      binom = binom * (e - Integer(j - 1)) / Integer(j);
      if (binom == 0) break;
    }
    factor[j * q] = (sign < 0 && j % 2 == 1) ? Integer(-binom) : binom;
  }
  std::vector<Integer> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    if (s[i] != 0)
      for (std::size_t k = 0; i + k <= n; ++k)
        if (factor[k] != 0) out[i + k] += s[i] * factor[k];
  s = std::move(out);
}

// Multiplies by (1 - t^q)^{-e}: coefficient C(e + j - 1, j) at t^{qj}.
void multiply_inverse_power(std::vector<Integer>& s, std::size_t q, const Integer& e) {
  const std::size_t n = s.size() - 1;
  std::vector<Integer> factor(n + 1, 0);
  Integer binom = 1;
  for (std::size_t j = 0; j * q <= n; ++j) {
    if (j > 0) binom = binom * (e + Integer(j - 1)) / Integer(j);
    factor[j * q] = binom;
  }
  std::vector<Integer> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    if (s[i] != 0)
      for (std::size_t k = 0; i + k <= n; ++k)
        if (factor[k] != 0) out[i + k] += s[i] * factor[k];
  s = std::move(out);
}

}  // namespace

std::vector<Integer> lcs_ranks(const ExponentData& e, std::size_t max_k) {
  std::vector<Integer> phi;
  for (std::size_t m = 1; m <= max_k; ++m) {
    Integer sum = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (m % k != 0) continue;
      const int mu = number_theoretic_mobius(m / k);
      if (mu == 0) continue;
      Integer power_sum = 0;
      for (long d : e.exponents) {
        Integer x;
        mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        power_sum += x;
      }
      sum += mu * power_sum;
    }
    require(sum % Integer(m) == 0, ErrorCode::NonIntegerRank,
            "phi_" + std::to_string(m) + " = " + sum.get_str() + "/" + std::to_string(m));
    phi.push_back(sum / Integer(m));
  }
  return phi;
}

std::vector<Integer> lcs_product(const std::vector<Integer>& phi, std::size_t max_degree) {
  std::vector<Integer> s(max_degree + 1, 0);
  s[0] = 1;
  for (std::size_t k = 1; k <= phi.size() && k <= max_degree; ++k) {
    const Integer& e = phi[k - 1];
    if (e >= 0) multiply_binomial_power(s, k, -1, e);
    else multiply_inverse_power(s, k, -e);
  }
  return s;
}

std::vector<Integer> free_graded_lie_ranks(const std::vector<Integer>& generator_dims, std::size_t max_degree) {
  // Enveloping series of the free algebra: 1 / (1 - g(t)).
  std::vector<Integer> u(max_degree + 1, 0);
  u[0] = 1;
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (std::size_t q = 1; q <= n && q <= generator_dims.size(); ++q) u[n] += generator_dims[q - 1] * u[n - q];
  // Peel off PBW factors degree by degree.
  std::vector<Integer> pbw(max_degree + 1, 0);
  pbw[0] = 1;
  std::vector<Integer> ranks;
  for (std::size_t q = 1; q <= max_degree; ++q) {
    const Integer l = u[q] - pbw[q];
    require(l >= 0, ErrorCode::NonIntegerRank, "negative Lie rank in degree " + std::to_string(q));
    ranks.push_back(l);
    if (q % 2 == 1) multiply_binomial_power(pbw, q, 1, l);
    else multiply_inverse_power(pbw, q, l);
  }
  return ranks;
}

}  // namespace arrtop
