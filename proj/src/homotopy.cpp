#include "arrtop/homotopy.hpp"

#include "arrtop/error.hpp"
#include "arrtop/gr_complex.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/os_algebra.hpp"

namespace arrtop {

MinimalCellCounts minimal_cell_counts(const Arrangement& a) {
  const IntersectionLattice lattice = intersection_lattice(a);
  MinimalCellCounts out;
  out.central = poincare_central(lattice).coefficients();
  const IntPolynomial p = poincare_projective(lattice);
  for (std::size_t j = 0; j < lattice.rank(); ++j) out.projective.push_back(p[j]);
  return out;
}

SectionData make_section(const Arrangement& ambient, std::size_t section_rank) {
  SectionData s{ambient, supersolvable_exponents(ambient), section_rank, 0};
  require(section_rank >= 1 && section_rank <= ambient.rank(), ErrorCode::RankOutOfRange,
          "section rank " + std::to_string(section_rank) + " outside [1, " +
              std::to_string(ambient.rank()) + "]");
  require(section_rank >= 3, ErrorCode::FrameworkNotApplicable,
          "sections of rank below 3 have genericity k < 2");
  s.p = section_rank - 1;
  return s;
}

std::vector<Integer> gr_pi_p_cokernel(const SectionData& s, std::size_t max_degree, std::uint64_t work_bound) {
  require(s.section_rank < s.ambient.rank(), ErrorCode::RankOutOfRange,
          "full-rank section: the complement is aspherical and p is INFINITE");
  const OSAlgebra os(s.ambient, Complement::Projective);
  const UEnvelope u = u_envelope(os, max_degree, work_bound);
  const std::size_t p = s.p;
  const std::size_t b = os.betti(p + 1);
  std::vector<Integer> out;
  const bool has_source = p + 2 <= os.top_degree();
  const SparseMatrix delta = has_source ? os.delta_R(p + 2) : SparseMatrix();
  const std::size_t b1 = os.betti(1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    std::size_t r = 0;
    if (has_source && k >= 1) {
      // Block H_{p+2} (x) U^{k-1} -> H_{p+1} (x) U^k; the overall sign does
      // not affect the rank.
      const std::size_t du = u.dim(k - 1), du1 = u.dim(k);
      SparseMatrix d(os.betti(p + 2) * du, b * du1);
      for (std::size_t h = 0; h < os.betti(p + 2); ++h)
        for (const auto& [col, coeff] : delta.row(h)) {
          const std::size_t sidx = col / b1, x = col % b1;
          for (std::size_t v = 0; v < du; ++v) {
            SparseVector image;
            for (const auto& [w, a] : u.left_multiply(x, k - 1, v)) image.emplace_back(sidx * du1 + w, a);
            axpy(d.row(h * du + v), coeff, image);
          }
        }
      r = rank(d);
    }
    out.push_back(Integer(b * u.dim(k) - r));
  }
  return out;
}

HilbertSeries pi_p_hilbert_series(const ExponentData& e, std::size_t p, std::size_t max_degree) {
  require(!e.exponents.empty(), ErrorCode::PreconditionViolation, "empty exponent list");
  for (long d : e.exponents) require(d >= 1, ErrorCode::PreconditionViolation, "exponents are positive");
  require(p >= 2, ErrorCode::PreconditionViolation, "p must be at least 2");
  std::vector<Integer> plus, minus;
  for (std::size_t i = 1; i < e.exponents.size(); ++i) {
    plus.emplace_back(e.exponents[i]);
    minus.emplace_back(-e.exponents[i]);
  }
  HilbertSeries h;
  h.denominator = product_of_linear(minus);
  const IntPolynomial beta = product_of_linear(plus);
  for (long j = 0; j <= beta.degree(); ++j) h.betti.push_back(beta[static_cast<std::size_t>(j)]);
  // (-1/t)^{p+1} {1 - [sum_{j<=p} (-1)^j beta_j t^j] / den} reduces to
  // (-1)^{p+1} sum_{j>p} (-1)^j beta_j t^{j-p-1} over den.
  std::vector<Integer> num;
  for (long j = static_cast<long>(p) + 1; j <= beta.degree(); ++j) {
    Integer c = beta[static_cast<std::size_t>(j)];
    if ((j + static_cast<long>(p) + 1) % 2 != 0) c = -c;
    num.push_back(c);
  }
  h.numerator = IntPolynomial(std::move(num));
  h.series = series_of_rational(h.numerator, h.denominator, max_degree);
  for (std::size_t k = 0; k <= max_degree; ++k)
    require(h.series.coefficients[k] >= 0, ErrorCode::NegativeCoefficient,
            "coefficient " + std::to_string(k) + " is " + h.series.coefficients[k].get_str());
  return h;
}

bool ConsistencyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

IdentityCheck compare(std::string name, const std::vector<Integer>& lhs, const std::vector<Integer>& rhs,
                      std::size_t max_degree) {
  IdentityCheck c{std::move(name), true, std::nullopt};
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const Integer l = k < lhs.size() ? lhs[k] : Integer(0);
    const Integer r = k < rhs.size() ? rhs[k] : Integer(0);
    if (l != r) {
      c.passed = false;
      c.first_failing_degree = k;
      break;
    }
  }
  return c;
}

// Coefficients 0..n of a*b.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> out(n + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

ConsistencyReport consistency_suite(const SectionData& s, std::size_t max_degree,
                                    const std::optional<ExponentData>& exponents_override,
                                    std::uint64_t work_bound) {
  const ExponentData e = exponents_override.value_or(s.exponents);
  const std::size_t p = s.p;
  const OSAlgebra os(s.ambient, Complement::Projective);
  const UEnvelope u = u_envelope(os, max_degree, work_bound);
  const GrChainComplex c = gr_complex(os, u);
  std::vector<Integer> b, u_series;
  for (std::size_t j = 0; j <= os.top_degree(); ++j) b.emplace_back(os.betti(j));
  for (std::size_t k = 0; k <= max_degree; ++k) u_series.emplace_back(u.dim(k));

  ConsistencyReport report;

  std::vector<Integer> tail;
  for (std::size_t i = 1; i < e.exponents.size(); ++i) tail.emplace_back(e.exponents[i]);
  report.checks.push_back(compare("poincare_factorization", b, product_of_linear(tail).coefficients(), max_degree));

  std::vector<Integer> alt(b);
  for (std::size_t j = 1; j < alt.size(); j += 2) alt[j] = -alt[j];
  report.checks.push_back(compare("euler_identity", convolve(alt, u_series, max_degree), {Integer(1)}, max_degree));

  // Boundary series B_p(t): ranks of d_{p+1} by internal degree.
  std::vector<Integer> boundary(max_degree + 1, 0);
  if (p + 1 <= c.top_degree())
    for (std::size_t t = p + 1; t <= max_degree; ++t) boundary[t] = Integer(rank(c.differential(p + 1, t)));
  {
    std::vector<Integer> partial(alt.begin(), alt.begin() + static_cast<long>(std::min(p + 1, alt.size())));
    std::vector<Integer> rhs = convolve(partial, u_series, max_degree);
    for (auto& x : rhs) x = -x;
    rhs[0] += 1;
    std::vector<Integer> lhs(boundary);
    if ((p + 1) % 2 != 0)
      for (auto& x : lhs) x = -x;
    report.checks.push_back(compare("boundary_series", lhs, rhs, max_degree));
  }
  {
    std::vector<Integer> shifted(max_degree + 1, 0);
    std::optional<std::size_t> invalid;
    if (max_degree >= p + 1) {
      try {
        const auto h = pi_p_hilbert_series(e, p, max_degree - p - 1);
        for (std::size_t k = 0; k + p + 1 <= max_degree; ++k)
          shifted[k + p + 1] = h.series.coefficients[k].get_num();
      } catch (const Error& err) {
        // Exponents outside the theorem's hypotheses; report, don't abort.
        if (err.code() != ErrorCode::NegativeCoefficient) throw;
        invalid = p + 1;
      }
    }
    auto check = compare("shifted_cokernel_series", shifted, boundary, max_degree);
    if (invalid && check.passed) check = {check.name, false, invalid};
    report.checks.push_back(check);
  }
  return report;
}

std::string to_string(Asphericity v) {
  return v == Asphericity::Aspherical ? "ASPHERICAL" : "FIRST_NONZERO_AT_p";
}

std::string to_string(Freeness v) {
  switch (v) {
    case Freeness::ZPiFree: return "ZPI_FREE";
    case Freeness::NotProjective: return "NOT_PROJECTIVE";
    case Freeness::NotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

KPi1Verdict k_pi1_test(const SectionData& s) {
  KPi1Verdict v;
  const std::size_t m = s.ambient.rank();
  if (s.section_rank == m) return v;
  v.p = Level::finite(s.p);
  v.verdict = Asphericity::FirstNonzeroAtP;
  v.freeness = s.section_rank + 1 == m ? Freeness::ZPiFree : Freeness::NotProjective;
  return v;
}

KPi1Verdict k_pi1_test(const Arrangement& a, const Subspace& u) {
  const Level k = k_genericity(a, u);
  KPi1Verdict v;
  if (k.is_infinite()) return v;
  require(k.value() >= 2, ErrorCode::FrameworkNotApplicable,
          "subspace is only L_" + k.to_string() + "-generic; need k >= 2");
  const Level p = p_connectivity(a, u);
  require(p == k, ErrorCode::InternalAssertion, "genericity and connectivity levels differ");
  v.p = p;
  v.verdict = p.is_infinite() ? Asphericity::Aspherical : Asphericity::FirstNonzeroAtP;
  return v;
}

}  // namespace arrtop
