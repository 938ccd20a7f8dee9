#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/envelope.hpp"
#include "arrtop/genericity.hpp"
#include "arrtop/polynomial.hpp"
#include "arrtop/supersolvable.hpp"

namespace arrtop {

struct MinimalCellCounts {
  std::vector<Integer> projective;  // cells of a minimal CW structure on M(A)
  std::vector<Integer> central;     // same for the cone M'(A) = M(A) x S^1
};

MinimalCellCounts minimal_cell_counts(const Arrangement& a);

// Iterated generic section of rank section_rank of a fiber-type arrangement.
struct SectionData {
  Arrangement ambient;
  ExponentData exponents;
  std::size_t section_rank = 0;
  std::size_t p = 0;  // section_rank - 1
};

// Checks essential (PreconditionViolation), supersolvable (NotSupersolvable),
// section_rank <= rank (RankOutOfRange) and section_rank >= 3
// (FrameworkNotApplicable).
SectionData make_section(const Arrangement& ambient, std::size_t section_rank);

// Ranks of coker{delta_{p+2} : H_{p+2} (x) U -> H_{p+1} (x) U} in U-degrees
// 0..max_degree. RankOutOfRange for a full-rank section.
std::vector<Integer> gr_pi_p_cokernel(const SectionData& s, std::size_t max_degree,
                                      std::uint64_t work_bound = default_work_bound());

struct HilbertSeries {
  IntPolynomial numerator;
  IntPolynomial denominator;
  TruncatedSeries series;
  std::vector<Integer> betti;  // beta_j, coefficients of prod_{i>=2} (1 + d_i t)
};

// Closed form numerator/denominator, with the truncated expansion.
// NegativeCoefficient if some coefficient is negative.
HilbertSeries pi_p_hilbert_series(const ExponentData& e, std::size_t p, std::size_t max_degree);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> first_failing_degree;
};

struct ConsistencyReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// Checks, through max_degree: the Poincare factorization by the exponents,
// the Euler identity between cohomology and U, the boundary-series formula
// and its relation to the closed-form series. exponents_override replaces
// the computed exponents (used as a negative control).
ConsistencyReport consistency_suite(const SectionData& s, std::size_t max_degree,
                                    const std::optional<ExponentData>& exponents_override = std::nullopt,
                                    std::uint64_t work_bound = default_work_bound());

enum class Asphericity { Aspherical, FirstNonzeroAtP };
enum class Freeness { ZPiFree, NotProjective, NotApplicable };
std::string to_string(Asphericity v);
std::string to_string(Freeness v);

struct KPi1Verdict {
  Level p = Level::infinite();
  Asphericity verdict = Asphericity::Aspherical;
  Freeness freeness = Freeness::NotApplicable;
};

KPi1Verdict k_pi1_test(const SectionData& s);
// General subspace form: FrameworkNotApplicable if k(A, U) < 2.
KPi1Verdict k_pi1_test(const Arrangement& a, const Subspace& u);

}  // namespace arrtop
