#include "arrtop/gr_complex.hpp"

#include <algorithm>
#include <functional>

#include "arrtop/error.hpp"

namespace arrtop {

std::size_t GrChainComplex::block_dim(std::size_t q, std::size_t t) const {
  if (q > top_degree() || t < q || t > max_internal_degree) return 0;
  return generator_ranks[q] * u_dims[t - q];
}

SparseMatrix GrChainComplex::differential(std::size_t q, std::size_t t) const {
  if (auto it = differentials.find({q, t}); it != differentials.end()) return it->second;
  return SparseMatrix(block_dim(q, t), q == 0 ? 0 : block_dim(q - 1, t));
}

std::optional<std::pair<std::size_t, std::size_t>> GrChainComplex::square_zero_failure() const {
  for (std::size_t q = 2; q <= top_degree(); ++q)
    for (std::size_t t = q; t <= max_internal_degree; ++t)
      if (!(differential(q, t) * differential(q - 1, t)).is_zero()) return std::make_pair(q, t);
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == q) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_square_zero(const GrChainComplex& c) {
  auto bad = c.square_zero_failure();
  require(!bad, ErrorCode::InternalAssertion,
          bad ? "d^2 != 0 at chain degree " + std::to_string(bad->first) + ", internal degree " +
                    std::to_string(bad->second)
              : std::string());
}

}  // namespace

std::vector<std::vector<std::size_t>> monomial_exponents(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> cur(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, k);
  return out;
}

GrChainComplex torus_gr_complex(std::size_t n, std::size_t max_internal_degree) {
  require(n >= 1, ErrorCode::PreconditionViolation, "torus complex needs n >= 1");
  GrChainComplex c;
  c.max_internal_degree = max_internal_degree;
  for (std::size_t q = 0; q <= n; ++q) c.generator_ranks.push_back(binomial(n, q));
  std::vector<std::vector<std::vector<std::size_t>>> monos;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> mono_index;
  for (std::size_t k = 0; k <= max_internal_degree; ++k) {
    monos.push_back(monomial_exponents(n, k));
    c.u_dims.push_back(monos.back().size());
    std::map<std::vector<std::size_t>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.back().size(); ++i) idx.emplace(monos.back()[i], i);
    mono_index.push_back(std::move(idx));
  }
  for (std::size_t q = 1; q <= n; ++q) {
    const auto src = subsets(n, q);
    const auto dst = subsets(n, q - 1);
    std::map<std::vector<std::size_t>, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);
    for (std::size_t t = q; t <= max_internal_degree; ++t) {
      const std::size_t k = t - q;
      SparseMatrix d(c.block_dim(q, t), c.block_dim(q - 1, t));
      for (std::size_t s = 0; s < src.size(); ++s)
        for (std::size_t m = 0; m < monos[k].size(); ++m)
          for (std::size_t r = 0; r < q; ++r) {
            auto face = src[s];
            const std::size_t var = face[r];
            face.erase(face.begin() + static_cast<long>(r));
            auto mono = monos[k][m];
            ++mono[var];
            // (-1)^(r-1) with r one-based, times the -1 of the gr image.
            const long sign = (r % 2 == 0) ? -1 : 1;
            d.add(s * monos[k].size() + m,
                  dst_index.at(face) * monos[k + 1].size() + mono_index[k + 1].at(mono), Rational(sign));
          }
      c.differentials.emplace(std::make_pair(q, t), std::move(d));
    }
  }
  check_square_zero(c);
  return c;
}

GrChainComplex gr_complex(const OSAlgebra& os, const UEnvelope& u) {
  require(os.complement() == Complement::Projective, ErrorCode::InternalAssertion,
          "gr complex is built on the projective complement");
  GrChainComplex c;
  c.max_internal_degree = u.max_degree();
  c.generator_ranks = os.betti_numbers();
  c.u_dims = u.dims();
  const std::size_t b1 = os.betti(1);
  for (std::size_t q = 1; q <= os.top_degree(); ++q) {
    const SparseMatrix delta = os.delta_R(q);
    const Rational sign = q % 2 == 0 ? 1 : -1;
    for (std::size_t t = q; t <= c.max_internal_degree; ++t) {
      const std::size_t k = t - q;
      const std::size_t du = u.dim(k), du1 = u.dim(k + 1);
      SparseMatrix d(c.block_dim(q, t), c.block_dim(q - 1, t));
      for (std::size_t h = 0; h < os.betti(q); ++h)
        for (const auto& [col, coeff] : delta.row(h)) {
          const std::size_t s = col / b1, x = col % b1;
          for (std::size_t v = 0; v < du; ++v) {
            SparseVector image;
            for (const auto& [w, a] : u.left_multiply(x, k, v)) image.emplace_back(s * du1 + w, a);
            axpy(d.row(h * du + v), sign * coeff, image);
          }
        }
      c.differentials.emplace(std::make_pair(q, t), std::move(d));
    }
  }
  check_square_zero(c);
  return c;
}

GrChainComplex gr_complex(const Arrangement& a, std::size_t max_internal_degree, std::uint64_t work_bound) {
  const OSAlgebra os(a, Complement::Projective);
  const UEnvelope u = u_envelope(os, max_internal_degree, work_bound);
  return gr_complex(os, u);
}

GrChainComplex gr_complex_left(const OSAlgebra& os, const UEnvelope& u) {
  require(os.complement() == Complement::Projective, ErrorCode::InternalAssertion,
          "gr complex is built on the projective complement");
  GrChainComplex c;
  c.max_internal_degree = u.max_degree();
  c.generator_ranks = os.betti_numbers();
  c.u_dims = u.dims();
  for (std::size_t q = 1; q <= os.top_degree(); ++q) {
    const SparseMatrix delta = os.delta_L(q);
    const std::size_t bq = os.betti(q), bq1 = os.betti(q - 1);
    for (std::size_t t = q; t <= c.max_internal_degree; ++t) {
      const std::size_t k = t - q;
      SparseMatrix d(c.block_dim(q, t), c.block_dim(q - 1, t));
      for (std::size_t h = 0; h < bq; ++h)
        for (const auto& [col, coeff] : delta.row(h)) {
          const std::size_t x = col / bq1, s = col % bq1;
          for (std::size_t v = 0; v < u.dim(k); ++v) {
            SparseVector image;
            for (const auto& [w, a] : u.right_multiply(k, v, x)) image.emplace_back(w * bq1 + s, a);
            std::sort(image.begin(), image.end());
            axpy(d.row(v * bq + h), -coeff, image);
          }
        }
      c.differentials.emplace(std::make_pair(q, t), std::move(d));
    }
  }
  check_square_zero(c);
  return c;
}

bool ResolutionReport::acyclic() const {
  return std::all_of(homology.begin(), homology.end(), [](const auto& e) { return e.second == 0; });
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> ResolutionReport::nonzero() const {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> out;
  for (const auto& e : homology)
    if (e.second != 0) out.push_back(e);
  return out;
}

ResolutionReport verify_resolution(const GrChainComplex& c) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ranks;
  for (const auto& [key, d] : c.differentials) ranks[key] = rank(d);
  auto rank_at = [&](std::size_t q, std::size_t t) -> std::size_t {
    if (q == 0) return t == 0 ? 1 : 0;  // augmentation onto the ground field
    auto it = ranks.find({q, t});
    return it == ranks.end() ? 0 : it->second;
  };
  ResolutionReport r;
  for (std::size_t q = 0; q <= c.top_degree(); ++q)
    for (std::size_t t = q; t <= c.max_internal_degree; ++t) {
      const std::size_t dim = c.block_dim(q, t);
      const std::size_t used = rank_at(q, t) + rank_at(q + 1, t);
      require(used <= dim, ErrorCode::InternalAssertion, "ranks exceed block dimension");
      r.homology[{q, t}] = dim - used;
    }
  return r;
}

std::vector<Integer> invariant_factors(const SparseMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, x] : m.row(r)) {
      require(x.get_den() == 1, ErrorCode::PreconditionViolation, "matrix is not integral");
      a[r][c] = x.get_num();
    }
  std::vector<Integer> out;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot of smallest absolute value in the remaining block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = k; r < rows; ++r)
        for (std::size_t c = k; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
            if (abs(a[r][c]) == 1) goto found;
          }
    found:
      if (pr == rows) return out;
      std::swap(a[k], a[pr]);
      for (auto& row : a) std::swap(row[k], row[pc]);
      bool clean = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (a[r][k] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][k].get_mpz_t(), a[k][k].get_mpz_t());
        for (std::size_t c = k; c < cols; ++c) a[r][c] -= q * a[k][c];
        if (a[r][k] != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (a[k][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[k][c].get_mpz_t(), a[k][k].get_mpz_t());
        for (std::size_t r = k; r < rows; ++r) a[r][c] -= q * a[r][k];
        if (a[k][c] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t r = k + 1; r < rows && divides; ++r)
        for (std::size_t c = k + 1; c < cols; ++c)
          if (a[r][c] % a[k][k] != 0) {
            for (std::size_t cc = k; cc < cols; ++cc) a[k][cc] += a[r][cc];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[k][k]));
  }
  return out;
}

IntegerCheck integer_check(const GrChainComplex& c, const UEnvelope& u) {
  IntegerCheck out;
  if (!u.integral()) {
    out.reason = "enveloping algebra normal forms have non-integer coefficients";
    return out;
  }
  for (const auto& [key, d] : c.differentials)
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [col, x] : d.row(r))
        if (x.get_den() != 1) {
          out.reason = "differential block is not integral";
          return out;
        }
  out.available = true;
  for (const auto& [key, d] : c.differentials)
    for (const auto& f : invariant_factors(d))
      if (f != 1) {
        out.torsion_at.push_back(key);
        break;
      }
  out.exact_over_z = verify_resolution(c).acyclic() && out.torsion_at.empty();
  return out;
}

}  // namespace arrtop
