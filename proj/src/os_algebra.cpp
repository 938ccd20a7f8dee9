#include "arrtop/os_algebra.hpp"

#include <algorithm>
#include <map>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

// Sorts the word in place; returns the sign of the sorting permutation, or 0
// when a letter repeats.
int sort_with_sign(std::vector<std::size_t>& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  return sign;
}

HyperplaneSet set_of(const std::vector<std::size_t>& w) {
  HyperplaneSet s;
  for (auto i : w) s = s.with(i);
  return s;
}

}  // namespace

bool OSAlgebra::is_nbc(HyperplaneSet s) const {
  if (!oracle_.independent(s)) return false;
  const auto idx = s.indices();
  HyperplaneSet tail;
  for (std::size_t j = idx.size(); j-- > 0;) {
    tail = tail.with(idx[j]);
    HyperplaneSet cl = oracle_.closure(tail);
    if (!cl.empty() && cl.min() < idx[j]) return false;
  }
  return true;
}

OSAlgebra::OSAlgebra(const Arrangement& a, Complement complement)
    : complement_(complement), oracle_(a) {
  const std::size_t n = a.size();
  const std::size_t r = a.rank();
  basis_.assign(r + 1, {});
  // Depth-first enumeration in lexicographic order. Every subset of an NBC
  // set is NBC, so pruning on failure is safe.
  std::vector<std::size_t> stack;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t h = start; h < n; ++h) {
      stack.push_back(h);
      const HyperplaneSet s = set_of(stack);
      if (is_nbc(s)) {
        basis_[stack.size()].push_back(s);
        self(self, h + 1);
      }
      stack.pop_back();
    }
  };
  basis_[0].push_back(HyperplaneSet{});
  visit(visit, 0);
  // Lex order of index tuples; DFS already visits in that order per degree.
  if (complement_ == Complement::Projective) {
    for (auto& level : basis_)
      std::erase_if(level, [](HyperplaneSet s) { return s.contains(0); });
    while (basis_.size() > 1 && basis_.back().empty()) basis_.pop_back();
  }
  for (const auto& level : basis_)
    for (std::size_t i = 0; i < level.size(); ++i) index_.emplace(level[i], i);
}

std::vector<std::size_t> OSAlgebra::betti_numbers() const {
  std::vector<std::size_t> b;
  for (const auto& level : basis_) b.push_back(level.size());
  return b;
}

std::size_t OSAlgebra::basis_index(HyperplaneSet s) const {
  auto it = index_.find(s);
  require(it != index_.end(), ErrorCode::InternalAssertion, "monomial is not a basis element");
  return it->second;
}

std::optional<std::size_t> OSAlgebra::generator_of(std::size_t hyperplane) const {
  if (auto it = index_.find(HyperplaneSet{}.with(hyperplane)); it != index_.end()) return it->second;
  return std::nullopt;
}

const OSAlgebra::Expansion& OSAlgebra::expand_central(HyperplaneSet s) const {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  Expansion out;
  if (oracle_.independent(s)) {
    const auto idx = s.indices();
    std::optional<std::size_t> broken_at;
    std::size_t h = 0;
    HyperplaneSet tail;
    for (std::size_t j = idx.size(); j-- > 0;) {
      tail = tail.with(idx[j]);
      HyperplaneSet cl = oracle_.closure(tail);
      if (!cl.empty() && cl.min() < idx[j]) {
        broken_at = j;
        h = cl.min();
        break;
      }
    }
    if (!broken_at) {
      out.emplace_back(s, Integer(1));
    } else {
      // Shrink the tail to a minimal B with h in cl(B); {h} u B is a circuit.
      HyperplaneSet b = tail;
      for (auto x : tail.indices())
        if (oracle_.closure(b.without(x)).contains(h)) b = b.without(x);
      const auto bs = b.indices();
      std::vector<std::size_t> rest;
      for (auto x : idx)
        if (!b.contains(x)) rest.push_back(x);
      // e_S = sign * e_B * e_rest, and e_B = sum_k (-1)^(k+1) e_{C - c_k}.
      std::vector<std::size_t> order(bs);
      order.insert(order.end(), rest.begin(), rest.end());
      // sign of the permutation taking idx to order
      int base_sign = 1;
      {
        std::vector<std::size_t> w(order);
        base_sign = sort_with_sign(w);
      }
      std::map<HyperplaneSet, Integer> acc;
      for (std::size_t k = 0; k < bs.size(); ++k) {
        std::vector<std::size_t> w{h};
        for (std::size_t m = 0; m < bs.size(); ++m)
          if (m != k) w.push_back(bs[m]);
        w.insert(w.end(), rest.begin(), rest.end());
        const int sign = sort_with_sign(w);
        if (sign == 0) continue;
        const int coeff = base_sign * sign * (k % 2 == 0 ? 1 : -1);
        for (const auto& [t, c] : expand_central(set_of(w))) acc[t] += coeff * c;
      }
      for (auto& [t, c] : acc)
        if (c != 0) out.emplace_back(t, c);
    }
  }
  return memo_.emplace(s, std::move(out)).first->second;
}

SparseVector OSAlgebra::product(std::span<const std::size_t> word) const {
  std::vector<std::size_t> w(word.begin(), word.end());
  const int sign = sort_with_sign(w);
  if (sign == 0) return {};
  std::map<std::size_t, Rational> acc;
  for (const auto& [t, c] : expand_central(set_of(w))) {
    // Projective quotient: monomials through e_0 vanish.
    if (complement_ == Complement::Projective && t.contains(0)) continue;
    acc[basis_index(t)] += Rational(sign * c);
  }
  SparseVector v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

SparseMatrix OSAlgebra::cup_matrix(std::size_t q) const {
  require(q >= 1, ErrorCode::PreconditionViolation, "cup product degree must be positive");
  const std::size_t b1 = betti(1);
  SparseMatrix m(betti(q - 1) * b1, betti(q));
  if (q > top_degree()) return m;
  for (std::size_t s = 0; s < betti(q - 1); ++s)
    for (std::size_t i = 0; i < b1; ++i) {
      auto word = basis(q - 1)[s].indices();
      word.push_back(basis(1)[i].min());
      m.row(s * b1 + i) = product(word);
    }
  return m;
}

SparseMatrix OSAlgebra::left_cup_matrix(std::size_t q) const {
  require(q >= 1, ErrorCode::PreconditionViolation, "cup product degree must be positive");
  const std::size_t b1 = betti(1);
  const std::size_t bq1 = betti(q - 1);
  SparseMatrix m(b1 * bq1, betti(q));
  if (q > top_degree()) return m;
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t s = 0; s < bq1; ++s) {
      std::vector<std::size_t> word{basis(1)[i].min()};
      for (auto x : basis(q - 1)[s].indices()) word.push_back(x);
      m.row(i * bq1 + s) = product(word);
    }
  return m;
}

SparseMatrix OSAlgebra::reduced_diagonal() const {
  if (top_degree() < 2) return SparseMatrix(0, betti(1) * betti(1));
  return delta_R(2);
}

NBCBasis nbc_basis(const Arrangement& a, std::size_t q) {
  OSAlgebra os(a);
  NBCBasis out{q, {}};
  if (q <= os.top_degree())
    for (auto s : os.basis(q)) out.monomials.push_back(s.indices());
  return out;
}

}  // namespace arrtop
