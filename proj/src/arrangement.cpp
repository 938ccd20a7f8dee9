#include "arrtop/arrangement.hpp"

#include <algorithm>

#include "arrtop/error.hpp"

namespace arrtop {

HyperplaneSet HyperplaneSet::of(std::initializer_list<std::size_t> indices) {
  HyperplaneSet s;
  for (auto i : indices) s = s.with(i);
  return s;
}

std::vector<std::size_t> HyperplaneSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

QMatrix Arrangement::form_matrix() const { return form_matrix(HyperplaneSet::first(size())); }

QMatrix Arrangement::form_matrix(HyperplaneSet subset) const {
  const auto idx = subset.indices();
  QMatrix m(idx.size(), ambient_dim);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = forms[idx[r]][c];
  return m;
}

std::size_t Arrangement::rank() const { return arrtop::rank(form_matrix()); }

bool Arrangement::reduced_on_load() const {
  return std::any_of(multiplicities.begin(), multiplicities.end(),
                     [](std::size_t m) { return m > 1; });
}

QMatrix Subspace::matrix() const {
  const std::size_t cols = basis.empty() ? 0 : basis.front().size();
  QMatrix m(basis.size(), cols);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = basis[r][c];
  return m;
}

void Subspace::validate(std::size_t ambient_dim) const {
  for (const auto& v : basis)
    require(v.size() == ambient_dim, ErrorCode::PreconditionViolation,
            "subspace basis vector has length " + std::to_string(v.size()) + ", expected " +
                std::to_string(ambient_dim));
  require(dim() >= 1, ErrorCode::PreconditionViolation, "subspace basis is empty");
  require(rank(matrix()) == dim(), ErrorCode::PreconditionViolation,
          "subspace basis vectors are linearly dependent");
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace u;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Covector e(ambient_dim, 0);
    e[i] = 1;
    u.basis.push_back(std::move(e));
  }
  return u;
}

Covector primitive(const Covector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  require(g != 0, ErrorCode::ZeroForm, "zero covector");
  Covector out = v;
  for (auto& x : out) x /= g;
  auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0)
    for (auto& x : out) x = -x;
  return out;
}

namespace {

std::string render(const Covector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

struct Normalized {
  Arrangement arrangement;
  std::vector<std::size_t> image;
};

Normalized normalize_tracked(const std::vector<Covector>& raw_forms, std::size_t ambient_dim,
                             const std::vector<std::string>& labels) {
  require(labels.empty() || labels.size() == raw_forms.size(), ErrorCode::ParseError,
          "labels must be absent or one per form");
  Normalized out;
  Arrangement& a = out.arrangement;
  a.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < raw_forms.size(); ++i) {
    const Covector& raw = raw_forms[i];
    require(raw.size() == ambient_dim, ErrorCode::ParseError,
            "form " + std::to_string(i) + " has length " + std::to_string(raw.size()) +
                ", expected " + std::to_string(ambient_dim));
    require(std::any_of(raw.begin(), raw.end(), [](const Integer& x) { return x != 0; }),
            ErrorCode::ZeroForm, "form " + std::to_string(i) + " is zero");
    Covector p = primitive(raw);
    auto it = std::find(a.forms.begin(), a.forms.end(), p);
    if (it != a.forms.end()) {
      const auto k = static_cast<std::size_t>(it - a.forms.begin());
      ++a.multiplicities[k];
      out.image.push_back(k);
      continue;
    }
    out.image.push_back(a.forms.size());
    a.forms.push_back(std::move(p));
    a.multiplicities.push_back(1);
    if (!labels.empty()) a.labels.push_back(labels[i]);
  }
  require(!a.forms.empty(), ErrorCode::EmptyArrangement, "arrangement has no hyperplanes");
  require(a.forms.size() <= HyperplaneSet::kCapacity, ErrorCode::PreconditionViolation,
          "at most 64 hyperplanes are supported");
  return out;
}

}  // namespace

Arrangement normalize(const std::vector<Covector>& raw_forms, std::size_t ambient_dim,
                      const std::vector<std::string>& labels) {
  return normalize_tracked(raw_forms, ambient_dim, labels).arrangement;
}

bool is_essential(const Arrangement& a) { return a.rank() == a.ambient_dim; }

Arrangement essentialize(const Arrangement& a) {
  if (is_essential(a)) return a;
  const RowReduction rr = row_reduce(a.form_matrix());
  std::vector<Covector> forms;
  for (const auto& f : a.forms) {
    Covector g;
    for (auto c : rr.pivot_columns) g.push_back(f[c]);
    forms.push_back(std::move(g));
  }
  Arrangement e = normalize(forms, rr.rank, a.labels);
  require(e.size() == a.size(), ErrorCode::InternalAssertion,
          "essentialization collapsed hyperplanes");
  e.multiplicities = a.multiplicities;
  return e;
}

Restriction restrict_detailed(const Arrangement& a, const Subspace& u) {
  u.validate(a.ambient_dim);
  std::vector<Covector> restricted;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Covector r(u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j)
      for (std::size_t c = 0; c < a.ambient_dim; ++c) r[j] += a.forms[i][c] * u.basis[j][c];
    require(std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; }),
            ErrorCode::HyperplaneContainsSubspace,
            "hyperplane " + std::to_string(i) + " " + render(a.forms[i]) + " contains the subspace");
    restricted.push_back(std::move(r));
  }
  Normalized n = normalize_tracked(restricted, u.dim(), {});
  return {std::move(n.arrangement), std::move(n.image)};
}

Arrangement restrict_to_subspace(const Arrangement& a, const Subspace& u) {
  return restrict_detailed(a, u).arrangement;
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index) {
  require(index < a.size(), ErrorCode::PreconditionViolation, "hyperplane index out of range");
  Arrangement d;
  d.ambient_dim = a.ambient_dim;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    d.forms.push_back(a.forms[i]);
    d.multiplicities.push_back(a.multiplicities.empty() ? 1 : a.multiplicities[i]);
    if (!a.labels.empty()) d.labels.push_back(a.labels[i]);
  }
  require(!d.forms.empty(), ErrorCode::EmptyArrangement, "deletion leaves no hyperplanes");
  return d;
}

Subspace hyperplane_subspace(const Arrangement& a, std::size_t index) {
  require(index < a.size(), ErrorCode::PreconditionViolation, "hyperplane index out of range");
  QMatrix row(1, a.ambient_dim);
  for (std::size_t c = 0; c < a.ambient_dim; ++c) row(0, c) = a.forms[index][c];
  const QMatrix kernel = nullspace(row);
  Subspace u;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Integer lcm_den = 1;
    for (const auto& x : kernel.row(r)) lcm_den = lcm(lcm_den, Integer(x.get_den()));
    Covector v;
    for (const auto& x : kernel.row(r)) v.push_back(to_integer(x * lcm_den));
    u.basis.push_back(primitive(v));
  }
  return u;
}

std::size_t RankOracle::rank(HyperplaneSet s) const {
  if (s.empty()) return 0;
  if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  const std::size_t r = arrtop::rank(arrangement_.form_matrix(s));
  cache_.emplace(s, r);
  return r;
}

HyperplaneSet RankOracle::closure(HyperplaneSet s) const {
  const std::size_t r = rank(s);
  HyperplaneSet out = s;
  for (std::size_t i = 0; i < arrangement_.size(); ++i)
    if (!s.contains(i) && rank(s.with(i)) == r) out = out.with(i);
  return out;
}

}  // namespace arrtop
