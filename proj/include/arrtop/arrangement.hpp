#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arrtop/qmatrix.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

using Covector = std::vector<Integer>;

// Set of hyperplane indices, at most 64 hyperplanes.
class HyperplaneSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr HyperplaneSet() = default;
  constexpr explicit HyperplaneSet(std::uint64_t bits) : bits_(bits) {}
  static HyperplaneSet of(std::initializer_list<std::size_t> indices);
  static HyperplaneSet first(std::size_t n) {
    return HyperplaneSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  HyperplaneSet with(std::size_t i) const { return HyperplaneSet(bits_ | (std::uint64_t{1} << i)); }
  HyperplaneSet without(std::size_t i) const { return HyperplaneSet(bits_ & ~(std::uint64_t{1} << i)); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  // Smallest index; requires !empty().
  std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  bool subset_of(HyperplaneSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<std::size_t> indices() const;
  std::uint64_t bits() const { return bits_; }

  friend HyperplaneSet operator|(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ | b.bits_); }
  friend HyperplaneSet operator&(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ & b.bits_); }
  friend auto operator<=>(HyperplaneSet, HyperplaneSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct HyperplaneSetHash {
  std::size_t operator()(HyperplaneSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

// Central arrangement of linear hyperplanes in C^ambient_dim, stored as
// reduced primitive integer covectors with positive leading entry.
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Covector> forms;
  std::vector<std::string> labels;  // empty or one per form
  // Number of raw input covectors collapsed into each form.
  std::vector<std::size_t> multiplicities;

  std::size_t size() const { return forms.size(); }
  QMatrix form_matrix() const;
  QMatrix form_matrix(HyperplaneSet subset) const;
  std::size_t rank() const;
  bool reduced_on_load() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.ambient_dim == b.ambient_dim && a.forms == b.forms;
  }
};

// Basis of a linear subspace U of C^l.
struct Subspace {
  std::vector<Covector> basis;
  std::size_t dim() const { return basis.size(); }
  QMatrix matrix() const;
  // Throws PreconditionViolation if the basis is dependent or has wrong length.
  void validate(std::size_t ambient_dim) const;
  static Subspace whole(std::size_t ambient_dim);
};

// Divides out the gcd and makes the first nonzero entry positive.
// Requires a nonzero covector.
Covector primitive(const Covector& v);

Arrangement normalize(const std::vector<Covector>& raw_forms, std::size_t ambient_dim,
                      const std::vector<std::string>& labels = {});

bool is_essential(const Arrangement& a);

// Restriction to the span of pivot columns of the form matrix; identity on
// essential input.
Arrangement essentialize(const Arrangement& a);

struct Restriction {
  Arrangement arrangement;
  // image[i] = index in `arrangement` of the restriction of hyperplane i.
  std::vector<std::size_t> image;
};

// Throws HyperplaneContainsSubspace when some form vanishes on U.
Restriction restrict_detailed(const Arrangement& a, const Subspace& u);
Arrangement restrict_to_subspace(const Arrangement& a, const Subspace& u);

// The arrangement of the remaining hyperplanes (deletion).
Arrangement delete_hyperplane(const Arrangement& a, std::size_t index);
// Integer basis of the hyperplane ker(form index), as a subspace.
Subspace hyperplane_subspace(const Arrangement& a, std::size_t index);

// Rank function of the underlying matroid with memoization.
class RankOracle {
 public:
  explicit RankOracle(Arrangement a) : arrangement_(std::move(a)) {}
  std::size_t rank(HyperplaneSet s) const;
  HyperplaneSet closure(HyperplaneSet s) const;
  bool independent(HyperplaneSet s) const { return rank(s) == s.size(); }
  const Arrangement& arrangement() const { return arrangement_; }

 private:
  Arrangement arrangement_;
  mutable std::unordered_map<HyperplaneSet, std::size_t, HyperplaneSetHash> cache_;
};

}  // namespace arrtop
