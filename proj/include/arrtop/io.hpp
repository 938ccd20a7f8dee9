#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arrtop/arrangement.hpp"
#include "arrtop/polynomial.hpp"

namespace arrtop {

inline constexpr const char* kVersion = "arrtop 0.1.0";

struct LoadedArrangement {
  Arrangement arrangement;
  std::vector<std::string> warnings;
};

// Arrangement file: {"ambient_dim": l, "forms": [[...], ...], "labels": [...]?,
// "multiplicities": [...]?}. Entries are JSON integers or decimal strings.
// A multiplicity m repeats its form m times before normalization.
LoadedArrangement parse_arrangement_text(const std::string& text);
LoadedArrangement parse_arrangement(const std::string& path);

// Subspace file: {"basis": [[...], ...]}.
Subspace parse_subspace_text(const std::string& text);
Subspace parse_subspace(const std::string& path);

// Canonical serialization; parsing it back reproduces the same bytes.
std::string canonical_text(const Arrangement& a);

std::string read_file(const std::string& path);
// "sha256:" followed by the lowercase hex digest.
std::string sha256_digest(const std::string& bytes);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const std::vector<Integer>& v);
nlohmann::json to_json(const IntPolynomial& p);
// Exact rational: integer when integral, otherwise "num/den".
nlohmann::json to_json(const Rational& x);

}  // namespace arrtop
