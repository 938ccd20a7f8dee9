#include "arrtop/io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "arrtop/error.hpp"

namespace arrtop {

using nlohmann::json;

namespace {

Integer integer_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                           : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer x;
    if (x.set_str(v.get<std::string>(), 10) == 0) return x;
  }
  fail(ErrorCode::ParseError, where + ": expected an integer");
}

std::vector<Covector> matrix_field(const json& doc, const std::string& key) {
  require(doc.contains(key) && doc[key].is_array(), ErrorCode::ParseError,
          "field '" + key + "' must be a list of integer lists");
  std::vector<Covector> rows;
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    const json& row = doc[key][i];
    const std::string where = key + "[" + std::to_string(i) + "]";
    require(row.is_array(), ErrorCode::ParseError, where + ": expected a list");
    Covector v;
    for (std::size_t j = 0; j < row.size(); ++j)
      v.push_back(integer_field(row[j], where + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(v));
  }
  return rows;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedArrangement parse_arrangement_text(const std::string& text) {
  const json doc = parse_json(text);
  require(doc.is_object(), ErrorCode::ParseError, "arrangement file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    require(key == "ambient_dim" || key == "forms" || key == "labels" || key == "multiplicities",
            ErrorCode::ParseError, "unknown field '" + key + "'");
  require(doc.contains("ambient_dim") && doc["ambient_dim"].is_number_unsigned() &&
              doc["ambient_dim"].get<std::uint64_t>() >= 1,
          ErrorCode::ParseError, "field 'ambient_dim' must be a positive integer");
  const auto l = doc["ambient_dim"].get<std::size_t>();
  auto forms = matrix_field(doc, "forms");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    require(doc["labels"].is_array() && doc["labels"].size() == forms.size(), ErrorCode::ParseError,
            "field 'labels' must list one string per form");
    for (const auto& x : doc["labels"]) {
      require(x.is_string(), ErrorCode::ParseError, "labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  std::vector<Covector> raw;
  std::vector<std::string> raw_labels;
  if (doc.contains("multiplicities")) {
    const json& m = doc["multiplicities"];
    require(m.is_array() && m.size() == forms.size(), ErrorCode::ParseError,
            "field 'multiplicities' must list one positive integer per form");
    for (std::size_t i = 0; i < forms.size(); ++i) {
      require(m[i].is_number_unsigned() && m[i].get<std::uint64_t>() >= 1, ErrorCode::ParseError,
              "multiplicities[" + std::to_string(i) + "] must be a positive integer");
      for (std::uint64_t r = 0; r < m[i].get<std::uint64_t>(); ++r) {
        raw.push_back(forms[i]);
        if (!labels.empty()) raw_labels.push_back(labels[i]);
      }
    }
  } else {
    raw = std::move(forms);
    raw_labels = std::move(labels);
  }
  LoadedArrangement out{normalize(raw, l, raw_labels), {}};
  if (out.arrangement.reduced_on_load())
    out.warnings.push_back("REDUCED: " + std::to_string(raw.size()) + " input forms collapsed to " +
                           std::to_string(out.arrangement.size()) +
                           " hyperplanes; invariants depend only on the reduced product");
  return out;
}

LoadedArrangement parse_arrangement(const std::string& path) { return parse_arrangement_text(read_file(path)); }

Subspace parse_subspace_text(const std::string& text) {
  const json doc = parse_json(text);
  require(doc.is_object(), ErrorCode::ParseError, "subspace file must be a JSON object");
  return Subspace{matrix_field(doc, "basis")};
}

Subspace parse_subspace(const std::string& path) { return parse_subspace_text(read_file(path)); }

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntPolynomial& p) { return to_json(p.coefficients()); }

json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return json(x.get_str());
}

std::string canonical_text(const Arrangement& a) {
  json doc;
  doc["ambient_dim"] = a.ambient_dim;
  json forms = json::array();
  for (const auto& f : a.forms) forms.push_back(to_json(f));
  doc["forms"] = forms;
  if (!a.labels.empty()) doc["labels"] = a.labels;
  if (a.reduced_on_load()) doc["multiplicities"] = a.multiplicities;
  return doc.dump() + "\n";
}

std::string sha256_digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) == 1,
          ErrorCode::InternalAssertion, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace arrtop
