#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "arrtop/cli.hpp"
#include "arrtop/error.hpp"
#include "arrtop/io.hpp"
#include "generators.hpp"
#include "json.hpp"

using namespace arrtop;
using nlohmann::json;

namespace {

const std::string kSource = ARRTOP_SOURCE_DIR;

std::string data(const std::string& name) { return kSource + "/data/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalAssertion;
}

}  // namespace

TEST_CASE("parsing arrangement files") {
  const auto b = parse_arrangement(data("boolean3.json"));
  CHECK(b.arrangement.size() == 3);
  CHECK(b.warnings.empty());
  const auto dup = parse_arrangement_text(R"({"ambient_dim":3,"forms":[[1,0,0],[2,0,0]]})");
  CHECK(dup.arrangement.size() == 1);
  REQUIRE(dup.warnings.size() == 1);
  CHECK(dup.warnings[0].rfind("REDUCED", 0) == 0);
  CHECK(code_of([] { parse_arrangement(kSource + "/tests/data/bad_length.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_arrangement_text(R"({"ambient_dim":2,"forms":[[1,0]],"extra":1})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_arrangement_text("not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_arrangement_text(R"({"ambient_dim":2,"forms":[[0,0]]})"); }) == ErrorCode::ZeroForm);
  // Big entries as decimal strings.
  const auto big = parse_arrangement_text(R"({"ambient_dim":2,"forms":[["123456789012345678901234567890",0],[0,1]]})");
  CHECK(big.arrangement.forms[0] == Covector{1, 0});
  const auto sub = parse_subspace(data("plane_in_c4.json"));
  CHECK(sub.dim() == 3);
}

TEST_CASE("canonical text round trips") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen::random_essential(rng, 4, 7);
    const std::string text = canonical_text(a);
    const auto back = parse_arrangement_text(text).arrangement;
    CHECK(back == a);
    CHECK(canonical_text(back) == text);
  }
}

TEST_CASE("digests") {
  CHECK(sha256_digest("") == "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("json conversion of big integers") {
  CHECK(to_json(Integer(42)) == json(42));
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(to_json(big) == json(big.get_str()));
}

TEST_CASE("CLI output matches golden files") {
  for (const std::string cmd : {"lattice", "poincare", "polar-degree", "exponents"}) {
    const auto r = cli({cmd, data("braid3.json")});
    INFO(cmd);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(read_file(kSource + "/tests/golden/braid3_" + cmd + ".json")));
  }
}

TEST_CASE("CLI reports") {
  const auto polar = json::parse(cli({"polar-degree", data("boolean3.json")}).out);
  CHECK(polar["results"]["degree"] == 1);
  CHECK(polar["results"]["classification"] == "BOOLEAN_B1");
  CHECK(polar["command"] == "polar-degree");
  CHECK(polar["version"] == kVersion);

  const auto pip = cli({"pi-p", data("hattori4.json"), "--section-rank", "3", "--max-degree", "5"});
  REQUIRE(pip.code == 0);
  const auto pj = json::parse(pip.out);
  const json expected = {1, 3, 6, 10, 15, 21};
  CHECK(pj["results"]["series"]["coefficients"] == expected);
  CHECK(pj["results"]["cokernel_ranks"] == expected);

  const auto ex = cli({"exponents", data("generic4.json")});
  CHECK(ex.code == 3);
  const auto ej = json::parse(ex.out);
  CHECK(ej["error"]["code"] == "NotSupersolvable");
  CHECK(ej["error"]["certificate"]["failure_rank"] == 3);

  const auto dup = json::parse(cli({"lattice", data("duplicated.json")}).out);
  CHECK_FALSE(dup["warnings"].empty());

  const auto gen = json::parse(cli({"genericity", data("boolean3.json"), "--subspace", data("plane_in_c4.json")}).out);
  CHECK(gen.contains("error"));
  const auto ok = json::parse(cli({"genericity", data("hattori4.json"), "--subspace", data("plane_in_c4.json")}).out);
  CHECK(ok["results"]["k"] == ok["results"]["p"]);

  const auto lcs = json::parse(cli({"lcs", "--exponents", "1,2,3", "--max-k", "3"}).out);
  CHECK(lcs["results"]["phi"] == json({6, 4, 10}));
}

TEST_CASE("digests differ between inputs") {
  const auto a = json::parse(cli({"poincare", data("boolean3.json")}).out);
  const auto b = json::parse(cli({"poincare", data("hattori4.json")}).out);
  CHECK(a["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
  CHECK(a["input_digest"] != b["input_digest"]);
}

TEST_CASE("exit codes through the real binary") {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(ARRTOP_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("polar-degree " + data("boolean3.json")) == 0);
  CHECK(status("lattice " + kSource + "/tests/data/bad_length.json") == 2);
  CHECK(status("exponents " + data("generic4.json")) == 3);
  CHECK(status("no-such-command") == 2);
  CHECK(status("lattice /nonexistent.json") == 2);
}
