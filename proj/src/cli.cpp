#include "arrtop/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrtop/error.hpp"
#include "arrtop/genericity.hpp"
#include "arrtop/gr_complex.hpp"
#include "arrtop/homotopy.hpp"
#include "arrtop/io.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/lie_ranks.hpp"
#include "arrtop/polar.hpp"
#include "arrtop/supersolvable.hpp"

namespace arrtop {

using nlohmann::json;

namespace {

struct Session {
  std::string command;
  std::string digest;
  std::vector<std::string> warnings;
  std::uint64_t work_bound = default_work_bound();
  std::uint64_t seed = kDefaultSeed;
};

json level_json(const Level& l) { return l.is_infinite() ? json("INFINITE") : json(l.value()); }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Arrangement load(Session& s, const std::string& path) {
  LoadedArrangement la = parse_arrangement(path);
  s.digest = sha256_digest(canonical_text(la.arrangement));
  for (auto& w : la.warnings) s.warnings.push_back(w);
  return la.arrangement;
}

ExponentData exponents_from_list(const std::vector<long>& v) {
  require(!v.empty(), ErrorCode::ParseError, "empty exponent list");
  for (long d : v) require(d >= 1, ErrorCode::ParseError, "exponents must be positive integers");
  ExponentData e{v};
  std::sort(e.exponents.begin(), e.exponents.end());
  return e;
}

json lattice_results(const Arrangement& a) {
  const IntersectionLattice l = intersection_lattice(a);
  json flats = json::array();
  for (std::size_t i = 0; i < l.flats().size(); ++i)
    flats.push_back({{"hyperplanes", l.flats()[i].hyperplanes.indices()},
                     {"codim", l.flats()[i].codim},
                     {"mobius", to_json(l.mobius(i))}});
  return {{"rank", l.rank()},
          {"hyperplanes", a.size()},
          {"essential", l.rank() == a.ambient_dim},
          {"flat_counts_by_codim", l.count_by_codim()},
          {"characteristic_polynomial", to_json(characteristic_polynomial(l))},
          {"flats", flats}};
}

json poincare_results(const Arrangement& a, bool projective) {
  const IntPolynomial p = projective ? poincare_projective(a) : poincare_central(a);
  return {{"complement", projective ? "projective" : "central"},
          {"coefficients", to_json(p)},
          {"polynomial", p.to_string()}};
}

json polar_results(const Arrangement& a, std::uint64_t seed) {
  const PolarReport r = polar_degree(a, seed);
  json out = {{"degree", to_json(r.degree)},
              {"top_betti", to_json(r.top_betti)},
              {"affine_sphere_count", to_json(r.affine_sphere_count)},
              {"essential", r.essential},
              {"bound_satisfied", r.bound_satisfied},
              {"classification", to_string(r.classification)},
              {"polar_invariant", to_json(Integer(Integer(a.size()) * r.degree))}};
  json check = {{"evaluated", r.euler_check_evaluated}, {"seed", seed}};
  if (r.euler_check_evaluated) check["value"] = to_json(r.euler_check_value);
  out["euler_check"] = check;
  return out;
}

json exponents_results(const Arrangement& a) {
  const SupersolvabilityResult r = analyze_supersolvability(a);
  require(r.supersolvable, ErrorCode::NotSupersolvable,
          "no modular coatom in an interval of rank " + std::to_string(r.failure_rank));
  json chain = json::array();
  for (auto x : r.chain) chain.push_back(x.indices());
  return {{"exponents", r.exponents.exponents}, {"modular_chain", chain}, {"hypersolvable", "YES"}};
}

json section_results(const Arrangement& a, std::size_t r, std::uint64_t seed) {
  json out = {{"rank", r}, {"betti", to_json(generic_section_betti(a, r))}};
  // Explicit cross-check through a sampled subspace of dimension r.
  if (r < a.rank()) {
    const Subspace u = random_generic_subspace(a, r, r - 1, seed);
    const auto explicit_betti = projective_betti(restrict_to_subspace(a, u));
    out["explicit_check"] = {{"seed", seed},
                             {"betti", to_json(explicit_betti)},
                             {"agrees", explicit_betti == generic_section_betti(a, r)}};
  }
  return out;
}

json genericity_results(const Arrangement& a, const Subspace& u) {
  u.validate(a.ambient_dim);
  const Level k = k_genericity(a, u);
  const Level p = p_connectivity(a, u);
  return {{"subspace_dim", u.dim()}, {"k", level_json(k)}, {"p", level_json(p)}, {"agree", k == p}};
}

json series_json(const HilbertSeries& h) {
  json coeffs = json::array();
  for (const auto& x : h.series.coefficients) coeffs.push_back(to_json(x));
  return {{"numerator", to_json(h.numerator)}, {"denominator", to_json(h.denominator)}, {"coefficients", coeffs}};
}

json pi_p_results(const Arrangement& a, std::size_t section_rank, std::size_t d, std::uint64_t work_bound) {
  const SectionData s = make_section(a, section_rank);
  const auto coker = gr_pi_p_cokernel(s, d, work_bound);
  const HilbertSeries h = pi_p_hilbert_series(s.exponents, s.p, d);
  bool match = true;
  for (std::size_t k = 0; k <= d; ++k) match = match && Rational(coker[k]) == h.series.coefficients[k];
  const KPi1Verdict v = k_pi1_test(s);
  return {{"section_rank", section_rank},
          {"p", s.p},
          {"exponents", s.exponents.exponents},
          {"cokernel_ranks", to_json(coker)},
          {"series", series_json(h)},
          {"match", match},
          {"verdict", to_string(v.verdict)},
          {"freeness", to_string(v.freeness)}};
}

json homology_json(const ResolutionReport& r) {
  json nz = json::array();
  for (const auto& [key, rank] : r.nonzero()) nz.push_back({{"q", key.first}, {"t", key.second}, {"rank", rank}});
  return nz;
}

json gr_check_results(Session& s, const Arrangement& a, std::size_t d, bool integers) {
  const OSAlgebra os(a, Complement::Projective);
  const UEnvelope u = u_envelope(os, d, s.work_bound);
  const GrChainComplex right = gr_complex(os, u);
  const GrChainComplex left = gr_complex_left(os, u);
  const ResolutionReport rr = verify_resolution(right);
  const ResolutionReport lr = verify_resolution(left);
  json out = {{"max_internal_degree", d},
              {"generator_ranks", right.generator_ranks},
              {"u_dims", u.dims()},
              {"square_zero", true},
              {"acyclic", rr.acyclic()},
              {"nonzero_homology", homology_json(rr)},
              {"left_right_agree", rr.homology == lr.homology}};
  if (integers) {
    json z;
    bool supersolvable = is_essential(a) && analyze_supersolvability(a).supersolvable;
    if (!supersolvable) {
      z = {{"available", false}, {"reason", "integer mode is limited to supersolvable arrangements"}};
      s.warnings.push_back("integer mode skipped: arrangement is not known to be supersolvable");
    } else {
      const IntegerCheck ic = integer_check(right, u);
      z = {{"available", ic.available}, {"exact_over_z", ic.exact_over_z}};
      if (!ic.available) {
        z["reason"] = ic.reason;
        s.warnings.push_back("integer mode unavailable: " + ic.reason);
      }
      json torsion = json::array();
      for (auto [q, t] : ic.torsion_at) torsion.push_back({{"q", q}, {"t", t}});
      z["torsion_at"] = torsion;
    }
    out["integers"] = z;
  }
  return out;
}

json lcs_results(const ExponentData& e, std::size_t k) {
  const auto phi = lcs_ranks(e, k);
  std::vector<Integer> neg;
  for (long d : e.exponents) neg.emplace_back(-d);
  const auto target = product_of_linear(neg).truncated(k);
  const auto back = lcs_product(phi, k);
  std::vector<Integer> target_coeffs(k + 1, 0);
  for (std::size_t i = 0; i <= k; ++i) target_coeffs[i] = target[i];
  return {{"exponents", e.exponents},
          {"phi", to_json(phi)},
          {"reexpansion", to_json(back)},
          {"reexpansion_matches", back == target_coeffs}};
}

json consistency_json(const ConsistencyReport& r) {
  json out = json::array();
  for (const auto& c : r.checks) {
    json e = {{"identity", c.name}, {"passed", c.passed}};
    if (c.first_failing_degree) e["first_failing_degree"] = *c.first_failing_degree;
    out.push_back(e);
  }
  return out;
}

// Runs f and records its failure as a report entry instead of aborting.
json guarded(const std::function<json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalAssertion) throw;
    return {{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}};
  }
}

json full_report(Session& s, const Arrangement& a, std::size_t d) {
  json out;
  out["lattice"] = guarded([&] {
    json l = lattice_results(a);
    l.erase("flats");
    return l;
  });
  out["poincare_central"] = guarded([&] { return poincare_results(a, false); });
  out["poincare_projective"] = guarded([&] { return poincare_results(a, true); });
  out["polar"] = guarded([&] { return polar_results(a, s.seed); });
  out["minimal_cell_counts"] = guarded([&] {
    const auto m = minimal_cell_counts(a);
    return json{{"projective", to_json(m.projective)}, {"central", to_json(m.central)}};
  });
  const bool essential = is_essential(a);
  std::optional<SupersolvabilityResult> ss;
  if (essential) ss = analyze_supersolvability(a);
  out["exponents"] = guarded([&]() -> json {
    if (!essential) return {{"supersolvable", "NOT_TESTED"}, {"reason", "arrangement is not essential"}};
    if (!ss->supersolvable)
      return {{"supersolvable", false}, {"failure_rank", ss->failure_rank}, {"hypersolvable", "UNKNOWN"}};
    return {{"supersolvable", true}, {"exponents", ss->exponents.exponents}, {"hypersolvable", "YES"}};
  });
  if (essential) {
    json sections = json::array();
    for (std::size_t r = 1; r <= a.rank(); ++r) sections.push_back(guarded([&] { return section_results(a, r, s.seed); }));
    out["sections"] = sections;
  }
  out["gr_check"] = guarded([&] { return gr_check_results(s, a, d, false); });
  if (ss && ss->supersolvable) {
    out["lcs"] = guarded([&] { return lcs_results(ss->exponents, d); });
    json pis = json::array();
    for (std::size_t r = 3; r < a.rank(); ++r) {
      pis.push_back(guarded([&] {
        json j = pi_p_results(a, r, d, s.work_bound);
        j["consistency"] = consistency_json(consistency_suite(make_section(a, r), d, std::nullopt, s.work_bound));
        return j;
      }));
    }
    out["pi_p"] = pis;
  }
  return out;
}

int exit_code_for(ErrorCode c) {
  if (is_input_error(c)) return 2;
  if (c == ErrorCode::InternalAssertion) return 1;
  return 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of complex hyperplane arrangements", "arrtop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Session s;
  std::string file, subspace_file;
  bool projective = false, integers = false;
  std::size_t rank_arg = 0, section_rank = 0, max_degree = kDefaultMaxInternalDegree, max_k = 5, p_arg = 0;
  std::vector<long> exponent_list;
  std::uint64_t work_bound = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--work-bound", work_bound, "Tensor-slice work bound (default 10^6 or ARRTOP_WORK_BOUND)");
    sub->add_option("--seed", s.seed, "Seed for generic subspace sampling");
  };
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice and Mobius values");
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement");
  poincare->add_flag("--projective", projective, "Projective complement");
  auto* polar = app.add_subcommand("polar-degree", "Polar Cremona degree");
  auto* exponents = app.add_subcommand("exponents", "Supersolvable exponents");
  auto* section = app.add_subcommand("section", "Betti numbers of a generic section");
  section->add_option("--rank", rank_arg, "Section rank")->required();
  auto* genericity = app.add_subcommand("genericity", "Genericity level k and connectivity p of a subspace");
  genericity->add_option("--subspace", subspace_file, "Subspace file")->required();
  auto* pip = app.add_subcommand("pi-p", "gr of the first higher homotopy group of a generic section");
  auto* sr = pip->add_option("--section-rank", section_rank, "Rank of the iterated generic section");
  auto* ex = pip->add_option("--exponents", exponent_list, "Exponents d_1,...,d_l")->delimiter(',');
  auto* pp = pip->add_option("--p", p_arg, "Homotopy degree p");
  pip->add_option("--max-degree", max_degree, "Truncation degree");
  sr->excludes(ex);
  ex->needs(pp);
  auto* gr = app.add_subcommand("gr-check", "Build the gr chain complex and check the resolution property");
  gr->add_option("--max-degree", max_degree, "Maximal internal degree");
  gr->add_flag("--integers", integers, "Also check exactness over Z (supersolvable inputs)");
  auto* lcs = app.add_subcommand("lcs", "Lower central series ranks from exponents");
  lcs->add_option("--max-k", max_k, "Number of ranks");
  auto* lcs_ex = lcs->add_option("--exponents", exponent_list, "Exponents instead of a file")->delimiter(',');
  auto* report = app.add_subcommand("report", "Full battery of invariants");
  report->add_option("--max-degree", max_degree, "Truncation degree for gr computations");

  for (auto* sub : {lattice, poincare, polar, exponents, section, genericity, gr, report})
    sub->add_option("file", file, "Arrangement file")->required();
  pip->add_option("file", file, "Arrangement file");
  lcs->add_option("file", file, "Arrangement file")->excludes(lcs_ex);
  for (auto* sub : {lattice, poincare, polar, exponents, section, genericity, pip, gr, lcs, report}) add_common(sub);

  std::vector<const char*> argv{"arrtop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? 0 : 2;
  }
  CLI::App* chosen = app.get_subcommands().front();
  s.command = chosen->get_name();
  if (work_bound) s.work_bound = work_bound;

  json doc = {{"command", s.command}, {"version", kVersion}};
  int rc = 0;
  try {
    json results;
    if (chosen == lattice) {
      results = lattice_results(load(s, file));
    } else if (chosen == poincare) {
      results = poincare_results(load(s, file), projective);
    } else if (chosen == polar) {
      results = polar_results(load(s, file), s.seed);
    } else if (chosen == exponents) {
      results = exponents_results(load(s, file));
    } else if (chosen == section) {
      results = section_results(load(s, file), rank_arg, s.seed);
    } else if (chosen == genericity) {
      const Arrangement a = load(s, file);
      const std::string text = read_file(subspace_file);
      s.digest = sha256_digest(canonical_text(a) + text);
      results = genericity_results(a, parse_subspace_text(text));
    } else if (chosen == pip) {
      if (!exponent_list.empty()) {
        require(file.empty(), ErrorCode::ParseError, "give either an arrangement file or --exponents");
        const ExponentData e = exponents_from_list(exponent_list);
        s.digest = sha256_digest("exponents:" + join(e.exponents) + ";p:" + std::to_string(p_arg));
        results = {{"exponents", e.exponents}, {"p", p_arg}, {"series", series_json(pi_p_hilbert_series(e, p_arg, max_degree))}};
      } else {
        require(!file.empty() && section_rank > 0, ErrorCode::ParseError,
                "pi-p needs FILE --section-rank R or --exponents LIST --p P");
        results = pi_p_results(load(s, file), section_rank, max_degree, s.work_bound);
      }
    } else if (chosen == gr) {
      results = gr_check_results(s, load(s, file), max_degree, integers);
    } else if (chosen == lcs) {
      ExponentData e;
      if (!exponent_list.empty()) {
        e = exponents_from_list(exponent_list);
        s.digest = sha256_digest("exponents:" + join(e.exponents));
      } else {
        require(!file.empty(), ErrorCode::ParseError, "lcs needs an arrangement file or --exponents");
        e = supersolvable_exponents(load(s, file));
      }
      results = lcs_results(e, max_k);
    } else if (chosen == report) {
      const Arrangement a = load(s, file);
      results = full_report(s, a, max_degree);
    }
    doc["results"] = results;
  } catch (const Error& e) {
    rc = exit_code_for(e.code());
    doc["results"] = nullptr;
    doc["error"] = {{"code", std::string(error_name(e.code()))}, {"message", e.what()}};
    if (e.code() == ErrorCode::NotSupersolvable && chosen == exponents)
      doc["error"]["certificate"] = {
          {"failure_rank", analyze_supersolvability(parse_arrangement(file).arrangement).failure_rank},
          {"hypersolvable", "UNKNOWN"}};
    err << "arrtop: " << error_name(e.code()) << ": " << e.what() << "\n";
  }
  doc["input_digest"] = s.digest;
  doc["warnings"] = s.warnings;
  out << doc.dump(2) << "\n";
  return rc;
}

}  // namespace arrtop
