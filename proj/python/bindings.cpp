#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arrtop/cli.hpp"
#include "arrtop/error.hpp"
#include "arrtop/genericity.hpp"
#include "arrtop/gr_complex.hpp"
#include "arrtop/homotopy.hpp"
#include "arrtop/io.hpp"
#include "arrtop/lattice.hpp"
#include "arrtop/lie_ranks.hpp"
#include "arrtop/polar.hpp"
#include "arrtop/supersolvable.hpp"

namespace py = pybind11;
using namespace arrtop;

namespace {

PyObject* arrtop_error = nullptr;

// Python ints go through their decimal text so arbitrary sizes survive.
Integer to_integer(const py::handle& h) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

std::vector<Covector> to_forms(const py::sequence& forms) {
  std::vector<Covector> out;
  for (const auto& row : forms) {
    Covector v;
    for (const auto& x : py::reinterpret_borrow<py::sequence>(row)) v.push_back(to_integer(x));
    out.push_back(std::move(v));
  }
  return out;
}

Arrangement arrangement(const py::sequence& forms, std::size_t ambient_dim) {
  return normalize(to_forms(forms), ambient_dim);
}

py::object level(const Level& l) {
  if (l.is_infinite()) return py::none();
  return py::int_(l.value());
}

py::list forms_to_py(const Arrangement& a) {
  py::list out;
  for (const auto& f : a.forms) out.append(to_py(std::vector<Integer>(f.begin(), f.end())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_arrtop, m) {
  m.doc() = "Exact invariants of hyperplane arrangements";

  py::exception<Error> exc(m, "ArrtopError");
  arrtop_error = exc.ptr();
  Py_INCREF(arrtop_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(arrtop_error)(py::str(e.what()));
      inst.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(arrtop_error, inst.ptr());
    }
  });

  m.attr("__version__") = std::string(kVersion);
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("normalize", [](const py::sequence& forms, std::size_t ambient_dim) {
    return forms_to_py(arrangement(forms, ambient_dim));
  }, py::arg("forms"), py::arg("ambient_dim"));

  m.def("poincare", [](const py::sequence& forms, std::size_t ambient_dim, bool projective) {
    const auto a = arrangement(forms, ambient_dim);
    return to_py((projective ? poincare_projective(a) : poincare_central(a)).coefficients());
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("projective") = false);

  m.def("polar_degree", [](const py::sequence& forms, std::size_t ambient_dim, std::uint64_t seed) {
    const auto r = polar_degree(arrangement(forms, ambient_dim), seed);
    py::dict d;
    d["degree"] = to_py(r.degree);
    d["classification"] = to_string(r.classification);
    d["essential"] = r.essential;
    d["bound_satisfied"] = r.bound_satisfied;
    d["affine_sphere_count"] = to_py(r.affine_sphere_count);
    return d;
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("seed") = kDefaultSeed);

  m.def("exponents", [](const py::sequence& forms, std::size_t ambient_dim) {
    return supersolvable_exponents(arrangement(forms, ambient_dim)).exponents;
  }, py::arg("forms"), py::arg("ambient_dim"));

  m.def("u_envelope_dims", [](const py::sequence& forms, std::size_t ambient_dim, std::size_t max_degree) {
    return u_envelope(arrangement(forms, ambient_dim), max_degree).dims();
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("max_degree"));

  m.def("verify_resolution", [](const py::sequence& forms, std::size_t ambient_dim, std::size_t max_degree) {
    const auto r = verify_resolution(gr_complex(arrangement(forms, ambient_dim), max_degree));
    py::dict d;
    for (const auto& [key, rank] : r.homology) d[py::make_tuple(key.first, key.second)] = rank;
    return d;
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("max_degree") = kDefaultMaxInternalDegree);

  m.def("gr_pi_p_cokernel", [](const py::sequence& forms, std::size_t ambient_dim, std::size_t section_rank,
                               std::size_t max_degree) {
    return to_py(gr_pi_p_cokernel(make_section(arrangement(forms, ambient_dim), section_rank), max_degree));
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("section_rank"), py::arg("max_degree"));

  m.def("pi_p_hilbert_series", [](const std::vector<long>& exponents, std::size_t p, std::size_t max_degree) {
    return to_py(pi_p_hilbert_series(ExponentData{exponents}, p, max_degree).series.integer_coefficients());
  }, py::arg("exponents"), py::arg("p"), py::arg("max_degree"));

  m.def("lcs_ranks", [](const std::vector<long>& exponents, std::size_t max_k) {
    return to_py(lcs_ranks(ExponentData{exponents}, max_k));
  }, py::arg("exponents"), py::arg("max_k"));

  m.def("k_genericity", [](const py::sequence& forms, std::size_t ambient_dim, const py::sequence& basis) {
    return level(k_genericity(arrangement(forms, ambient_dim), Subspace{to_forms(basis)}));
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("basis"));

  m.def("p_connectivity", [](const py::sequence& forms, std::size_t ambient_dim, const py::sequence& basis) {
    return level(p_connectivity(arrangement(forms, ambient_dim), Subspace{to_forms(basis)}));
  }, py::arg("forms"), py::arg("ambient_dim"), py::arg("basis"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
