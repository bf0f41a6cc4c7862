#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "lindlehmer/congruence.hpp"
#include "lindlehmer/errors.hpp"
#include "lindlehmer/json_io.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/search.hpp"

namespace py = pybind11;
using namespace lindlehmer;

namespace {

using GroupArg = std::variant<std::string, std::vector<std::int64_t>>;

GroupSpec to_group(const GroupArg& g) {
  if (auto s = std::get_if<std::string>(&g)) return parse_group(*s);
  return make_group(std::get<std::vector<std::int64_t>>(g));
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_string(v))); }
BigInt from_py(const py::int_& v) { return parse_bigint(py::str(v).cast<std::string>()); }

py::dict measure_py(const GroupArg& group, const std::string& poly, const std::string& method) {
  const GroupSpec g = to_group(group);
  const IntPolynomial f = parse_polynomial(poly, g.rank());
  MeasureResult r = measure(g, f, parse_measure_method(method));
  py::dict out;
  out["M"] = to_py(r.m_int);
  out["log_measure"] = r.log_measure ? py::object(py::float_(*r.log_measure)) : py::object(py::none());
  out["method"] = to_string(r.method);
  py::list factors;
  for (const auto& fac : r.factors) factors.append(py::make_tuple(fac.divisors, to_py(fac.value)));
  out["factors"] = factors;
  return out;
}

py::dict lambda_py(const GroupArg& group, int bound, unsigned threads, bool symmetry, bool prune, bool force) {
  SearchConfig c(to_group(group));
  c.coeff_bound = bound;
  c.thread_count = threads;
  c.symmetry_reduction = symmetry;
  c.prune_p_divides_f1 = prune;
  c.force = force;
  std::optional<SearchReport> found;
  {
    py::gil_scoped_release release;
    found.emplace(lambda_search(c));
  }
  const SearchReport& r = *found;
  py::dict out;
  out["lambda"] = r.lambda_found ? py::object(to_py(*r.lambda_found)) : py::object(py::none());
  py::list witnesses;
  for (const auto& w : r.witnesses) witnesses.append(w.to_polynomial().to_string());
  out["witnesses"] = witnesses;
  out["witness_count"] = r.witness_count;
  out["explored"] = r.explored;
  out["pruned"] = r.pruned;
  out["exhaustive_in_box"] = r.exhaustive_in_box;
  out["json"] = search_report_to_json(r).dump();
  return out;
}

py::dict congruence_py(const GroupArg& group, const std::string& poly) {
  const GroupSpec g = to_group(group);
  CongruenceReport r = check_congruence(g, parse_polynomial(poly, g.rank()));
  py::dict out;
  out["modulus"] = to_py(r.modulus);
  out["M"] = to_py(r.m_value);
  out["lhs_residue"] = to_py(r.lhs_residue);
  out["rhs_residue"] = to_py(r.rhs_residue);
  out["satisfied"] = r.satisfied;
  return out;
}

}  // namespace

PYBIND11_MODULE(_lindlehmer, m) {
  m.doc() = "Exact Lind-Mahler measures over finite abelian groups";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(PyExc_RuntimeError, e.what());
    }
  });
  // Registered later, so tried first.
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

  m.def("measure", &measure_py, py::arg("group"), py::arg("poly"), py::arg("method") = "determinant",
        "Exact M_G(F). Variables map to the group factors in order (y is the second factor).");
  m.def("lambda_search", &lambda_py, py::arg("group"), py::arg("bound") = 1, py::arg("threads") = 1,
        py::arg("symmetry") = true, py::arg("prune") = true, py::arg("force") = false,
        "Least |M| > 1 over coefficient arrays in [-bound, bound]^|G|.");
  m.def("check_congruence", &congruence_py, py::arg("group"), py::arg("poly"));
  m.def(
      "verify_witness",
      [](const GroupArg& group, const std::string& poly, const py::int_& expected) {
        const GroupSpec g = to_group(group);
        return verify_witness(g, parse_polynomial(poly, g.rank()), from_py(expected)).ok;
      },
      py::arg("group"), py::arg("poly"), py::arg("expected"));
  m.def(
      "allowed_residues",
      [](const GroupArg& group) { return allowed_residues(to_group(group)); }, py::arg("group"));
  m.def(
      "cyclotomic_resultant", [](std::uint64_t j, std::uint64_t k) { return to_py(cyclotomic_resultant(j, k)); },
      py::arg("j"), py::arg("k"));
  m.def(
      "trivial_bound_poly", [](const GroupArg& group) { return trivial_bound_poly(to_group(group)).to_string(); },
      py::arg("group"));
  m.def(
      "is_zero_mod_ideal",
      [](const GroupArg& group, const std::string& poly) {
        const GroupSpec g = to_group(group);
        return is_zero_mod_ideal(parse_polynomial(poly, g.rank()), g);
      },
      py::arg("group"), py::arg("poly"));
}
