#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "yb/cohomology.hpp"
#include "yb/deformations.hpp"
#include "yb/io.hpp"
#include "yb/rack.hpp"
#include "yb/yang_baxter.hpp"

namespace py = pybind11;
using namespace yb;

namespace {

TruncPoly to_poly(const std::vector<std::string>& coeffs, std::size_t order) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return TruncPoly(order, std::move(c));
}

std::vector<std::string> poly_strings(const TruncPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Yang-Baxter engine for racks and quandles";

  py::register_exception<RackAxiomError>(m, "RackAxiomError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Rack>(m, "Rack")
      .def_property_readonly("size", &Rack::size)
      .def_property_readonly("is_quandle", &Rack::is_quandle)
      .def("op", &Rack::op)
      .def("op_inv", &Rack::op_inv)
      .def("table", &Rack::table)
      .def("__len__", &Rack::size)
      .def("__eq__", [](const Rack& a, const Rack& b) { return a == b; });

  py::class_<YbeVerdict>(m, "YbeVerdict")
      .def_readonly("holds", &YbeVerdict::holds)
      .def_readonly("witness", &YbeVerdict::witness)
      .def("__bool__", [](const YbeVerdict& v) { return v.holds; });

  py::class_<CohomologyReport>(m, "CohomologyReport")
      .def_readonly("degree", &CohomologyReport::degree)
      .def_readonly("dim_z", &CohomologyReport::dim_z)
      .def_readonly("dim_b", &CohomologyReport::dim_b)
      .def_readonly("dim_e", &CohomologyReport::dim_e)
      .def_readonly("dim_h", &CohomologyReport::dim_h)
      .def_readonly("dim_sum", &CohomologyReport::dim_sum)
      .def_readonly("dim_intersection", &CohomologyReport::dim_intersection)
      .def_readonly("verified", &CohomologyReport::verified);

  m.def("resolve_rack", [](const std::string& spec) { return resolve_rack(spec); }, py::arg("spec"));
  m.def("rack_from_table", &validate_rack, py::arg("table"), py::arg("quandle_required") = false);
  m.def("rack_hash", &rack_hash);
  m.def("d4_reflection_quandle", &d4_reflection_quandle);
  m.def("inner_group_order", [](const Rack& r) { return inner_group(r).order(); });
  m.def("behavioral_classes", &behavioral_classes);
  m.def("classify_h2", [](const Rack& r) { return classify_h2(r); });

  m.def("cq_dense", [](const Rack& r) {
    const SparseMat c = build_cq(r).matrix().constant_term();
    std::vector<std::vector<long>> out(c.rows(), std::vector<long>(c.cols(), 0));
    for (const auto& t : c.triplets()) out[t.row][t.col] = t.value.get_num().get_si();
    return out;
  });
  m.def("check_ybe_cq", [](const Rack& r) { return check_ybe(build_cq(r)); });

  m.def("entropic_orbits", [](const Rack& r, std::size_t d) { return entropic_basis(r, d).orbits; },
        py::arg("rack"), py::arg("degree") = 2);

  m.def("deform_ybe", [](const Rack& r, const std::vector<std::vector<std::string>>& params,
                         std::size_t order) {
    std::vector<TruncPoly> p;
    for (const auto& c : params) p.push_back(to_poly(c, order));
    return ybe_deformed(DeformationFamily(r, std::move(p)));
  });

  m.def("trace_square", [](const std::vector<std::vector<std::string>>& printed, std::size_t order) {
    std::vector<TruncPoly> p;
    for (const auto& c : printed) p.push_back(to_poly(c, order));
    auto cmp = trace_square_formula(DeformationFamily(d4_reflection_quandle(), params_from_printed(p)));
    return py::make_tuple(poly_strings(cmp.computed), poly_strings(cmp.formula));
  });

  m.def("jones_ybe", [](const std::string& q) { return check_ybe(build_jones(parse_rational(q))).holds; });

  m.def("normalize_json", [](const Rack& r, const std::string& text) {
    json j = json::parse(text);
    PolyMatrix c = poly_matrix_from_json(j);
    auto res = normalize_to_entropic(r, YBOperator(r.size(), std::move(c)));
    json out;
    out["alpha"] = poly_matrix_to_json(res.alpha.matrix);
    out["output"] = poly_matrix_to_json(res.output.matrix());
    out["entropic"] = is_entropic_deformation(r, res.output.matrix());
    return out.dump();
  });
}
