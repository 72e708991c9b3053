#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fillpair/bounds.hpp"
#include "fillpair/enumeration.hpp"
#include "fillpair/errors.hpp"
#include "fillpair/fatgraph.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/quadopt.hpp"

namespace py = pybind11;
using namespace fillpair;

namespace {

py::dict solution_dict(const QuadSolution& s) {
  py::dict d;
  d["theta"] = s.theta;
  d["theta1"] = s.theta1;
  d["theta2"] = s.theta2;
  d["l"] = s.l;
  d["x"] = s.x;
  d["w"] = s.w;
  d["y"] = s.y;
  d["z"] = s.z;
  d["objective"] = s.objective;
  d["residuals"] = s.residuals;
  return d;
}

py::dict config_dict(const FillingConfiguration& c) {
  py::dict d;
  std::vector<std::string> sigma0;
  for (const auto& cyc : c.graph.vertex_rotations())
    sigma0.push_back(word_string(c.graph, cyc));
  std::vector<std::string> words;
  for (const auto& cyc : c.boundary) words.push_back(word_string(c.graph, cyc));
  d["sigma0"] = sigma0;
  d["boundary_words"] = words;
  d["face_sizes"] = c.face_sizes;
  d["type"] = to_string(c.type);
  d["canonical_key"] = c.canonical_key;
  return d;
}

py::dict certificate_dict(const BoundCertificate& cert) {
  py::dict d;
  d["f"] = cert.config.f;
  d["sizes"] = cert.config.sizes;
  d["case_tag"] = cert.config.case_tag;
  d["merged_pair"] = cert.merged_pair;
  d["area_split"] = cert.area_split;
  d["bound"] = cert.bound;
  d["rule_applied"] = cert.rule_applied;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal filling pairs on the genus-two surface: fat-graph "
            "boundary words, enumeration and hyperbolic length bounds";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "FatGraphParseError", PyExc_ValueError);
  py::register_exception<InfeasibleThetaError>(m, "InfeasibleThetaError",
                                               PyExc_ValueError);

  py::class_<FatGraph>(m, "FatGraph")
      .def_static("parse", [](const std::string& text) {
        return parse_fat_graph(text);
      })
      .def_property_readonly("n_darts", &FatGraph::n_darts)
      .def("boundary_words",
           [](const FatGraph& g) {
             std::vector<std::string> out;
             for (const auto& cyc : boundary_cycles(g).cycles)
               out.push_back(word_string(g, cyc));
             return out;
           })
      .def("face_sizes",
           [](const FatGraph& g) { return boundary_cycles(g).face_sizes; })
      .def("euler_characteristic",
           [](const FatGraph& g) { return euler_characteristic(g); })
      .def("genus", [](const FatGraph& g) { return genus(g); })
      .def("to_text", [](const FatGraph& g) { return to_text(g); })
      .def("__repr__", [](const FatGraph& g) {
        return "<FatGraph darts=" + std::to_string(g.n_darts()) + ">";
      });

  m.def("enumerate_raw", [](int jobs) {
    py::list out;
    for (const auto& c : enumerate_raw(jobs)) out.append(config_dict(c));
    return out;
  }, py::arg("jobs") = 1);

  m.def("classify_orbits", [](bool shift_alpha, bool shift_beta,
                              bool reverse_curves, bool swap_curves,
                              bool mirror) {
    SymmetryOptions opts;
    opts.shift_alpha = shift_alpha;
    opts.shift_beta = shift_beta;
    opts.reverse_curves = reverse_curves;
    opts.swap_curves = swap_curves;
    opts.mirror = mirror;
    const auto report = classify_orbits(enumerate_raw(), opts);
    py::dict d;
    d["raw_count"] = report.raw_count;
    py::list classes;
    for (const auto& cls : report.classes) {
      py::dict c;
      c["canonical_key"] = cls.canonical_key;
      c["type"] = to_string(cls.type);
      c["member_count"] = cls.member_count;
      c["representative"] = config_dict(cls.representative);
      classes.append(c);
    }
    d["classes"] = classes;
    return d;
  }, py::arg("shift_alpha") = true, py::arg("shift_beta") = true,
     py::arg("reverse_curves") = true, py::arg("swap_curves") = true,
     py::arg("mirror") = false);

  m.def("triangle_side", [](double A, double B, double C, int opposite) {
    return triangle_side({A, B, C}, static_cast<Opposite>(opposite));
  }, py::arg("A"), py::arg("B"), py::arg("C"), py::arg("opposite") = 0);
  m.def("polygon_area", [](const std::vector<double>& angles) {
    return polygon_area(angles);
  });
  m.def("regular_polygon_perimeter", &regular_polygon_perimeter);
  m.def("f8", &f8);
  m.def("f8_derivative", &f8_derivative);
  m.def("minimize_f8", [] {
    const auto r = minimize_f8();
    return py::make_tuple(r.theta, r.value);
  });
  m.def("length_bound_88", &length_bound_88);

  m.def("g_residuals", [](double x, double l, double theta, double theta1,
                          double theta2) {
    return g_residuals({x, l, theta, theta1, theta2});
  });
  m.def("solve_at_theta",
        [](double theta) { return solution_dict(solve_at_theta(theta)); });
  m.def("minimize_objective", [] { return solution_dict(minimize_objective()); });
  m.def("length_bound_412", &length_bound_412);
  m.def("optimum_point", [] {
    const auto p = optimum_point();
    return py::make_tuple(p.x, p.l, p.theta, p.theta1, p.theta2);
  });
  m.def("optimum_multipliers", [] { return optimum_multipliers(); });
  m.def("verify_lagrange", [](const std::vector<double>& point,
                              const std::vector<double>& multipliers) {
    if (point.size() != 5 || multipliers.size() != 4)
      throw DomainError("verify_lagrange: need 5 coordinates and 4 multipliers");
    const QuadPoint p{point[0], point[1], point[2], point[3], point[4]};
    const auto cert = verify_lagrange(
        p, {multipliers[0], multipliers[1], multipliers[2], multipliers[3]});
    py::dict d;
    d["gradient_residual"] = cert.gradient_residual;
    d["constraint_residual"] = cert.constraint_residual;
    return d;
  });

  m.def("enumerate_face_configs", [](int f_max) {
    py::list out;
    for (const auto& c : enumerate_face_configs(f_max)) {
      py::dict d;
      d["f"] = c.f;
      d["sizes"] = c.sizes;
      d["case_tag"] = c.case_tag;
      d["topologically_excluded"] = c.topologically_excluded;
      out.append(d);
    }
    return out;
  });
  m.def("global_bound", [](int f_max) {
    const auto gb = global_bound(f_max);
    py::list certs;
    for (const auto& cert : gb.certificates) certs.append(certificate_dict(cert));
    return py::make_tuple(gb.bound, certs);
  }, py::arg("f_max") = 10);
}
