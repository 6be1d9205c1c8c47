#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peelkit/bounds.hpp"
#include "peelkit/construction.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/io.hpp"
#include "peelkit/peeling.hpp"
#include "peelkit/svg.hpp"
#include "peelkit/verify.hpp"

namespace py = pybind11;
using namespace peelkit;

namespace {

// Coordinates cross the boundary as fractions.Fraction; anything whose str()
// parses as a rational is accepted on the way in.
Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw InputError("floats are not accepted; use int, str or Fraction");
  return parse_scalar(py::str(h).cast<std::string>());
}

py::object to_fraction(const Scalar& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_scalar(v));
}

py::int_ to_int(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

PointSet to_points(const py::sequence& pts, int dim) {
  PointSet s;
  s.dim = dim;
  for (const auto& row : pts) {
    Point p;
    for (const auto& x : row.cast<py::sequence>()) p.push_back(to_scalar(x));
    s.points.push_back(std::move(p));
  }
  if (s.dim == 0 && !s.points.empty()) s.dim = static_cast<int>(s.points[0].size());
  s.validate();
  return s;
}

py::list from_points(const PointSet& s) {
  py::list out;
  for (const auto& p : s.points) {
    py::list row;
    for (const auto& x : p) row.append(to_fraction(x));
    out.append(row);
  }
  return out;
}

Point to_point(const py::object& o, int dim) {
  if (o.is_none()) return origin(dim);
  Point p;
  for (const auto& x : o.cast<py::sequence>()) p.push_back(to_scalar(x));
  return p;
}

py::tuple enclosure(const Enclosure& e) { return py::make_tuple(to_fraction(e.lo), to_fraction(e.hi)); }

}  // namespace

PYBIND11_MODULE(_peelkit, m) {
  m.doc() = "Exact peeling-sequence counting and defense-number toolkit";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<CertificationError> cert_error(m, "CertificationError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const ResourceError& e) {
      py::set_error(resource_error, e.what());
    } catch (const CertificationError& e) {
      py::set_error(cert_error, e.what());
    }
  });

  m.def(
      "peel_count",
      [](const py::sequence& pts, int dim, std::uint64_t state_budget) {
        PeelOptions o;
        o.state_budget = state_budget;
        return to_int(peel_count(to_points(pts, dim), o).count);
      },
      py::arg("points"), py::arg("dim") = 0, py::arg("state_budget") = std::uint64_t{1} << 26,
      "Number of peeling sequences of the point set.");
  m.def(
      "peel_count_naive", [](const py::sequence& pts, int dim) { return to_int(peel_count_naive(to_points(pts, dim))); },
      py::arg("points"), py::arg("dim") = 0);
  m.def(
      "peel_enumerate",
      [](const py::sequence& pts, std::size_t limit, int dim) { return peel_enumerate(to_points(pts, dim), limit); },
      py::arg("points"), py::arg("limit"), py::arg("dim") = 0);
  m.def(
      "hull_vertices", [](const py::sequence& pts, int dim) { return hull_vertices(to_points(pts, dim)); },
      py::arg("points"), py::arg("dim") = 0);
  m.def(
      "is_general_position", [](const py::sequence& pts, int dim) { return is_general_position(to_points(pts, dim)); },
      py::arg("points"), py::arg("dim") = 0);
  m.def(
      "depth",
      [](const py::sequence& pts, const py::object& p, int dim) {
        const PointSet s = to_points(pts, dim);
        const DepthReport r = open_halfspace_depth(s, to_point(p, s.dim));
        py::list w;
        for (const auto& x : r.witness) w.append(to_fraction(x));
        return py::make_tuple(r.depth, w);
      },
      py::arg("points"), py::arg("p") = py::none(), py::arg("dim") = 0,
      "(depth, witness direction) of p (default: origin).");
  m.def(
      "defends_by_peeling",
      [](const py::sequence& pts, int m_steps, const py::object& p, int dim) {
        const PointSet s = to_points(pts, dim);
        return defends_by_peeling(s, to_point(p, s.dim), m_steps);
      },
      py::arg("points"), py::arg("m"), py::arg("p") = py::none(), py::arg("dim") = 0);
  m.def("gale_set", [](int d, int mm) { return from_points(gale_set(d, mm)); }, py::arg("d"), py::arg("m"));
  m.def("base_set", [](int d, int mm) { return from_points(base_set(d, mm).points); }, py::arg("d"), py::arg("m"));
  m.def(
      "build_construction",
      [](int d, int mm, std::size_t n) {
        const CertifiedConstruction c = build_certified(d, mm, n);
        py::dict out;
        out["points"] = from_points(c.construction.points);
        out["blocks"] = *c.construction.points.blocks;
        out["k"] = c.construction.k;
        out["certified_up_to"] = c.certified_up_to;
        out["passed"] = c.certificate.passed();
        if (c.certified_up_to == n) out["count"] = to_int(c.certificate.count);
        return out;
      },
      py::arg("d"), py::arg("m"), py::arg("n"));
  m.def("defense_number", &defense_number, py::arg("d"), py::arg("m"));
  m.def(
      "growth_base", [](int d, int mm, unsigned precision) { return enclosure(growth_base(d, mm, precision)); },
      py::arg("d"), py::arg("m"), py::arg("precision") = 64);
  m.def(
      "theorem2_bound",
      [](int d, int mm, int n, unsigned precision) { return enclosure(theorem2_bound(d, mm, n, precision)); },
      py::arg("d"), py::arg("m"), py::arg("n"), py::arg("precision") = 64);
  m.def("theorem1_m", &theorem1_m, py::arg("d"));
  m.def(
      "optimal_m", [](int d, int limit) { return optimal_m(d, limit).m_star; }, py::arg("d"), py::arg("search_limit"));
  m.def(
      "corollary_epsilon", [](int d, unsigned precision) { return enclosure(corollary_epsilon(d, precision)); },
      py::arg("d"), py::arg("precision") = 64);
  m.def(
      "render_svg",
      [](const py::sequence& pts, int axis_x, int axis_y, int dim) {
        PlotOptions o;
        o.axis_x = axis_x;
        o.axis_y = axis_y;
        return render_svg(to_points(pts, dim), o);
      },
      py::arg("points"), py::arg("axis_x") = 0, py::arg("axis_y") = 1, py::arg("dim") = 0);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_suite(suite, seed)) {
          py::dict d;
          d["id"] = r.id;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["anchor"] = r.anchor;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 0);
}
