#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mft/error.hpp"
#include "mft/solver.hpp"

namespace py = pybind11;

namespace {

std::tuple<long, long, long> as_tuple(const mft::Triple& t) { return {t.i, t.j, t.k}; }

mft::Algo algo_from(const std::string& name) {
  if (auto a = mft::parse_algo(name)) return *a;
  throw py::value_error("algo must be one of linear, logn, quadratic, brute");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum-area all-flush triangle of a convex polygon";

  py::register_exception<mft::Error>(m, "MftError", PyExc_ValueError);

  py::class_<mft::ConvexPolygon>(m, "Polygon")
      .def(py::init([](const std::vector<std::pair<double, double>>& pts) {
             std::vector<mft::Point> v;
             v.reserve(pts.size());
             for (const auto& [x, y] : pts) v.push_back({x, y});
             return mft::ConvexPolygon::validate(std::move(v));
           }),
           py::arg("vertices"), "Validate a convex polygon; counter-clockwise input is reversed.")
      .def("__len__", &mft::ConvexPolygon::size)
      .def_property_readonly("vertices",
                             [](const mft::ConvexPolygon& p) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& v : p.vertices()) out.emplace_back(v.x, v.y);
                               return out;
                             })
      .def_property_readonly("area", &mft::ConvexPolygon::area)
      .def_property_readonly("reversed", &mft::ConvexPolygon::reversed)
      .def("chases", &mft::ConvexPolygon::chases, py::arg("i"), py::arg("j"))
      .def("far_vertex", &mft::ConvexPolygon::far_vertex, py::arg("i"));

  py::class_<mft::Candidate>(m, "Candidate")
      .def_property_readonly("edges", [](const mft::Candidate& c) { return as_tuple(c.triple); })
      .def_readonly("area", &mft::Candidate::area)
      .def_readonly("stable", &mft::Candidate::stable);

  py::class_<mft::SolverReport>(m, "Report")
      .def_property_readonly("algo", [](const mft::SolverReport& r) { return std::string(mft::to_string(r.algo)); })
      .def_property_readonly("edges", [](const mft::SolverReport& r) { return as_tuple(r.mft); })
      .def_readonly("area", &mft::SolverReport::area)
      .def_property_readonly("corners",
                             [](const mft::SolverReport& r) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& p : r.triangle.corners) out.emplace_back(p.x, p.y);
                               return out;
                             })
      .def_readonly("candidates", &mft::SolverReport::candidates)
      .def_property_readonly("iterations", [](const mft::SolverReport& r) { return r.stats.iterations; })
      .def_property_readonly("violations", [](const mft::SolverReport& r) { return r.stats.violations(); });

  m.def(
      "solve",
      [](const mft::ConvexPolygon& poly, const std::string& algo) { return mft::solve_mft(poly, algo_from(algo)); },
      py::arg("polygon"), py::arg("algo") = "linear", "Minimum-area all-flush triangle.");
  m.def(
      "brute_force",
      [](const mft::ConvexPolygon& poly) {
        const auto r = mft::brute_force(poly);
        std::vector<std::tuple<long, long, long>> stable;
        for (const auto& t : r.stable) stable.push_back(as_tuple(t));
        return py::make_tuple(as_tuple(r.mft), r.area, stable);
      },
      py::arg("polygon"), "(mft edges, area, all 3-stable triples) by exhaustive search.");
  m.def("generate_random", &mft::generate_random, py::arg("n"), py::arg("seed"));
  m.def(
      "area_of", [](const mft::ConvexPolygon& p, long i, long j, long k) { return mft::area_of(p, {i, j, k}); },
      py::arg("polygon"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def(
      "is_3stable", [](const mft::ConvexPolygon& p, long i, long j, long k) { return mft::is_3stable(p, {i, j, k}); },
      py::arg("polygon"), py::arg("i"), py::arg("j"), py::arg("k"));
}
