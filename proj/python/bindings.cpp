#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geocover/corridor.hpp"
#include "geocover/disk.hpp"
#include "geocover/errors.hpp"
#include "geocover/greedy.hpp"
#include "geocover/io.hpp"
#include "geocover/verify.hpp"

namespace py = pybind11;
using namespace geocover;

namespace {

using PointList = std::vector<std::pair<double, double>>;

SimplePolygon make_polygon(const PointList& vs) {
    std::vector<Point2> pts;
    pts.reserve(vs.size());
    for (auto [x, y] : vs) pts.push_back({x, y});
    return SimplePolygon::validate(pts);
}

PointList to_pairs(const std::vector<Point2>& pts) {
    PointList out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

py::dict solution_dict(const CoverSolution& sol) {
    py::dict d;
    d["centers"] = to_pairs(sol.centers);
    d["count"] = sol.k;
    d["sum_q"] = sol.sum_q;
    return d;
}

} // namespace

PYBIND11_MODULE(_geocover, m) {
    m.doc() = "Geodesic unit-disk boundary covering for simple polygons";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalCertificationFailure>(m, "NumericalCertificationFailure",
                                                          PyExc_RuntimeError);

    m.def(
        "validate_polygon",
        [](const PointList& vs) { return to_pairs(make_polygon(vs).vertices()); },
        py::arg("vertices"),
        "Validates a simple polygon; returns its vertices in clockwise order.");

    m.def(
        "geodesic_distance",
        [](const PointList& vs, std::pair<double, double> u, std::pair<double, double> v) {
            PathEngine engine(make_polygon(vs));
            return engine.distance({u.first, u.second}, {v.first, v.second});
        },
        py::arg("vertices"), py::arg("u"), py::arg("v"),
        "Geodesic distance between two points inside the polygon.");

    m.def(
        "shortest_path",
        [](const PointList& vs, std::pair<double, double> u, std::pair<double, double> v) {
            PathEngine engine(make_polygon(vs));
            return to_pairs(engine.shortest_path({u.first, u.second}, {v.first, v.second}).points);
        },
        py::arg("vertices"), py::arg("u"), py::arg("v"),
        "Polyline of the geodesic shortest path between two interior points.");

    m.def(
        "disk_boundary",
        [](const PointList& vs, std::pair<double, double> center, double sagitta) {
            SimplePolygon poly = make_polygon(vs);
            PathEngine engine(poly);
            return to_pairs(
                disk_polyline(poly, ::disk_boundary(engine, {center.first, center.second}),
                              sagitta));
        },
        py::arg("vertices"), py::arg("center"), py::arg("sagitta") = 1e-3,
        "Closed polyline of the geodesic unit disk boundary around center.");

    m.def(
        "greedy_cover",
        [](const PointList& vs, int start_vertex) {
            PathEngine engine(make_polygon(vs));
            return solution_dict(contiguous_greedy(engine, start_vertex));
        },
        py::arg("vertices"), py::arg("start_vertex") = 0,
        "ContiguousGreedy boundary cover with geodesic unit disks.");

    m.def(
        "corridor_cover",
        [](const PointList& vs, double c_threshold) {
            PathEngine engine(make_polygon(vs));
            return solution_dict(large_perimeter_cover(engine, c_threshold));
        },
        py::arg("vertices"), py::arg("c_threshold") = 2.5,
        "Large-perimeter corridor cover.");

    m.def(
        "verify_cover",
        [](const PointList& vs, const PointList& centers, double tol) {
            PathEngine engine(make_polygon(vs));
            std::vector<Point2> cs;
            for (auto [x, y] : centers) cs.push_back({x, y});
            CoverageReport report = verify_coverage(engine, cs, tol);
            py::dict d;
            d["covered"] = report.covered();
            d["gap_count"] = report.gaps.size();
            d["max_excess"] = report.max_uncovered_excess;
            return d;
        },
        py::arg("vertices"), py::arg("centers"), py::arg("tol") = 1e-7,
        "Exact coverage verification of the polygon boundary.");

    m.def(
        "packing_lower_bound",
        [](const PointList& vs) {
            PathEngine engine(make_polygon(vs));
            return ::packing_lower_bound(engine).count;
        },
        py::arg("vertices"), "Lower bound on the optimal number of covering disks.");

    m.def(
        "generate_polygon",
        [](int n, unsigned seed, const std::string& shape) {
            ShapeClass cls;
            if (shape == "star")
                cls = ShapeClass::Star;
            else if (shape == "walk")
                cls = ShapeClass::Walk;
            else if (shape == "corridor")
                cls = ShapeClass::Corridor;
            else
                throw std::invalid_argument("shape must be star, walk, or corridor");
            return to_pairs(generate_random_polygon(n, seed, cls));
        },
        py::arg("n"), py::arg("seed"), py::arg("shape") = "star",
        "Deterministic random simple polygon.");
}
