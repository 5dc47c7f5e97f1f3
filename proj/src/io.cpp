#include "geocover/io.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "geocover/disk.hpp"
#include "geocover/errors.hpp"

namespace geocover {

ProblemInstance parse_instance(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);  // throws on malformed input
    if (!doc.is_object() || !doc.contains("vertices"))
        throw std::runtime_error("instance: missing \"vertices\"");
    const auto& vs = doc.at("vertices");
    if (!vs.is_array()) throw std::runtime_error("instance: \"vertices\" must be an array");

    std::vector<Point2> raw;
    for (const auto& v : vs) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::runtime_error("instance: each vertex must be [x, y]");
        raw.push_back({v[0].get<double>(), v[1].get<double>()});
    }

    double radius = 1.0;
    if (doc.contains("radius")) {
        if (!doc.at("radius").is_number()) throw std::runtime_error("instance: bad \"radius\"");
        radius = doc.at("radius").get<double>();
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::runtime_error("instance: \"radius\" must be > 0");
    }

    std::vector<Point2> scaled;
    for (const Point2& p : raw) scaled.push_back(p / radius);
    return ProblemInstance{std::move(raw), radius, SimplePolygon::validate(scaled)};
}

std::string emit_instance(const ProblemInstance& inst) {
    nlohmann::ordered_json doc;
    auto& vs = doc["vertices"] = nlohmann::ordered_json::array();
    for (const Point2& p : inst.raw_vertices) vs.push_back({p.x, p.y});
    doc["radius"] = inst.radius;
    return doc.dump();
}

std::string emit_solution_json(const ProblemInstance& inst, const std::vector<Point2>& centers,
                               long long sum_q, const CoverageReport* report) {
    double R = inst.radius;
    nlohmann::ordered_json doc;
    auto& cs = doc["centers"] = nlohmann::ordered_json::array();
    for (const Point2& c : centers) cs.push_back({c.x * R, c.y * R});
    doc["count"] = centers.size();
    doc["sum_q"] = sum_q;
    doc["verified"] = report != nullptr && report->covered();
    auto& gaps = doc["gaps"] = nlohmann::ordered_json::array();
    if (report) {
        for (const CoverageGap& g : report->gaps) {
            Point2 a = g.start.position(inst.polygon), b = g.end.position(inst.polygon);
            gaps.push_back({{"start", {a.x * R, a.y * R}},
                            {"end", {b.x * R, b.y * R}},
                            {"excess", g.max_excess * R}});
        }
    }
    return doc.dump(2) + "\n";
}

std::string emit_solution_svg(const ProblemInstance& inst, const PathEngine& engine,
                              const std::vector<Point2>& centers) {
    double R = inst.radius;
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Point2& p : inst.raw_vertices) {
        xlo = std::min(xlo, p.x - R);
        xhi = std::max(xhi, p.x + R);
        ylo = std::min(ylo, p.y - R);
        yhi = std::max(yhi, p.y + R);
    }
    double w = xhi - xlo, h = yhi - ylo;
    double stroke = 0.004 * std::max(w, h);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xlo << " " << -yhi << " "
        << w << " " << h << "\">\n";
    // y grows upward in the model: emit all points with negated y.
    auto path_of = [&](const std::vector<Point2>& pts, bool close) {
        std::ostringstream d;
        for (size_t i = 0; i < pts.size(); ++i)
            d << (i == 0 ? "M" : "L") << pts[i].x * R << " " << -pts[i].y * R << " ";
        if (close) d << "Z";
        return d.str();
    };

    std::vector<Point2> outline;
    for (const Point2& p : engine.polygon().vertices()) outline.push_back(p);
    svg << "<path d=\"" << path_of(outline, true)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";

    for (const Point2& c : centers) {
        GeodesicDisk disk = disk_boundary(engine, c);
        std::vector<Point2> loop = disk_polyline(engine.polygon(), disk, 1e-3);
        svg << "<path d=\"" << path_of(loop, true)
            << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"" << stroke * 0.6
            << "\"/>\n";
        svg << "<circle cx=\"" << c.x * R << "\" cy=\"" << -c.y * R << "\" r=\"" << 2.0 * stroke
            << "\" fill=\"crimson\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

std::vector<Point2> star_polygon(int n, std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> rad(0.55 * radius, radius);
    std::vector<double> angles(n);
    for (auto& a : angles) a = ang(rng);
    std::sort(angles.begin(), angles.end());
    for (int i = 1; i < n; ++i)
        if (angles[i] - angles[i - 1] < 1e-3) angles[i] = angles[i - 1] + 1e-3;
    std::vector<Point2> vs(n);
    for (int i = 0; i < n; ++i) {
        double r = rad(rng);
        vs[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
    }
    return vs;
}

std::vector<Point2> walk_polygon(int n, std::mt19937_64& rng) {
    // Jitter a regular polygon; shrink the jitter until validation passes.
    double R = 1.0 + n / 10.0;
    double spacing = 2.0 * R * std::sin(M_PI / n);
    std::vector<Point2> base(n);
    for (int i = 0; i < n; ++i) {
        double a = -2.0 * M_PI * i / n;
        base[i] = {R * std::cos(a), R * std::sin(a)};
    }
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> jx(n), jy(n);
    for (int i = 0; i < n; ++i) {
        jx[i] = u(rng);
        jy[i] = u(rng);
    }
    for (double amp = 0.45 * spacing;; amp *= 0.5) {
        std::vector<Point2> vs(n);
        for (int i = 0; i < n; ++i) vs[i] = {base[i].x + amp * jx[i], base[i].y + amp * jy[i]};
        try {
            SimplePolygon::validate(vs);
            return vs;
        } catch (const ValidationError&) {
            if (amp < 1e-6 * spacing) return base;
        }
    }
}

std::vector<Point2> corridor_polygon(int n, std::mt19937_64& rng) {
    // Comb with long thin teeth: perimeter / vertex-count >= 20.
    int teeth = std::max(1, (n - 4) / 4);
    double height = 10.5 * n / teeth;
    std::uniform_real_distribution<double> u(0.9, 1.0);
    std::vector<Point2> vs;
    double base_h = 0.4;
    vs.push_back({0.0, 0.0});
    for (int t = 0; t < teeth; ++t) {
        double x0 = 2.0 * t, x1 = x0 + 1.0;
        double h = height * u(rng);
        vs.push_back({x0, h});
        vs.push_back({x1, h});
        if (t + 1 < teeth) {
            vs.push_back({x1, base_h});
            vs.push_back({x1 + 1.0, base_h});
        }
    }
    vs.push_back({2.0 * (teeth - 1) + 1.0, 0.0});
    return vs;
}

} // namespace

std::vector<Point2> generate_random_polygon(int n, unsigned seed, ShapeClass shape) {
    std::mt19937_64 rng(seed);
    switch (shape) {
        case ShapeClass::Star: return star_polygon(n, rng, 1.0 + n / 12.0);
        case ShapeClass::Walk: return walk_polygon(n, rng);
        case ShapeClass::Corridor: return corridor_polygon(n, rng);
    }
    return {};
}

} // namespace geocover
