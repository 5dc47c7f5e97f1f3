#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "geocover/greedy.hpp"
#include "geocover/io.hpp"
#include "test_fixtures.hpp"

using namespace geocover;
using namespace geocover::testing;

namespace {

int run_cover(const std::string& args) {
    std::string cmd = std::string(COVER_BIN) + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "/tmp/geocover_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("parse_instance") {
    auto inst = parse_instance(R"({"vertices": [[0,0],[0,1],[1,1],[1,0]], "radius": 1})");
    CHECK(inst.radius == 1.0);
    CHECK(inst.polygon.size() == 4);
    CHECK(inst.polygon.perimeter() == doctest::Approx(4.0));

    // radius 2 scales everything down by half internally.
    auto thin = parse_instance(R"({"vertices": [[0,0],[0,8],[0.1,8],[0.1,0]], "radius": 2})");
    CHECK(thin.radius == 2.0);
    CHECK(thin.polygon.perimeter() == doctest::Approx((8.0 + 0.1) * 2.0 / 2.0));

    CHECK_THROWS(parse_instance(R"({"radius": 1})"));
    CHECK_THROWS(parse_instance("not json"));
    CHECK_THROWS(parse_instance(R"({"vertices": [[0,0],[0,1]]})"));
    CHECK_THROWS(parse_instance(R"({"vertices": [[0,0],[0,1],[1,1],[1,0]], "radius": 0})"));
}

TEST_CASE("instance round-trip is a fixpoint") {
    std::string text = R"({"vertices": [[0,0],[0,2],[1,2],[1,1],[2,1],[2,0]], "radius": 1.5})";
    auto once = parse_instance(text);
    auto twice = parse_instance(emit_instance(once));
    CHECK(emit_instance(once) == emit_instance(twice));
    CHECK(twice.radius == once.radius);
    REQUIRE(twice.raw_vertices.size() == once.raw_vertices.size());
    for (size_t i = 0; i < once.raw_vertices.size(); ++i)
        CHECK(dist(once.raw_vertices[i], twice.raw_vertices[i]) == 0.0);
}

TEST_CASE("scaling law: radius R equals scaled-unit solve rescaled by R") {
    std::string raw = R"({"vertices": [[0,0],[0,0.2],[6,0.2],[6,0]], "radius": 2})";
    auto inst = parse_instance(raw);
    PathEngine scaled_engine(inst.polygon);
    CoverSolution scaled_sol = contiguous_greedy(scaled_engine, 0);

    auto unit = parse_instance(R"({"vertices": [[0,0],[0,0.1],[3,0.1],[3,0]]})");
    PathEngine unit_engine(unit.polygon);
    CoverSolution unit_sol = contiguous_greedy(unit_engine, 0);

    REQUIRE(scaled_sol.k == unit_sol.k);
    for (int i = 0; i < scaled_sol.k; ++i)
        CHECK(dist(scaled_sol.centers[i], unit_sol.centers[i]) < 1e-9);
}

TEST_CASE("emit_solution_json: stable key order, input units") {
    auto inst = parse_instance(R"({"vertices": [[0,0],[0,2],[2,2],[2,0]], "radius": 2})");
    PathEngine engine(inst.polygon);
    auto report = verify_coverage(engine, {{0.5, 0.5}});
    std::string json = emit_solution_json(inst, {{0.5, 0.5}}, 7, &report);
    // Center scaled back to input units (0.5 * 2 = 1).
    CHECK(json.find("1.0") != std::string::npos);
    CHECK(json.find("\"count\": 1") != std::string::npos);
    CHECK(json.find("\"sum_q\": 7") != std::string::npos);
    CHECK(json.find("\"verified\": true") != std::string::npos);
    size_t c = json.find("\"centers\""), k = json.find("\"count\""), q = json.find("\"sum_q\"");
    size_t v = json.find("\"verified\""), g = json.find("\"gaps\"");
    CHECK(c < k);
    CHECK(k < q);
    CHECK(q < v);
    CHECK(v < g);
}

TEST_CASE("emit_solution_svg renders outline, disks, and dots") {
    auto inst = parse_instance(R"({"vertices": [[0,0],[0,1],[1,1],[1,0]]})");
    PathEngine engine(inst.polygon);
    std::string svg = emit_solution_svg(inst, engine, {{0.5, 0.5}});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("circle") != std::string::npos);
    // outline + one disk boundary
    size_t paths = 0;
    for (size_t pos = 0; (pos = svg.find("<path", pos)) != std::string::npos; ++pos) ++paths;
    CHECK(paths == 2);
}

TEST_CASE("generate_random_polygon: valid, deterministic, class properties") {
    for (auto shape : {ShapeClass::Star, ShapeClass::Walk, ShapeClass::Corridor}) {
        auto a = generate_random_polygon(16, 7, shape);
        auto b = generate_random_polygon(16, 7, shape);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(dist(a[i], b[i]) == 0.0);
        auto c = generate_random_polygon(16, 8, shape);
        bool differs = c.size() != a.size();
        for (size_t i = 0; !differs && i < a.size(); ++i) differs = dist(a[i], c[i]) > 0;
        CHECK(differs);
        CHECK_NOTHROW(SimplePolygon::validate(a));
    }

    auto big = SimplePolygon::validate(generate_random_polygon(64, 7, ShapeClass::Corridor));
    CHECK(big.perimeter() / big.size() >= 20.0);
}

TEST_CASE("cover CLI: exit codes and outputs") {
    std::string sq = temp_file("sq.json", R"({"vertices": [[0,0],[0,1],[1,1],[1,0]]})");
    CHECK(run_cover(sq + " --verify") == 0);
    CHECK(run_cover(sq + " --algorithm corridor --verify") == 0);

    std::string out = "/tmp/geocover_test_out.json";
    std::string svg = "/tmp/geocover_test_out.svg";
    std::remove(out.c_str());
    std::remove(svg.c_str());
    CHECK(run_cover(sq + " --verify --out " + out + " --svg " + svg) == 0);
    CHECK(std::ifstream(out).good());
    CHECK(std::ifstream(svg).good());
    auto parsed = [&] {
        std::ifstream in(out);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }();
    CHECK(parsed.find("\"verified\": true") != std::string::npos);

    CHECK(run_cover("/tmp/geocover_no_such_file.json") == 2);
    std::string bad = temp_file("bad.json", R"({"radius": 1})");
    CHECK(run_cover(bad) == 2);
    std::string bowtie = temp_file("bowtie.json", R"({"vertices": [[0,0],[1,1],[1,0],[0,1]]})");
    CHECK(run_cover(bowtie) == 2);

    CHECK(run_cover(sq + " --opt-brute --grid 0.1") == 0);
    CHECK(run_cover("gen:star:10 --seed 3 --verify") == 0);
}
