#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "geocover/corridor.hpp"
#include "geocover/errors.hpp"
#include "geocover/greedy.hpp"
#include "geocover/io.hpp"
#include "geocover/verify.hpp"

using namespace geocover;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitNumerical = 4;

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    out << data;
    return static_cast<bool>(out);
}

// Inputs of the form gen:star:N, gen:walk:N, gen:corridor:N are generated
// with --seed instead of read from disk.
bool parse_gen_spec(const std::string& input, unsigned seed, std::string& text) {
    if (input.rfind("gen:", 0) != 0) return false;
    auto rest = input.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::runtime_error("expected gen:CLASS:N");
    std::string cls = rest.substr(0, colon);
    int n = std::stoi(rest.substr(colon + 1));
    ShapeClass shape;
    if (cls == "star")
        shape = ShapeClass::Star;
    else if (cls == "walk")
        shape = ShapeClass::Walk;
    else if (cls == "corridor")
        shape = ShapeClass::Corridor;
    else
        throw std::runtime_error("unknown shape class: " + cls);
    auto vs = generate_random_polygon(n, seed, shape);
    std::ostringstream doc;
    doc << "{\"vertices\": [";
    for (size_t i = 0; i < vs.size(); ++i)
        doc << (i ? ", " : "") << "[" << vs[i].x << ", " << vs[i].y << "]";
    doc << "], \"radius\": 1}";
    text = doc.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Covers a simple polygon's boundary with geodesic disks of the given sensor radius.\n"
        "Internally coordinates are scaled by 1/radius so disks are unit; all output is in\n"
        "input units. INPUT is a JSON file {\"vertices\": [[x,y],...], \"radius\": r} or a\n"
        "generator spec gen:{star|walk|corridor}:N used together with --seed."};

    std::string input, out_path, svg_path;
    std::string algorithm = "greedy";
    int start_vertex = 0;
    double corridor_threshold = 2.5;
    double tolerance = 1e-7;
    bool verify = false, opt_brute = false;
    double grid = 0.05;
    unsigned seed = 1;

    app.add_option("input", input, "input instance (JSON file or gen:CLASS:N)")->required();
    app.add_option("--algorithm", algorithm, "covering algorithm")
        ->check(CLI::IsMember({"greedy", "corridor"}));
    app.add_option("--start-vertex", start_vertex, "greedy start vertex");
    app.add_option("--corridor-threshold", corridor_threshold, "min axis-edge length (> 2)");
    app.add_option("--tolerance", tolerance, "coverage verification tolerance");
    app.add_flag("--verify", verify, "verify coverage; exit 3 on gaps");
    app.add_flag("--opt-brute", opt_brute, "report the brute-force OPT bracket instead");
    app.add_option("--grid", grid, "brute-force candidate grid resolution");
    app.add_option("--svg", svg_path, "write an SVG render");
    app.add_option("--out", out_path, "write the JSON solution (default: stdout)");
    app.add_option("--seed", seed, "seed for gen: inputs");
    CLI11_PARSE(app, argc, argv);

    ProblemInstance inst{{}, 1.0, SimplePolygon::validate({{0, 0}, {0, 1}, {1, 0}})};
    try {
        std::string text;
        if (!parse_gen_spec(input, seed, text)) {
            std::ifstream in(input, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read " << input << "\n";
                return kExitInput;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        inst = parse_instance(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    PathEngine engine(inst.polygon);

    std::vector<Point2> centers;
    long long sum_q = 0;
    try {
        if (opt_brute) {
            BruteForceOptions opts;
            opts.center_grid_res = grid;
            PackingBound lb = packing_lower_bound(engine);
            auto opt = brute_force_opt(engine, opts);
            std::cerr << "packing lower bound: " << lb.count << "\n";
            if (opt) {
                std::cerr << "brute-force upper bound: " << opt->count << "\n";
                centers = opt->centers;
            } else {
                std::cerr << "brute-force upper bound: > " << opts.k_max << " (gave up)\n";
            }
        } else if (algorithm == "greedy") {
            CoverSolution sol = contiguous_greedy(engine, start_vertex);
            centers = sol.centers;
            sum_q = sol.sum_q;
        } else {
            CoverSolution sol = large_perimeter_cover(engine, corridor_threshold);
            centers = sol.centers;
        }
    } catch (const NumericalCertificationFailure& e) {
        std::cerr << "numerical certification failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    CoverageReport report;
    if (verify) report = verify_coverage(engine, centers, tolerance);

    std::string json = emit_solution_json(inst, centers, sum_q, verify ? &report : nullptr);
    if (out_path.empty()) {
        std::cout << json;
    } else if (!write_file(out_path, json)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInput;
    }
    if (!svg_path.empty() && !write_file(svg_path, emit_solution_svg(inst, engine, centers))) {
        std::cerr << "error: cannot write " << svg_path << "\n";
        return kExitInput;
    }

    if (verify && !report.covered()) {
        std::cerr << "verification failed: " << report.gaps.size() << " gap(s), max excess "
                  << report.max_uncovered_excess << "\n";
        return kExitVerification;
    }
    return 0;
}
