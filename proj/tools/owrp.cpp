// Command-line front end: validate / decompose / route / verify / gen / bench.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "owrp/decomposition.hpp"
#include "owrp/generator.hpp"
#include "owrp/io.hpp"
#include "owrp/oracle.hpp"
#include "owrp/path_polygon.hpp"
#include "owrp/route.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUnsupported = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw owrp::Error(owrp::ErrorCode::InvalidArgument, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw owrp::Error(owrp::ErrorCode::InvalidArgument, "cannot write file: " + path);
    out << data;
}

// --seed wins over OWRP_SEED; OWRP_SEED wins over the default.
uint64_t effective_seed(const CLI::Option* seed_opt, uint64_t seed_flag) {
    if (seed_opt->count() > 0) return seed_flag;
    if (const char* env = std::getenv("OWRP_SEED")) return std::strtoull(env, nullptr, 10);
    return seed_flag;
}

const char* class_name(owrp::DualClass c) {
    switch (c) {
        case owrp::DualClass::Monotone: return "Monotone";
        case owrp::DualClass::PathPolygon: return "PathPolygon";
        default: return "Unsupported";
    }
}

int cmd_validate(const std::string& in) {
    owrp::OrthoPolygon p = owrp::parse_polygon(slurp(in));
    std::cout << "ok n=" << p.n() << " area=" << p.area_units()
              << " class=" << class_name(owrp::dual_path_class(p)) << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& in, bool with_partition, const std::string& svg) {
    owrp::OrthoPolygon p = owrp::parse_polygon(slurp(in));
    owrp::Decomposition d = owrp::decompose(p);
    std::cout << "class=" << class_name(d.cls) << " m=" << d.m() << "\n";
    for (const owrp::Rect& r : d.rects)
        std::cout << "rect [" << r.x_left / owrp::kCoordScale << ","
                  << r.x_right / owrp::kCoordScale << "]x["
                  << r.bottom / owrp::kCoordScale << "," << r.top / owrp::kCoordScale
                  << "]\n";
    if (with_partition) {
        if (d.cls != owrp::DualClass::Monotone)
            throw owrp::Error(owrp::ErrorCode::UnsupportedClass,
                              "--partition needs an x-monotone polygon");
        owrp::Partition part = owrp::partition_balanced(d);
        for (const owrp::BalancedSubPolygon& s : part.subs)
            std::cout << "sub rects[" << s.first_rect << ".." << s.last_rect
                      << "] corridor [" << s.m_low / owrp::kCoordScale << ","
                      << s.M / owrp::kCoordScale << "]\n";
    }
    if (!svg.empty()) spill(svg, owrp::render_svg(p, &d, nullptr));
    return d.cls == owrp::DualClass::Unsupported ? kExitUnsupported : kExitOk;
}

int cmd_route(const std::string& in, const std::string& out, bool no_trim,
              const std::string& path_mode, const std::string& svg) {
    owrp::OrthoPolygon p = owrp::parse_polygon(slurp(in));
    const bool trim = !no_trim;
    owrp::OrthoRoute route;
    if (path_mode == "off") {
        route = owrp::route_monotone(p, trim);
    } else if (path_mode == "on") {
        route = owrp::route_path_polygon(p, trim);
    } else {
        owrp::DualClass cls = owrp::dual_path_class(p);
        if (cls == owrp::DualClass::Monotone) route = owrp::route_monotone(p, trim);
        else route = owrp::route_path_polygon(p, trim);  // throws if Unsupported
    }
    owrp::RouteMetrics metrics = owrp::route_metrics(route);
    owrp::RouteFile rf;
    rf.route = route;
    rf.bends = metrics.bends;
    rf.length = owrp::route_length_units(route);
    rf.trimmed = trim;
    owrp::Decomposition d = owrp::decompose(p);
    rf.k = d.cls == owrp::DualClass::Monotone
               ? owrp::partition_balanced(d).k()
               : static_cast<int>(owrp::split_at_reflex(d).pieces.size());
    const std::string data = owrp::emit_route(rf);
    if (out.empty()) std::cout << data;
    else spill(out, data);
    if (!svg.empty()) spill(svg, owrp::render_svg(p, &d, &route));
    return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& route_path, int resolution) {
    owrp::OrthoPolygon p = owrp::parse_polygon(slurp(in));
    owrp::RouteFile rf = owrp::parse_route(slurp(route_path));
    owrp::CoverageReport report;
    try {
        report = owrp::coverage(p, rf.route, resolution);
    } catch (const owrp::Error& e) {
        if (e.code() == owrp::ErrorCode::RouteOutside) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitVerifyFailed;
        }
        throw;
    }
    std::cout << owrp::emit_coverage(report);
    return report.covered ? kExitOk : kExitVerifyFailed;
}

int cmd_gen(const owrp::GenSpec& spec, const std::string& out) {
    owrp::OrthoPolygon p = owrp::generate(spec);
    const std::string data = owrp::emit_polygon(p);
    if (out.empty()) std::cout << data;
    else spill(out, data);
    return kExitOk;
}

int cmd_bench(const std::vector<int64_t>& sizes, uint64_t seed, int repeats) {
    using clock = std::chrono::steady_clock;
    std::cout << "size,median_ns,ns_per_vertex\n";
    std::vector<std::pair<double, double>> points;  // (log n, log median)
    for (int64_t size : sizes) {
        const int columns = static_cast<int>(std::max<int64_t>(1, size / 2));
        owrp::GenSpec spec;
        spec.mode = owrp::GenMode::Monotone;
        spec.columns = columns;
        spec.max_height = 1000;
        spec.seed = seed + static_cast<uint64_t>(size);
        owrp::OrthoPolygon p = owrp::gen_monotone(spec);
        std::vector<int64_t> ns;
        for (int rep = 0; rep < repeats; ++rep) {
            const auto t0 = clock::now();
            owrp::OrthoRoute route = owrp::route_monotone(p, true);
            const auto t1 = clock::now();
            if (route.vertices.empty()) std::abort();  // keep the work observable
            ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        std::sort(ns.begin(), ns.end());
        const int64_t median = ns[ns.size() / 2];
        std::cout << p.n() << ',' << median << ','
                  << static_cast<double>(median) / static_cast<double>(p.n()) << "\n";
        points.emplace_back(std::log(static_cast<double>(p.n())),
                            std::log(static_cast<double>(std::max<int64_t>(median, 1))));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) { sx += x; sy += y; sxx += x * x; sxy += x * y; }
    const double n = static_cast<double>(points.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::cout << "slope," << slope << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-bend orthogonal watchman routes"};
    app.require_subcommand(1);

    std::string in, out, svg, route_path, path_mode = "auto";
    bool with_partition = false, no_trim = false, path_gen = false;
    int resolution = 4, repeats = 5;
    uint64_t seed = 0;
    owrp::GenSpec spec;
    std::vector<int64_t> sizes{1000, 10000, 100000, 1000000};

    CLI::App* validate = app.add_subcommand("validate", "check a polygon file");
    validate->add_option("input", in)->required();

    CLI::App* decompose = app.add_subcommand("decompose", "vertical decomposition");
    decompose->add_option("input", in)->required();
    decompose->add_flag("--partition", with_partition);
    decompose->add_option("--svg", svg);

    CLI::App* route = app.add_subcommand("route", "compute a watchman route");
    route->add_option("input", in)->required();
    route->add_option("-o,--output", out);
    route->add_flag("--no-trim", no_trim);
    route->add_option("--path-mode", path_mode)
        ->check(CLI::IsMember({"auto", "on", "off"}));
    route->add_option("--svg", svg);

    CLI::App* verify = app.add_subcommand("verify", "check route coverage");
    verify->add_option("input", in)->required();
    verify->add_option("route", route_path)->required();
    verify->add_option("--resolution", resolution)->check(CLI::Range(2, 64));

    CLI::App* gen = app.add_subcommand("gen", "generate a polygon");
    gen->add_option("--columns", spec.columns);
    gen->add_option("--max-height", spec.max_height);
    CLI::Option* gen_seed = gen->add_option("--seed", seed);
    gen->add_flag("--path", path_gen);
    gen->add_option("--rects", spec.rects);
    gen->add_option("-o,--output", out);

    CLI::App* bench = app.add_subcommand("bench", "pipeline timing and log-log slope");
    bench->add_option("--sizes", sizes)->delimiter(',');
    CLI::Option* bench_seed = bench->add_option("--seed", seed);
    bench->add_option("--repeats", repeats)->check(CLI::Range(1, 100));

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(in);
        if (decompose->parsed()) return cmd_decompose(in, with_partition, svg);
        if (route->parsed()) return cmd_route(in, out, no_trim, path_mode, svg);
        if (verify->parsed()) return cmd_verify(in, route_path, resolution);
        if (gen->parsed()) {
            spec.mode = path_gen ? owrp::GenMode::Path : owrp::GenMode::Monotone;
            spec.seed = effective_seed(gen_seed, seed);
            return cmd_gen(spec, out);
        }
        if (bench->parsed()) return cmd_bench(sizes, effective_seed(bench_seed, seed), repeats);
    } catch (const owrp::Error& e) {
        std::cerr << "error [" << owrp::error_code_name(e.code()) << "]: " << e.what();
        if (e.index() >= 0) std::cerr << " (index " << e.index() << ")";
        std::cerr << "\n";
        if (e.code() == owrp::ErrorCode::UnsupportedClass) return kExitUnsupported;
        if (e.code() == owrp::ErrorCode::RouteOutside) return kExitVerifyFailed;
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
