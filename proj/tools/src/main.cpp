#include <array>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equable/diophantine.hpp"
#include "equable/eisenstein.hpp"
#include "equable/figure.hpp"
#include "equable/intmath.hpp"
#include "equable/report.hpp"
#include "equable/search.hpp"
#include "equable/triangle.hpp"

namespace {

using namespace equable;

// Exit codes: 0 success (and route/cross-check agreement), 1 usage or I/O
// error, 2 the independent checks disagree (classify/enumerate routes, or
// verify's exact vs floating-point verdicts).
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_disagreement = 2;

// "a,b" omega-coordinates with integer a, b (e.g. "8,4", "-2,-13").
std::optional<Eisenstein> parse_vertex(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    int64_t a = 0;
    int64_t b = 0;
    const char* begin = text.data();
    const char* mid = begin + comma;
    const char* end = begin + text.size();
    const auto ra = std::from_chars(begin, mid, a);
    if (ra.ec != std::errc{} || ra.ptr != mid) return std::nullopt;
    const auto rb = std::from_chars(mid + 1, end, b);
    if (rb.ec != std::errc{} || rb.ptr != end) return std::nullopt;
    return Eisenstein{a, b};
}

// Exact radical k*sqrt(d) with d squarefree, as text: "4√3", "√2", "7", "0".
std::string exact_sqrt_string(int64_t N) {
    if (N == 0) return "0";
    const int64_t d = squarefree_part(N);
    const int64_t k = integer_sqrt(N / d);
    if (d == 1) return std::to_string(k);
    return (k == 1 ? std::string() : std::to_string(k)) + "√" + std::to_string(d);
}

int cmd_classify(int64_t window, const std::string& format) {
    const ClassificationReport r = run_classification({window});
    if (format == "json")
        std::cout << to_json(r) << "\n";
    else
        std::cout << to_text(r);
    return r.agreement ? exit_ok : exit_disagreement;
}

int cmd_enumerate(int64_t bound, const std::string& format) {
    const EnumerationReport r = run_enumeration(bound);
    if (format == "json")
        std::cout << to_json(r) << "\n";
    else
        std::cout << to_text(r);
    return r.agreement ? exit_ok : exit_disagreement;
}

int cmd_verify(const std::vector<std::string>& args) {
    std::array<Eisenstein, 3> v;
    static constexpr const char* vertex_names[3] = {"A", "B", "C"};
    for (size_t i = 0; i < 3; ++i) {
        const std::optional<Eisenstein> parsed = parse_vertex(args[i]);
        if (!parsed) {
            std::cerr << "error: vertex " << vertex_names[i]
                      << ": expected omega-coordinates \"a,b\" with integer a and b, got \""
                      << args[i] << "\"\n";
            return exit_usage;
        }
        v[i] = *parsed;
    }
    const LatticeTriangle t{v[0], v[1], v[2]};
    std::cout << "A = " << t.A << "   B = " << t.B << "   C = " << t.C << "\n";

    const std::array<int64_t, 3> norms = side_norms(t);
    static constexpr const char* side_names[3] = {"AC", "BC", "AB"};
    bool all_sqrt3 = true;
    int64_t n_sum = 0;
    for (size_t i = 0; i < 3; ++i) {
        std::cout << "side " << side_names[i] << ": squared length " << norms[i];
        const std::optional<int64_t> n =
            norms[i] >= 1 ? sqrt3_side_decomposition(norms[i]) : std::nullopt;
        if (n) {
            std::cout << " = 3·" << *n << "², length " << sqrt3_multiple_string(*n)
                      << "\n";
            n_sum += *n;
        } else {
            all_sqrt3 = false;
            std::cout << ", not of the form 3n², length " << exact_sqrt_string(norms[i])
                      << "\n";
        }
    }

    const int64_t D = area_quanta(t);
    std::cout << "area quanta: D = " << D << "\n";
    if (all_sqrt3)
        std::cout << "perimeter = " << sqrt3_multiple_string(n_sum) << "\n";
    else if (norms[0] == 0 && norms[1] == 0 && norms[2] == 0)
        std::cout << "perimeter = 0\n";
    else
        std::cout << "perimeter = " << exact_sqrt_string(norms[0]) << " + "
                  << exact_sqrt_string(norms[1]) << " + " << exact_sqrt_string(norms[2])
                  << " (not an integer multiple of √3)\n";
    std::cout << "area = " << sqrt3_multiple_string(std::abs(D), 4) << "\n";
    if (D == 0) std::cout << "degenerate: zero area\n";

    const bool exact = is_equable(t);
    std::cout << "equable: " << (exact ? "yes" : "no") << "\n";

    const bool approx = is_equable_float(t, 1e-9);
    if (exact != approx) {
        std::cerr << "cross-check disagreement: exact verdict \"" << (exact ? "yes" : "no")
                  << "\" but the floating-point check says \"" << (approx ? "yes" : "no")
                  << "\"\n";
        return exit_disagreement;
    }
    return exit_ok;
}

int cmd_realize(const std::array<int64_t, 3>& n) {
    const std::array<Sqrt3Length, 3> sides{Sqrt3Length{n[0]}, Sqrt3Length{n[1]},
                                           Sqrt3Length{n[2]}};
    const std::vector<LatticeTriangle> found = realize_sides(sides);
    std::cout << "sides " << sqrt3_multiple_string(n[0]) << ", " << sqrt3_multiple_string(n[1])
              << ", " << sqrt3_multiple_string(n[2]) << ": " << found.size()
              << (found.size() == 1 ? " congruence class" : " congruence classes")
              << " realized with C = 0 (deduplicated up to the 12 lattice symmetries)\n";
    if (found.empty()) {
        std::cout << "no lattice realization with these side lengths\n";
        return exit_ok;
    }
    for (const LatticeTriangle& t : found)
        std::cout << "  A = " << t.A << "   B = " << t.B << "   C = " << t.C
                  << "   [verify args: " << t.A.a << "," << t.A.b << " " << t.B.a << ","
                  << t.B.b << " " << t.C.a << "," << t.C.b << "]\n";
    return exit_ok;
}

int cmd_render(const std::string& out_path, bool no_grid, int64_t range) {
    FigureOptions opts;
    opts.grid = !no_grid;
    opts.coeff_range = range;
    const std::string svg = render_figure_svg(opts);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
        return exit_usage;
    }
    out << svg;
    out.close();
    if (!out) {
        std::cerr << "error: write to \"" << out_path << "\" failed\n";
        return exit_usage;
    }
    std::cout << "wrote " << out_path << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of equable triangles on the Eisenstein lattice"};
    app.require_subcommand(1);

    int64_t window = 300;
    std::string classify_format = "text";
    CLI::App* classify = app.add_subcommand(
        "classify", "Run the Diophantine route against the exhaustive lattice oracle");
    classify->add_option("--window", window, "Oracle window: bound on norm(A) and norm(B)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    classify->add_option("--format", classify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int64_t bound = 1000;
    std::string enumerate_format = "text";
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Enumerate the Diophantine solutions by the reduced and brute-force routes");
    enumerate->add_option("--bound", bound, "Brute-force bound on u <= v <= w")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enumerate->add_option("--format", enumerate_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::vector<std::string> vertex_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check equability of one triangle, vertices in omega-coordinates");
    verify->add_option("vertices", vertex_args, "Vertices A B C, each as \"a,b\" meaning a+bω")
        ->expected(3)
        ->required();

    std::vector<int64_t> side_args;
    CLI::App* realize = app.add_subcommand(
        "realize", "Find lattice triangles with side lengths na√3 nb√3 nc√3");
    realize->add_option("sides", side_args, "Side coefficients na nb nc")
        ->expected(3)
        ->required()
        ->check(CLI::PositiveNumber);

    std::string out_path = "figure.svg";
    bool no_grid = false;
    int64_t range = 24;
    CLI::App* render =
        app.add_subcommand("render", "Write the two classified triangles as an SVG figure");
    render->add_option("--out", out_path, "Output path")->capture_default_str();
    render->add_flag("--no-grid", no_grid, "Omit the lattice dot grid");
    render->add_option("--range", range, "Grid dots span |a|, |b| <= range")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*classify) return cmd_classify(window, classify_format);
        if (*enumerate) return cmd_enumerate(bound, enumerate_format);
        if (*verify) return cmd_verify(vertex_args);
        if (*realize) return cmd_realize({side_args[0], side_args[1], side_args[2]});
        if (*render) return cmd_render(out_path, no_grid, range);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
