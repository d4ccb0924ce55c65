#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ghzsym/geometry.hpp"
#include "ghzsym/io.hpp"
#include "ghzsym/plot.hpp"
#include "ghzsym/symmetry.hpp"
#include "ghzsym/witness.hpp"

namespace {

using namespace ghzsym;

const double kSqrt3 = std::sqrt(3.0);
const double kYMin = -1.0 / (4.0 * kSqrt3);
const double kYMax = kSqrt3 / 4.0;

/// Coordinates quoted to a few decimals often land a hair outside the
/// triangle; snap them back when they are within 1e-6 of it.
SymCoords snap_coords(double x, double y) {
    SymCoords c{x, y};
    if (in_triangle(c)) return c;
    const double cy = std::clamp(y, kYMin, kYMax);
    const double half = kSqrt3 * cy / 2.0 + 0.125;
    const double cx = std::clamp(x, -half, half);
    if (std::abs(cx - x) <= 1e-6 && std::abs(cy - y) <= 1e-6) return SymCoords{cx, cy};
    return c; // out of reach; let the library report it
}

void emit(const JsonWriter& report) { std::cout << report.str() << "\n"; }

struct EndpointArgs {
    std::string path;
    double x = 0.0;
    double y = 0.0;
    bool has_x = false;
    bool has_y = false;
};

SymCoords resolve_endpoint(const EndpointArgs& args, SymCoords fallback, const char* name) {
    if (!args.path.empty()) {
        if (args.has_x || args.has_y)
            throw Error(Errc::InvalidArgument,
                        std::string(name) + ": give a matrix file or coordinates, not both");
        return twirl_coordinates(load_matrix_file(args.path).state);
    }
    if (args.has_x != args.has_y)
        throw Error(Errc::InvalidArgument, std::string(name) + ": need both --" + name +
                                               "-x and --" + name + "-y");
    if (!args.has_x) return fallback;
    return snap_coords(args.x, args.y);
}

SloccClass class_from_flag(const std::string& flag) {
    if (flag == "entanglement") return SloccClass::Biseparable;
    if (flag == "genuine") return SloccClass::WClass;
    if (flag == "ghz") return SloccClass::GhzClass;
    throw Error(Errc::InvalidArgument, "unknown class " + flag);
}

void run_twirl(const std::string& input, int mc_samples, unsigned long long seed) {
    const LoadedMatrix loaded = load_matrix_file(input);
    SymCoords c;
    if (mc_samples > 0) {
        c = twirl_coordinates(sampled_twirl(loaded.state, mc_samples, seed));
    } else {
        c = twirl_coordinates(loaded.state);
    }
    JsonWriter report;
    if (!loaded.label.empty()) report.field("label", loaded.label);
    report.field("x", c.x)
        .field("y", c.y)
        .field("class", slocc_name(classify(c)))
        .field("ppt", is_ppt(c));
    emit(report);
}

void run_classify(double x, double y) {
    const SymCoords c = snap_coords(x, y);
    JsonWriter report;
    report.field("x", c.x)
        .field("y", c.y)
        .field("class", slocc_name(classify(c)))
        .field("ppt", is_ppt(c))
        .field("full_rank", is_full_rank(c));
    emit(report);
}

void run_witness_optimal(const EndpointArgs& noise, const EndpointArgs& target,
                         const std::string& class_flag) {
    const SymCoords noise_c = resolve_endpoint(noise, SymCoords{0.0, 0.0}, "noise");
    const SymCoords target_c = resolve_endpoint(target, SymCoords{0.5, kYMax}, "target");
    const SloccClass target_class = class_from_flag(class_flag);

    const MixingLine line{noise_c, target_c};
    const OptimalWitnessResult result = optimal_witness_for_noise(line, target_class);
    const Line zl = zero_line(result.witness);

    const double coeffs[3] = {result.witness.a, result.witness.b, result.witness.c};
    const double line_coeffs[3] = {zl.alpha, zl.beta, zl.gamma};
    JsonWriter report;
    report.field("noise_x", noise_c.x)
        .field("noise_y", noise_c.y)
        .field("target_x", target_c.x)
        .field("target_y", target_c.y)
        .field("class", class_flag)
        .field("witness", coeffs, 3)
        .field("threshold", result.threshold)
        .field("zero_line", line_coeffs, 3);
    if (target_class == SloccClass::GhzClass)
        report.field("curve_parameter", result.curve_parameter);
    emit(report);
}

void run_witness_eval(double a, double b, double c, const EndpointArgs& state) {
    const Witness w{a, b, c};
    if (!(a + (b + c) / 8.0 > 0.0))
        throw Error(Errc::SignConvention,
                    "witness must be positive at the maximally mixed state");

    double value;
    JsonWriter report;
    const double coeffs[3] = {a, b, c};
    report.field("witness", coeffs, 3);
    if (!state.path.empty()) {
        if (state.has_x || state.has_y)
            throw Error(Errc::InvalidArgument, "give a matrix file or coordinates, not both");
        const LoadedMatrix loaded = load_matrix_file(state.path);
        if (!loaded.label.empty()) report.field("label", loaded.label);
        value = expectation(to_matrix(w), loaded.state);
    } else {
        if (!state.has_x || !state.has_y)
            throw Error(Errc::InvalidArgument, "need --input or both --x and --y");
        const SymCoords coords = snap_coords(state.x, state.y);
        if (!in_triangle(coords))
            throw Error(Errc::OutsideTriangle, "coordinates are not in the triangle");
        report.field("x", coords.x).field("y", coords.y);
        value = expectation_sym(w, coords);
    }
    report.field("expectation", value).field("detected", value < 0.0);
    emit(report);
}

void run_boundary(int samples, const std::string& format, const std::string& out) {
    if (samples < 2) throw Error(Errc::InvalidArgument, "need --samples >= 2");
    if (format != "csv") throw Error(Errc::InvalidArgument, "unsupported format " + format);

    std::ostringstream csv;
    csv << "v,x,y\n";
    char buf[128];
    for (int k = 0; k < samples; ++k) {
        const double v = -1.0 + 2.0 * k / (samples - 1);
        const SymCoords b = boundary_point(v);
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", v, b.x, b.y);
        csv << buf;
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream file(out);
        if (!file || !(file << csv.str()).flush())
            throw Error(Errc::IoFailure, "cannot write " + out);
    }
}

void run_plot(const std::string& out, const EndpointArgs& marker, std::optional<double> wa,
              std::optional<double> wb, std::optional<double> wc, bool pseudo_pure,
              int curve_samples) {
    PlotOptions opts;
    opts.pseudo_pure = pseudo_pure;
    opts.curve_samples = curve_samples;
    if (marker.has_x != marker.has_y)
        throw Error(Errc::InvalidArgument, "marker needs both --x and --y");
    if (marker.has_x) opts.markers.push_back(snap_coords(marker.x, marker.y));
    const int witness_flags = int(wa.has_value()) + int(wb.has_value()) + int(wc.has_value());
    if (witness_flags != 0 && witness_flags != 3)
        throw Error(Errc::InvalidArgument, "witness overlay needs all of --a, --b, --c");
    if (witness_flags == 3) opts.lines.push_back(zero_line(Witness{*wa, *wb, *wc}));

    const std::string svg = render_svg(opts);
    std::ofstream file(out);
    if (!file || !(file << svg).flush()) throw Error(Errc::IoFailure, "cannot write " + out);
}

int exit_code(Errc code) {
    switch (code) {
        case Errc::NoCrossing:
        case Errc::AmbiguousCrossing:
            return 2;
        default:
            return 1;
    }
}

int report_error(const Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(e.code_name()) + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    JsonWriter err;
    err.field("error", e.code_name()).field("message", message);
    std::cerr << err.str() << "\n";
    return exit_code(e.code());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ-symmetric three-qubit state classification and witness construction"};
    app.require_subcommand(1);

    auto* twirl = app.add_subcommand("twirl", "Symmetrize a density matrix and classify it");
    std::string twirl_input;
    int twirl_mc = 0;
    unsigned long long twirl_seed = 0;
    twirl->add_option("--input", twirl_input, "matrix JSON file")->required();
    twirl->add_option("--mc-samples", twirl_mc, "Monte Carlo group samples (0 = exact average)");
    twirl->add_option("--seed", twirl_seed, "Monte Carlo seed");

    auto* classify_cmd = app.add_subcommand("classify", "Classify triangle coordinates");
    double cx = 0.0, cy = 0.0;
    classify_cmd->add_option("--x", cx, "x coordinate")->required();
    classify_cmd->add_option("--y", cy, "y coordinate")->required();

    auto* optimal = app.add_subcommand("witness-optimal",
                                       "Optimal witness for a noise-to-target mixing line");
    EndpointArgs noise, target;
    std::string class_flag = "ghz";
    optimal->add_option("--noise", noise.path, "noise matrix JSON file");
    optimal->add_option("--noise-x", noise.x, "noise x coordinate");
    optimal->add_option("--noise-y", noise.y, "noise y coordinate");
    optimal->add_option("--target", target.path, "target matrix JSON file");
    optimal->add_option("--target-x", target.x, "target x coordinate");
    optimal->add_option("--target-y", target.y, "target y coordinate");
    optimal->add_option("--class", class_flag, "entanglement | genuine | ghz");

    auto* eval = app.add_subcommand("witness-eval", "Evaluate a witness on a state");
    double wa = 0.0, wb = 0.0, wc = 0.0;
    EndpointArgs state;
    eval->add_option("--a", wa, "identity coefficient")->required();
    eval->add_option("--b", wb, "GHZ_+ projector coefficient")->required();
    eval->add_option("--c", wc, "GHZ_- projector coefficient")->required();
    eval->add_option("--input", state.path, "matrix JSON file");
    eval->add_option("--x", state.x, "state x coordinate");
    eval->add_option("--y", state.y, "state y coordinate");

    auto* boundary = app.add_subcommand("boundary", "Sample the W/GHZ boundary curve");
    int samples = 201;
    std::string format = "csv";
    std::string boundary_out;
    boundary->add_option("--samples", samples, "number of samples (>= 2)");
    boundary->add_option("--format", format, "output format (csv)");
    boundary->add_option("--out", boundary_out, "output file (default stdout)");

    auto* plot = app.add_subcommand("plot", "Render the class diagram as SVG");
    std::string plot_out;
    EndpointArgs marker;
    std::optional<double> pa, pb, pc;
    bool pseudo_pure = false;
    int curve_samples = 512;
    plot->add_option("--out", plot_out, "output SVG file")->required();
    plot->add_option("--x", marker.x, "marker x coordinate");
    plot->add_option("--y", marker.y, "marker y coordinate");
    plot->add_option("--a", pa, "witness overlay identity coefficient");
    plot->add_option("--b", pb, "witness overlay GHZ_+ coefficient");
    plot->add_option("--c", pc, "witness overlay GHZ_- coefficient");
    plot->add_flag("--pseudo-pure", pseudo_pure, "overlay the pseudo-pure mixing line");
    plot->add_option("--curve-samples", curve_samples, "curve samples (>= 512 used)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        JsonWriter err;
        err.field("error", "InvalidArgument").field("message", e.what());
        std::cerr << err.str() << "\n";
        return 1;
    }

    noise.has_x = optimal->count("--noise-x") > 0;
    noise.has_y = optimal->count("--noise-y") > 0;
    target.has_x = optimal->count("--target-x") > 0;
    target.has_y = optimal->count("--target-y") > 0;
    state.has_x = eval->count("--x") > 0;
    state.has_y = eval->count("--y") > 0;
    marker.has_x = plot->count("--x") > 0;
    marker.has_y = plot->count("--y") > 0;

    try {
        if (*twirl) run_twirl(twirl_input, twirl_mc, twirl_seed);
        if (*classify_cmd) run_classify(cx, cy);
        if (*optimal) run_witness_optimal(noise, target, class_flag);
        if (*eval) run_witness_eval(wa, wb, wc, state);
        if (*boundary) run_boundary(samples, format, boundary_out);
        if (*plot) run_plot(plot_out, marker, pa, pb, pc, pseudo_pure, curve_samples);
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        JsonWriter err;
        err.field("error", "InvalidArgument").field("message", e.what());
        std::cerr << err.str() << "\n";
        return 1;
    }
    return 0;
}
