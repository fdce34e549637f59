// Command-line driver: single experiments via flags, figure presets, and the
// symmetry report, with CSV/SVG output.
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/csv.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/svg.hpp"
#include "qwalk/symmetry.hpp"

namespace {

using namespace qwalk;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

WalkScheme parse_scheme(const std::string& name, double theta, bool theta_set) {
    if (name == "grover") {
        if (theta_set) throw config_error("--theta applies to the alternate walk only");
        return WalkScheme::grover();
    }
    if (name == "alternate") return WalkScheme::alternate(theta);
    if (name == "pauli") {
        if (theta_set) throw config_error("--theta applies to the alternate walk only");
        return WalkScheme::pauli();
    }
    throw config_error("unknown scheme '" + name + "'");
}

NoiseKind parse_noise(const std::string& name, const WalkScheme& scheme) {
    if (name == "none") return NoiseKind::none;
    if (name == "bitflip-axis") return NoiseKind::bitflip_per_axis;
    if (name == "bitflip-step") return NoiseKind::bitflip_per_step;
    if (name == "stateflip") return NoiseKind::stateflip4;
    if (name == "depolarizing")
        return scheme.coin_dim() == 4 ? NoiseKind::depolarizing4 : NoiseKind::depolarizing2;
    if (name == "depolarizing2") return NoiseKind::depolarizing2;
    if (name == "depolarizing4") return NoiseKind::depolarizing4;
    throw config_error("unknown noise '" + name + "'");
}

std::string swap_extension(const std::string& path, const std::string& ext) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

std::string joined_stem(const std::string& stem, const std::string& label,
                        const std::string& ext) {
    return label.empty() ? stem + ext : stem + "_" + label + ext;
}

void report(const std::vector<std::string>& files) {
    for (const std::string& f : files) std::printf("wrote %s\n", f.c_str());
}

int run_preset_command(const std::string& name, const std::string& out, bool want_csv,
                       bool want_svg) {
    const Preset& preset = find_preset(name);
    const std::string stem = out.empty() ? preset.name : swap_extension(out, "");

    std::vector<ResultTable> tables;
    tables.reserve(preset.runs.size());
    for (const PresetRun& run : preset.runs) tables.push_back(run_experiment(run.config));

    std::vector<std::string> files;
    bool any_series = false;
    for (size_t i = 0; i < preset.runs.size(); ++i) {
        const std::string label = preset.runs[i].label;
        if (want_csv)
            for (const std::string& f : emit_csv(tables[i], joined_stem(stem, label, ".csv")))
                files.push_back(f);
        any_series = any_series || !tables[i].series.empty();
        if (want_svg && !tables[i].distributions.empty())
            for (const std::string& f :
                 emit_svg(tables[i], SvgKind::heatmap, joined_stem(stem, label, ".svg")))
                files.push_back(f);
    }
    if (want_svg && any_series) {
        std::vector<LabeledTable> labeled;
        for (size_t i = 0; i < preset.runs.size(); ++i)
            if (!tables[i].series.empty())
                labeled.push_back({preset.runs[i].label, &tables[i]});
        files.push_back(emit_svg_lines(labeled, stem + ".svg"));
    }
    report(files);
    return 0;
}

int run_symmetry_command(const std::string& out) {
    std::vector<SymmetryReport> reports;
    for (const WalkScheme scheme : {WalkScheme::alternate(), WalkScheme::pauli()})
        for (SymmetryReport& r : verify_twostate_symmetry(scheme, 10))
            reports.push_back(std::move(r));
    for (const int k : {3, 23}) reports.push_back(verify_grover_breakdown(k, 5));
    reports.push_back(single_flip_absorption_check(5));

    const std::string path = out.empty() ? "symmetry.csv" : out;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw config_error("cannot write to '" + path + "'");
    file << "check,deviation,tolerance,passed\n";
    bool all_passed = true;
    for (const SymmetryReport& r : reports) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6e,%.6e", r.max_deviation, r.tolerance);
        file << '"' << r.name << "\"," << buf << ',' << (r.passed ? 1 : 0) << '\n';
        all_passed = all_passed && r.passed;
    }
    std::printf("wrote %s (%zu checks, %s)\n", path.c_str(), reports.size(),
                all_passed ? "all passed" : "FAILURES");
    return all_passed ? 0 : 1;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Two-dimensional discrete-time quantum walk simulator"};
    app.set_config("--config", "", "plain key=value file; command-line flags take precedence");

    std::string scheme_name, noise_name = "none", p_list = "0", measure_list, preset_name,
                format_list = "csv", out_path;
    int steps = -1, k = 23;
    double theta = 0.0;
    unsigned seed = 0;

    app.add_option("--scheme", scheme_name, "grover | alternate | pauli");
    app.add_option("--steps", steps, "number of walk steps");
    app.add_option("--noise", noise_name,
                   "none | bitflip-axis | bitflip-step | stateflip | depolarizing");
    app.add_option("--k", k, "flip count for the stateflip channel: 3 | 6 | 23");
    app.add_option("--p", p_list, "noise level or comma list of levels");
    auto* theta_opt = app.add_option("--theta", theta, "coin angle in radians (alternate walk)");
    app.add_option("--measure", measure_list,
                   "comma list of distribution | mid_pp | mid_xy | robustness");
    app.add_option("--preset", preset_name, "figure preset fig1..fig16, or 'symmetry'");
    app.add_option("--format", format_list, "comma list of csv | svg");
    app.add_option("--out", out_path, "output path (stem for multi-file presets)");
    app.add_option("--seed", seed, "reserved; all computations are deterministic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    bool want_csv = false, want_svg = false;
    for (const std::string& f : split_list(format_list)) {
        if (f == "csv")
            want_csv = true;
        else if (f == "svg")
            want_svg = true;
        else
            throw config_error("unknown format '" + f + "'");
    }
    if (!want_csv && !want_svg) throw config_error("no output format selected");

    if (!preset_name.empty()) {
        const bool experiment_flags = !scheme_name.empty() || steps >= 0 ||
                                      noise_name != "none" || p_list != "0" ||
                                      !measure_list.empty() || static_cast<bool>(*theta_opt);
        if (experiment_flags)
            throw config_error("--preset cannot be combined with experiment flags");
        if (preset_name == "symmetry") return run_symmetry_command(out_path);
        return run_preset_command(preset_name, out_path, want_csv, want_svg);
    }

    if (scheme_name.empty()) throw config_error("--scheme is required (or use --preset)");
    if (steps < 0) throw config_error("--steps is required (or use --preset)");
    if (measure_list.empty()) throw config_error("--measure is required (or use --preset)");

    ExperimentConfig config;
    config.scheme = parse_scheme(scheme_name, theta_opt->count() ? theta : WalkScheme{}.theta,
                                 theta_opt->count() > 0);
    config.steps = steps;
    config.noise.kind = parse_noise(noise_name, config.scheme);
    config.noise.k = k;
    config.seed = seed;
    config.p_values.clear();
    for (const std::string& tok : split_list(p_list)) {
        try {
            config.p_values.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw config_error("bad noise level '" + tok + "'");
        }
    }
    config.measures.clear();
    for (const std::string& tok : split_list(measure_list))
        config.measures.push_back(measure_from_string(tok));

    const ResultTable table = run_experiment(config);
    const std::string csv_path = out_path.empty() ? "experiment.csv" : out_path;
    std::vector<std::string> files;
    if (want_csv)
        for (const std::string& f : emit_csv(table, csv_path)) files.push_back(f);
    if (want_svg) {
        const std::string svg_path = swap_extension(csv_path, ".svg");
        if (!table.series.empty())
            for (const std::string& f : emit_svg(table, SvgKind::lines, svg_path))
                files.push_back(f);
        if (!table.distributions.empty())
            for (const std::string& f : emit_svg(
                     table, SvgKind::heatmap,
                     table.series.empty() ? svg_path : swap_extension(csv_path, "_dist.svg")))
                files.push_back(f);
    }
    report(files);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "numerical invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
