#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalk/correlations.hpp"
#include "qwalk/noise.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Measure { distribution, mid_pp, mid_xy, robustness };

const char* to_string(Measure measure);
Measure measure_from_string(const std::string& token);

struct ExperimentConfig {
    WalkScheme scheme;
    int steps = 0;
    NoiseSpec noise;
    std::vector<double> p_values = {0.0};
    std::vector<Measure> measures;
    unsigned seed = 0;  // reserved; the evolution is fully deterministic

    bool wants(Measure m) const;
};

// Per-step correlation values of one noisy run, with the raw mutual
// information split of the particle-position disturbance kept for debugging.
struct CorrelationRecord {
    int step = 0;
    double q_pp = 0.0;
    double q_xy = 0.0;
    double i_total = 0.0;
    double i_classical = 0.0;
};

struct SeriesPoint {
    int step = 0;
    double p = 0.0;
    Measure measure = Measure::mid_pp;
    std::optional<double> value;  // empty only for undefined robustness ratios
};

// Either a set of final-step position distributions (one per noise level) or
// a per-step series table, ordered by (p, step, measure).
struct ResultTable {
    HilbertSpec spec;
    std::vector<std::pair<double, Distribution>> distributions;
    std::vector<SeriesPoint> series;
};

void validate_config(const ExperimentConfig& config);

// Deterministic experiment driver.  Uses the pure-state fast path when every
// noise level is zero and only the distribution is requested; otherwise runs
// the density-operator evolution.
ResultTable run_experiment(const ExperimentConfig& config);

// Multi-level runs concatenate per-level results ordered by noise level;
// duplicate levels are kept.
ResultTable run_sweep(const ExperimentConfig& config);

struct PresetRun {
    std::string label;  // empty for single-run presets
    ExperimentConfig config;
};

struct Preset {
    std::string name;
    std::string description;
    int reference_steps = 0;  // full-scale step count the preset is scaled down from
    std::vector<PresetRun> runs;
};

const std::vector<Preset>& all_presets();
const Preset& find_preset(const std::string& name);

}  // namespace qwalk
