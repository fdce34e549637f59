#include "qwalk/experiment.hpp"

#include <algorithm>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

bool all_noiseless(const ExperimentConfig& config) {
    return std::all_of(config.p_values.begin(), config.p_values.end(),
                       [](double p) { return p == 0.0; });
}

// Per-step noiseless x-y correlations, computed on the pure path.
std::vector<double> noiseless_xy_series(const ExperimentConfig& config) {
    std::vector<double> q(config.steps + 1, 0.0);
    PureState psi = initial_state(config.scheme, HilbertSpec{config.scheme.coin_dim(),
                                                             config.steps});
    for (int s = 1; s <= config.steps; ++s) {
        psi = step_pure_operator(config.scheme, psi);
        q[s] = mid_xy(psi);
    }
    return q;
}

Distribution pure_final_distribution(const ExperimentConfig& config) {
    PureState psi = initial_state(config.scheme, HilbertSpec{config.scheme.coin_dim(),
                                                             config.steps});
    for (int s = 0; s < config.steps; ++s) psi = step_pure_operator(config.scheme, psi);
    Distribution dist = marginal_distribution(psi);
    validate(dist, 1e-10);
    return dist;
}

void emit_series_rows(ResultTable& table, const ExperimentConfig& config, double p,
                      const CorrelationRecord& record,
                      const std::vector<double>& baseline_xy) {
    for (const Measure m : config.measures) {
        SeriesPoint point{record.step, p, m, std::nullopt};
        switch (m) {
            case Measure::distribution:
                continue;
            case Measure::mid_pp:
                point.value = record.q_pp;
                break;
            case Measure::mid_xy:
                point.value = record.q_xy;
                break;
            case Measure::robustness:
                point.value = robustness_ratio(record.q_xy, baseline_xy[record.step]);
                break;
        }
        table.series.push_back(point);
    }
}

void run_one_level(ResultTable& table, const ExperimentConfig& config, double p,
                   const std::vector<double>& baseline_xy) {
    const HilbertSpec spec{config.scheme.coin_dim(), config.steps};
    NoiseSpec noise = config.noise;
    noise.p = p;
    const bool series_wanted = config.wants(Measure::mid_pp) ||
                               config.wants(Measure::mid_xy) ||
                               config.wants(Measure::robustness);
    const bool xy_wanted = config.wants(Measure::mid_xy) || config.wants(Measure::robustness);

    DensityOperator rho = initial_density(config.scheme, spec);
    if (series_wanted) {
        // step 0: product state, both disturbances vanish identically
        emit_series_rows(table, config, p, CorrelationRecord{0, 0.0, 0.0, 0.0, 0.0},
                         baseline_xy);
    }
    for (int s = 1; s <= config.steps; ++s) {
        rho = noisy_step(config.scheme, rho, noise);
        const double tr_err = rho.trace_error();
        if (!(tr_err <= 1e-12))
            throw invariant_error("run_experiment: trace error " + std::to_string(tr_err) +
                                  " at step " + std::to_string(s));
        if (series_wanted) {
            CorrelationRecord record;
            record.step = s;
            if (config.wants(Measure::mid_pp)) {
                const MidBreakdown pp = mid_pp_breakdown(rho);
                record.q_pp = pp.value();
                record.i_total = pp.total_mi;
                record.i_classical = pp.classical_mi;
            }
            if (xy_wanted) record.q_xy = mid_xy(rho);
            emit_series_rows(table, config, p, record, baseline_xy);
        }
    }
    if (config.wants(Measure::distribution)) {
        Distribution dist = marginal_distribution(rho);
        validate(dist, 1e-10);
        table.distributions.emplace_back(p, std::move(dist));
    }
}

}  // namespace

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::distribution: return "distribution";
        case Measure::mid_pp: return "mid_pp";
        case Measure::mid_xy: return "mid_xy";
        case Measure::robustness: return "robustness";
    }
    return "?";
}

Measure measure_from_string(const std::string& token) {
    if (token == "distribution") return Measure::distribution;
    if (token == "mid_pp") return Measure::mid_pp;
    if (token == "mid_xy") return Measure::mid_xy;
    if (token == "robustness") return Measure::robustness;
    throw config_error("unknown measure '" + token + "'");
}

bool ExperimentConfig::wants(Measure m) const {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
}

void validate_config(const ExperimentConfig& config) {
    if (config.steps < 0) throw config_error("config: steps must be nonnegative");
    if (config.measures.empty()) throw config_error("config: no measures requested");
    if (config.p_values.empty()) throw config_error("config: no noise levels given");
    for (const double p : config.p_values) {
        NoiseSpec noise = config.noise;
        noise.p = p;
        validate_noise(noise, config.scheme);  // also rejects scheme/noise mismatches
    }
    if (config.scheme.kind != SchemeKind::alternate &&
        config.scheme.theta != WalkScheme{}.theta && config.scheme.theta != 0.0)
        throw config_error("config: coin angle applies to the alternate walk only");
}

ResultTable run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    ExperimentConfig sorted = config;
    std::stable_sort(sorted.p_values.begin(), sorted.p_values.end());

    ResultTable table{HilbertSpec{sorted.scheme.coin_dim(), sorted.steps}, {}, {}};
    if (sorted.measures.size() == 1 && sorted.measures.front() == Measure::distribution &&
        all_noiseless(sorted)) {
        const Distribution dist = pure_final_distribution(sorted);
        for (const double p : sorted.p_values) table.distributions.emplace_back(p, dist);
        return table;
    }

    std::vector<double> baseline_xy;
    if (sorted.wants(Measure::robustness)) baseline_xy = noiseless_xy_series(sorted);
    for (const double p : sorted.p_values) run_one_level(table, sorted, p, baseline_xy);
    return table;
}

ResultTable run_sweep(const ExperimentConfig& config) { return run_experiment(config); }

namespace {

ExperimentConfig make_config(WalkScheme scheme, int steps, NoiseSpec noise,
                             std::vector<double> p_values, std::vector<Measure> measures) {
    ExperimentConfig config;
    config.scheme = scheme;
    config.steps = steps;
    config.noise = noise;
    config.p_values = std::move(p_values);
    config.measures = std::move(measures);
    return config;
}

std::vector<Preset> build_presets() {
    const WalkScheme grover = WalkScheme::grover();
    const WalkScheme alternate = WalkScheme::alternate();
    const WalkScheme pauli = WalkScheme::pauli();
    const NoiseSpec none{};
    const auto flips = [](int k) { return NoiseSpec{NoiseKind::stateflip4, 0.0, k}; };
    const NoiseSpec bf_axis{NoiseKind::bitflip_per_axis, 0.0, 23};
    const NoiseSpec bf_step{NoiseKind::bitflip_per_step, 0.0, 23};
    const NoiseSpec depol2{NoiseKind::depolarizing2, 0.0, 23};
    const NoiseSpec depol4{NoiseKind::depolarizing4, 0.0, 23};

    std::vector<Preset> presets;
    presets.push_back({"fig1", "noiseless four-state walk distribution", 25,
                       {{"", make_config(grover, 25, none, {0.0}, {Measure::distribution})}}});

    {
        Preset p{"fig2", "noiseless particle-position and x-y correlations, all schemes", 25, {}};
        for (const WalkScheme& s : {grover, alternate, pauli})
            p.runs.push_back({to_string(s.kind),
                              make_config(s, 8, none, {0.0},
                                          {Measure::mid_pp, Measure::mid_xy})});
        presets.push_back(std::move(p));
    }

    presets.push_back(
        {"fig3", "four-state walk distribution under the full flip channel (k=23)", 15,
         {{"p0.1", make_config(grover, 8, flips(23), {0.1}, {Measure::distribution})},
          {"p0.9", make_config(grover, 8, flips(23), {0.9}, {Measure::distribution})}}});

    presets.push_back({"fig4", "four-state correlations vs flip-noise level (k=23)", 15,
                       {{"", make_config(grover, 6, flips(23), {0.0, 0.1, 0.3},
                                         {Measure::mid_pp, Measure::mid_xy})}}});

    {
        Preset p{"fig5", "two-state walk distributions, per-axis bit flip", 25, {}};
        for (const WalkScheme& s : {alternate, pauli})
            for (const double level : {0.1, 0.9})
                p.runs.push_back(
                    {std::string(to_string(s.kind)) + "_p" + (level == 0.1 ? "0.1" : "0.9"),
                     make_config(s, 10, bf_axis, {level}, {Measure::distribution})});
        presets.push_back(std::move(p));
    }

    const auto two_state_curves = [&](const char* name, const char* what, NoiseSpec noise,
                                      Measure measure) {
        Preset p{name, what, 15, {}};
        for (const WalkScheme& s : {alternate, pauli})
            p.runs.push_back({to_string(s.kind),
                              make_config(s, 8, noise, {0.0, 0.1, 0.3}, {measure})});
        return p;
    };
    presets.push_back(two_state_curves(
        "fig6", "two-state particle-position correlations, per-axis bit flip", bf_axis,
        Measure::mid_pp));
    presets.push_back(two_state_curves("fig7", "two-state x-y correlations, per-axis bit flip",
                                       bf_axis, Measure::mid_xy));
    presets.push_back(two_state_curves(
        "fig8", "two-state particle-position correlations, per-step bit flip", bf_step,
        Measure::mid_pp));
    presets.push_back(two_state_curves("fig9", "two-state x-y correlations, per-step bit flip",
                                       bf_step, Measure::mid_xy));

    {
        Preset p{"fig10", "four-state x-y correlations for the three flip sets", 6, {}};
        for (const int k : {3, 6, 23})
            p.runs.push_back({"k" + std::to_string(k),
                              make_config(grover, 6, flips(k), {0.1}, {Measure::mid_xy})});
        presets.push_back(std::move(p));
    }

    presets.push_back(
        {"fig11", "distributions under depolarizing noise", 15,
         {{"grover", make_config(grover, 8, depol4, {0.1}, {Measure::distribution})},
          {"alternate", make_config(alternate, 10, depol2, {0.1}, {Measure::distribution})}}});

    presets.push_back({"fig12", "four-state correlations vs depolarizing level", 15,
                       {{"", make_config(grover, 6, depol4, {0.0, 0.1, 0.3},
                                         {Measure::mid_pp, Measure::mid_xy})}}});

    {
        Preset p{"fig13", "two-state particle-position correlations, depolarizing", 15, {}};
        for (const WalkScheme& s : {alternate, pauli})
            p.runs.push_back({to_string(s.kind), make_config(s, 8, depol2, {0.0, 0.1, 0.3},
                                                             {Measure::mid_pp})});
        presets.push_back(std::move(p));
        Preset q{"fig14", "two-state x-y correlations, depolarizing", 15, {}};
        for (const WalkScheme& s : {alternate, pauli})
            q.runs.push_back({to_string(s.kind), make_config(s, 8, depol2, {0.0, 0.1, 0.3},
                                                             {Measure::mid_xy})});
        presets.push_back(std::move(q));
    }

    presets.push_back(
        {"fig15", "x-y correlation robustness under flip noise (p=0.2)", 10,
         {{"grover", make_config(grover, 8, flips(3), {0.2}, {Measure::robustness})},
          {"alternate", make_config(alternate, 8, bf_step, {0.2}, {Measure::robustness})},
          {"pauli", make_config(pauli, 8, bf_step, {0.2}, {Measure::robustness})}}});

    presets.push_back(
        {"fig16", "x-y correlation robustness under depolarizing noise (p=0.2)", 10,
         {{"grover", make_config(grover, 8, depol4, {0.2}, {Measure::robustness})},
          {"alternate", make_config(alternate, 8, depol2, {0.2}, {Measure::robustness})},
          {"pauli", make_config(pauli, 8, depol2, {0.2}, {Measure::robustness})}}});

    return presets;
}

}  // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = build_presets();
    return presets;
}

const Preset& find_preset(const std::string& name) {
    for (const Preset& p : all_presets())
        if (p.name == name) return p;
    throw config_error("unknown preset '" + name + "'");
}

}  // namespace qwalk
