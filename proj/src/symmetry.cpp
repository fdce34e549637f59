#include "qwalk/symmetry.hpp"

#include <array>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr double kMatchTol = 1e-10;

// Density evolution with explicit step operators and an optional channel
// applied after each leg (per_axis) or after the full step (per_step).
Distribution custom_distribution(const HilbertSpec& spec, const Eigen::VectorXcd& coin,
                                 const StepOperators& ops, const KrausSet* axis_channel,
                                 const KrausSet* step_channel, int steps) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(spec.dim());
    for (int c = 0; c < spec.coin_dim; ++c) amps[spec.flat_index(c, 0, 0)] = coin[c];
    DensityOperator rho{spec, amps * amps.adjoint()};
    const Eigen::Index block = spec.site_count();
    for (int s = 0; s < steps; ++s) {
        for (const Leg& leg : ops.legs) {
            conjugate_leg(leg, rho.matrix, block);
            if (axis_channel) rho.matrix = apply_channel_matrix(rho.matrix, *axis_channel, block);
        }
        if (step_channel) rho.matrix = apply_channel_matrix(rho.matrix, *step_channel, block);
    }
    return marginal_distribution(rho);
}

Distribution noiseless_distribution(const WalkScheme& scheme, int steps) {
    PureState psi = initial_state(scheme, HilbertSpec{scheme.coin_dim(), steps});
    for (int s = 0; s < steps; ++s) psi = step_pure_operator(scheme, psi);
    return marginal_distribution(psi);
}

SymmetryReport make_report(std::string name, double deviation, double tol, bool want_below) {
    const bool passed = want_below ? deviation <= tol : deviation > tol;
    return SymmetryReport{std::move(name), deviation, tol, passed};
}

}  // namespace

CoinOperator absorb_bitflip(const CoinOperator& coin) {
    if (coin.rows() != 2 || coin.cols() != 2)
        throw config_error("absorb_bitflip: coin must be 2x2");
    return pauli_x() * coin;
}

CoinOperator absorb_phaseflip(const CoinOperator& coin) {
    if (coin.rows() != 2 || coin.cols() != 2)
        throw config_error("absorb_phaseflip: coin must be 2x2");
    return pauli_z() * coin;
}

std::vector<SymmetryReport> verify_twostate_symmetry(const WalkScheme& scheme, int steps) {
    if (scheme.kind == SchemeKind::grover)
        throw config_error("verify_twostate_symmetry: two-state walks only");
    const HilbertSpec spec{2, steps};
    const Eigen::VectorXcd coin0 = InitialCoinState::scheme_default(scheme).amplitudes;
    const StepOperators ops = step_operators(scheme, spec);
    const Distribution base = noiseless_distribution(scheme, steps);
    const std::string tag = to_string(scheme.kind);

    std::vector<SymmetryReport> reports;
    struct Flip {
        const char* name;
        Eigen::MatrixXcd op;
    };
    for (const Flip& flip : {Flip{"bitflip", pauli_x()}, Flip{"phaseflip", pauli_z()}}) {
        const KrausSet full = KrausSet::single_unitary(1.0, flip.op);

        const Distribution noisy =
            custom_distribution(spec, coin0, ops, nullptr, &full, steps);
        reports.push_back(make_report(tag + ": " + flip.name + " per-step p=1 vs noiseless",
                                      max_deviation(noisy, base), kMatchTol, true));

        const Distribution per_axis =
            custom_distribution(spec, coin0, ops, &full, nullptr, steps);
        reports.push_back(make_report(tag + ": " + flip.name + " per-axis p'=1 vs noiseless",
                                      max_deviation(per_axis, base), kMatchTol, true));

        // flip folded into the final shift of the step
        StepOperators absorbed_shift = ops;
        Leg& last = absorbed_shift.legs.back();
        last.post_coin = last.post_coin.size() > 0
                             ? Eigen::MatrixXcd(flip.op * last.post_coin)
                             : flip.op;
        const Distribution shifted =
            custom_distribution(spec, coin0, absorbed_shift, nullptr, nullptr, steps);
        reports.push_back(make_report(tag + ": " + flip.name + " absorbed into shift vs noisy",
                                      max_deviation(shifted, noisy), kMatchTol, true));

        if (scheme.kind == SchemeKind::alternate) {
            // flip folded into the coin of the axis it follows
            StepOperators absorbed_coin = ops;
            absorbed_coin.legs.back().pre_coin =
                flip.op * Eigen::MatrixXcd(rotation_coin(scheme.theta));
            const Distribution coined =
                custom_distribution(spec, coin0, absorbed_coin, nullptr, nullptr, steps);
            reports.push_back(make_report(tag + ": " + flip.name + " absorbed into coin vs noisy",
                                          max_deviation(coined, noisy), kMatchTol, true));
        }
    }
    return reports;
}

SymmetryReport verify_grover_breakdown(int k, int steps) {
    const WalkScheme scheme = WalkScheme::grover();
    const HilbertSpec spec{4, steps};
    DensityOperator rho = initial_density(scheme, spec);
    const NoiseSpec noise{NoiseKind::stateflip4, 1.0, k};
    for (int s = 0; s < steps; ++s) rho = noisy_step(scheme, rho, noise);

    const double deviation = max_deviation(marginal_distribution(rho),
                                           noiseless_distribution(scheme, steps));
    const double purity = rho.purity();
    SymmetryReport report = make_report(
        "grover: stateflip k=" + std::to_string(k) + " p=1 deviates from noiseless", deviation,
        0.01, false);
    report.passed = report.passed && purity < 1.0 - 1e-6;
    report.name += " (purity " + std::to_string(purity) + ")";
    return report;
}

SymmetryReport single_flip_absorption_check(int steps) {
    const WalkScheme scheme = WalkScheme::grover();
    const HilbertSpec spec{4, steps};
    const Eigen::VectorXcd coin0 = InitialCoinState::grover_default().amplitudes;
    const StepOperators ops = step_operators(scheme, spec);

    // deterministic single-flip channel: the four-cycle permutation
    const Eigen::MatrixXcd flip = permutation_flip_set(3).front();
    const KrausSet channel{{KrausTerm{1.0, flip}}};
    const Distribution noisy = custom_distribution(spec, coin0, ops, nullptr, &channel, steps);

    // Folding the flip into the coin also relabels the shift conditioning:
    // flip * shift = shift' * flip with shift' moving component d by the
    // displacement of the preimage coin state.
    std::array<int, 4> preimage{};
    for (int d = 0; d < 4; ++d)
        for (int j = 0; j < 4; ++j)
            if (flip(d, j).real() != 0.0) preimage[d] = j;
    std::vector<std::pair<int, int>> moves(4);
    for (int d = 0; d < 4; ++d) moves[d] = diagonal_moves()[preimage[d]];

    StepOperators absorbed;
    absorbed.legs.push_back(
        {Eigen::MatrixXcd(flip * grover_coin()), shift_permutation(spec, moves), {}});
    const Distribution folded =
        custom_distribution(spec, coin0, absorbed, nullptr, nullptr, steps);

    return make_report("grover: deterministic flip absorbed into coin",
                       max_deviation(folded, noisy), kMatchTol, true);
}

}  // namespace qwalk
