#include "qwalk/noise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

Eigen::MatrixXcd permutation_matrix(const std::array<int, 4>& images) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) m(images[j], j) = 1.0;
    return m;
}

Eigen::MatrixXcd four_cycle() { return permutation_matrix({3, 0, 1, 2}); }

bool is_identity(const Eigen::MatrixXcd& m) {
    return (m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() == 0.0;
}

double axis_strength(double p) { return std::min(p / 2.0, 1.0); }

}  // namespace

double KrausSet::total_weight() const {
    return std::accumulate(terms.begin(), terms.end(), 0.0,
                           [](double acc, const KrausTerm& t) { return acc + t.weight; });
}

KrausSet KrausSet::identity(int coin_dim) {
    return {{KrausTerm{1.0, Eigen::MatrixXcd::Identity(coin_dim, coin_dim)}}};
}

KrausSet KrausSet::single_unitary(double p, const Eigen::MatrixXcd& coin_op) {
    KrausSet set;
    set.terms.push_back({p, coin_op});
    set.terms.push_back(
        {1.0 - p, Eigen::MatrixXcd::Identity(coin_op.rows(), coin_op.cols())});
    return set;
}

ChannelSchedule schedule_for(NoiseKind kind) {
    return kind == NoiseKind::bitflip_per_axis ? ChannelSchedule::per_axis
                                               : ChannelSchedule::per_step;
}

const char* to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::none: return "none";
        case NoiseKind::bitflip_per_axis: return "bitflip-axis";
        case NoiseKind::bitflip_per_step: return "bitflip-step";
        case NoiseKind::stateflip4: return "stateflip";
        case NoiseKind::depolarizing2: return "depolarizing2";
        case NoiseKind::depolarizing4: return "depolarizing4";
    }
    return "?";
}

void validate_noise(const NoiseSpec& noise, const WalkScheme& scheme) {
    if (noise.kind == NoiseKind::none) {
        if (noise.p != 0.0) throw config_error("noise: strength must be 0 without a channel");
        return;
    }
    const double p_max = noise.kind == NoiseKind::bitflip_per_axis ? 2.0 : 1.0;
    if (!(noise.p >= 0.0 && noise.p <= p_max))
        throw config_error("noise: strength " + std::to_string(noise.p) + " outside [0, " +
                           std::to_string(p_max) + "] for " + to_string(noise.kind));
    if (noise.kind == NoiseKind::stateflip4 && noise.k != 3 && noise.k != 6 && noise.k != 23)
        throw config_error("noise: flip count k must be 3, 6 or 23");
    if (noise.two_state() && scheme.coin_dim() != 2)
        throw config_error(std::string("noise: ") + to_string(noise.kind) +
                           " applies to two-state walks only");
    if (noise.four_state() && scheme.coin_dim() != 4)
        throw config_error(std::string("noise: ") + to_string(noise.kind) +
                           " applies to the four-state walk only");
}

std::vector<Eigen::MatrixXcd> permutation_flip_set(int k) {
    std::vector<Eigen::MatrixXcd> flips;
    switch (k) {
        case 3: {
            const Eigen::MatrixXcd f = four_cycle();
            flips = {f, f * f, f * f * f};
            break;
        }
        case 6:
            flips = {permutation_matrix({1, 0, 2, 3}), permutation_matrix({2, 1, 0, 3}),
                     permutation_matrix({3, 1, 2, 0}), permutation_matrix({0, 2, 1, 3}),
                     permutation_matrix({0, 3, 2, 1}), permutation_matrix({0, 1, 3, 2})};
            break;
        case 23: {
            std::array<int, 4> images = {0, 1, 2, 3};
            while (std::next_permutation(images.begin(), images.end()))
                flips.push_back(permutation_matrix(images));
            break;
        }
        default:
            throw config_error("permutation_flip_set: k must be 3, 6 or 23");
    }
    return flips;
}

std::vector<Eigen::MatrixXcd> cyclic_phase_set() {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(4, 4);
    const Complex omega(0.0, 1.0);
    for (int j = 0; j < 4; ++j) r(j, j) = std::pow(omega, j);
    return {r, r * r, r * r * r};
}

KrausSet build_channel(const NoiseSpec& noise, int coin_dim) {
    if (noise.kind == NoiseKind::none) return KrausSet::identity(coin_dim);
    if ((noise.two_state() && coin_dim != 2) || (noise.four_state() && coin_dim != 4))
        throw config_error(std::string("build_channel: ") + to_string(noise.kind) +
                           " does not act on a coin of dimension " + std::to_string(coin_dim));

    KrausSet set;
    switch (noise.kind) {
        case NoiseKind::bitflip_per_axis:
            return KrausSet::single_unitary(axis_strength(noise.p), pauli_x());
        case NoiseKind::bitflip_per_step:
            return KrausSet::single_unitary(noise.p, pauli_x());
        case NoiseKind::stateflip4:
            for (const auto& f : permutation_flip_set(noise.k))
                set.terms.push_back({noise.p / noise.k, f});
            break;
        case NoiseKind::depolarizing2:
            for (const auto& s : {pauli_x(), pauli_y(), pauli_z()})
                set.terms.push_back({noise.p / 3.0, s});
            break;
        case NoiseKind::depolarizing4: {
            const auto flips = permutation_flip_set(3);
            const auto phases = cyclic_phase_set();
            for (const auto& f : flips) set.terms.push_back({noise.p / 15.0, f});
            for (const auto& r : phases) set.terms.push_back({noise.p / 15.0, r});
            for (const auto& f : flips)
                for (const auto& r : phases) set.terms.push_back({noise.p / 15.0, r * f});
            break;
        }
        case NoiseKind::none:
            break;
    }
    set.terms.push_back({1.0 - noise.p, Eigen::MatrixXcd::Identity(coin_dim, coin_dim)});
    return set;
}

Eigen::MatrixXcd apply_channel_matrix(const Eigen::MatrixXcd& rho, const KrausSet& channel,
                                      Eigen::Index block) {
    if (channel.terms.empty()) throw config_error("apply_channel: empty Kraus set");
    const double total = channel.total_weight();
    if (std::abs(total - 1.0) > 1e-12)
        throw config_error("apply_channel: weights sum to " + std::to_string(total));

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    Eigen::MatrixXcd branch;
    for (const KrausTerm& term : channel.terms) {
        if (term.weight == 0.0) continue;
        if (term.coin_op.rows() * block != rho.rows())
            throw config_error("apply_channel: coin operator does not match state dimensions");
        if (is_identity(term.coin_op)) {
            out += term.weight * rho;
            continue;
        }
        branch = rho;
        conjugate_coin_block(term.coin_op, branch, block);
        out += term.weight * branch;
    }
    return out;
}

DensityOperator apply_channel(const DensityOperator& rho, const KrausSet& channel) {
    return DensityOperator{rho.spec,
                           apply_channel_matrix(rho.matrix, channel, rho.spec.site_count())};
}

DensityOperator noisy_step(const WalkScheme& scheme, const DensityOperator& rho,
                           const NoiseSpec& noise, ChannelSchedule schedule) {
    validate_noise(noise, scheme);
    if (noise.kind != NoiseKind::none && schedule != schedule_for(noise.kind))
        throw config_error(std::string("noisy_step: ") + to_string(noise.kind) +
                           " is not defined for the requested schedule");
    if (schedule == ChannelSchedule::per_axis && scheme.kind == SchemeKind::grover)
        throw config_error("noisy_step: per-axis noise is undefined for the four-state walk");

    const Eigen::Index block = rho.spec.site_count();
    const KrausSet channel = build_channel(noise, scheme.coin_dim());
    const StepOperators ops = step_operators(scheme, rho.spec);

    DensityOperator out = rho;
    for (const Leg& leg : ops.legs) {
        conjugate_leg(leg, out.matrix, block);
        if (schedule == ChannelSchedule::per_axis)
            out.matrix = apply_channel_matrix(out.matrix, channel, block);
    }
    if (schedule == ChannelSchedule::per_step)
        out.matrix = apply_channel_matrix(out.matrix, channel, block);
    return out;
}

DensityOperator noisy_step(const WalkScheme& scheme, const DensityOperator& rho,
                           const NoiseSpec& noise) {
    return noisy_step(scheme, rho, noise, schedule_for(noise.kind));
}

DensityOperator initial_density(const WalkScheme& scheme, const HilbertSpec& spec) {
    return to_density(initial_state(scheme, spec));
}

}  // namespace qwalk
