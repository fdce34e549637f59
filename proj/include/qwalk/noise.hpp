#pragma once

#include <Eigen/Core>
#include <vector>

#include "qwalk/state.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// One random-unitary branch of a channel.  The operator acts on the coin
// factor only (coin_op ⊗ 1 on the full space).
struct KrausTerm {
    double weight = 0.0;
    Eigen::MatrixXcd coin_op;
};

struct KrausSet {
    std::vector<KrausTerm> terms;

    double total_weight() const;
    static KrausSet identity(int coin_dim);
    // weight p on one coin unitary, 1-p on the identity
    static KrausSet single_unitary(double p, const Eigen::MatrixXcd& coin_op);
};

enum class NoiseKind {
    none,
    bitflip_per_axis,  // two-state walks; strength p/2 applied after each axis
    bitflip_per_step,  // two-state walks; strength p applied after the full step
    stateflip4,        // four-state walk; k in {3, 6, 23} basis permutations
    depolarizing2,     // two-state walks; Pauli mixing after the full step
    depolarizing4      // four-state walk; cyclic flips, cyclic phases and combinations
};

struct NoiseSpec {
    NoiseKind kind = NoiseKind::none;
    double p = 0.0;  // in [0, 1]; the per-axis bit flip admits [0, 2] (p' = p/2 per axis)
    int k = 23;      // stateflip4 only

    bool two_state() const {
        return kind == NoiseKind::bitflip_per_axis || kind == NoiseKind::bitflip_per_step ||
               kind == NoiseKind::depolarizing2;
    }
    bool four_state() const {
        return kind == NoiseKind::stateflip4 || kind == NoiseKind::depolarizing4;
    }
};

enum class ChannelSchedule { per_axis, per_step };

ChannelSchedule schedule_for(NoiseKind kind);
const char* to_string(NoiseKind kind);

// Throws config_error for inconsistent kind/strength/k/scheme combinations.
void validate_noise(const NoiseSpec& noise, const WalkScheme& scheme);

// The k non-identity coin permutations used by the four-state flip channel:
// k=3 the powers of the four-cycle, k=6 the transpositions, k=23 every
// non-identity permutation in lexicographic tuple order.
std::vector<Eigen::MatrixXcd> permutation_flip_set(int k);

// diag(1, w, w^2, w^3) with w = i, and its square and cube.
std::vector<Eigen::MatrixXcd> cyclic_phase_set();

// Kraus terms for one application of the channel (noisy branches first,
// identity branch last); weights sum to one.
KrausSet build_channel(const NoiseSpec& noise, int coin_dim);

Eigen::MatrixXcd apply_channel_matrix(const Eigen::MatrixXcd& rho, const KrausSet& channel,
                                      Eigen::Index block);
DensityOperator apply_channel(const DensityOperator& rho, const KrausSet& channel);

// One full walk step with noise: the channel conjugates the already-shifted
// state, after each axis (per_axis) or once after the full step (per_step).
DensityOperator noisy_step(const WalkScheme& scheme, const DensityOperator& rho,
                           const NoiseSpec& noise, ChannelSchedule schedule);
DensityOperator noisy_step(const WalkScheme& scheme, const DensityOperator& rho,
                           const NoiseSpec& noise);

DensityOperator initial_density(const WalkScheme& scheme, const HilbertSpec& spec);

}  // namespace qwalk
