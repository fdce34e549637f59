#pragma once

#include <Eigen/Core>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

enum class SchemeKind { grover, alternate, pauli };

// Which of the three two-dimensional walks to run.  The four-state walk uses
// the diffusion coin with diagonal shifts; the alternate walk steps a
// two-state particle along x then y with a rotation coin before each shift;
// the coin-free walk shifts along x in the computational basis and along y in
// the |±> basis.
struct WalkScheme {
    SchemeKind kind = SchemeKind::alternate;
    double theta = 0.78539816339744830961;  // pi/4, used by the alternate walk only

    int coin_dim() const { return kind == SchemeKind::grover ? 4 : 2; }

    static WalkScheme grover() { return {SchemeKind::grover, 0.0}; }
    static WalkScheme alternate(double theta = 0.78539816339744830961) {
        return {SchemeKind::alternate, theta};
    }
    static WalkScheme pauli() { return {SchemeKind::pauli, 0.0}; }
};

const char* to_string(SchemeKind kind);

struct InitialCoinState {
    Eigen::VectorXcd amplitudes;

    // cos(delta/2)|0> + e^{i eta} sin(delta/2)|1>
    static InitialCoinState two_state(double delta, double eta);
    // (|0> + i|1>)/sqrt(2), the unbiased state giving maximal spread
    static InitialCoinState two_state_default();
    // (|0> - |1> - |2> + |3>)/2, the only coin state spreading the four-state walk
    static InitialCoinState grover_default();

    static InitialCoinState scheme_default(const WalkScheme& scheme);
};

// State centered at the origin with the given (or scheme-default) coin,
// on a lattice sized for `spec.steps` walk steps.
PureState initial_state(const WalkScheme& scheme, const HilbertSpec& spec);
PureState initial_state(const WalkScheme& scheme, const HilbertSpec& spec,
                        const InitialCoinState& coin);

// One sub-step of the walk: optional coin, then a coin-conditioned shift,
// then an optional closing coin (used by the |±>-basis shift).  Empty coin
// matrices mean identity.
struct Leg {
    Eigen::MatrixXcd pre_coin;
    Eigen::PermutationMatrix<Eigen::Dynamic> shift;
    Eigen::MatrixXcd post_coin;
};

struct StepOperators {
    std::vector<Leg> legs;  // applied in order; one full step applies all
};

StepOperators step_operators(const WalkScheme& scheme, const HilbertSpec& spec);

// Per-coin displacement tables of the three shifts.
const std::vector<std::pair<int, int>>& diagonal_moves();  // four-state step
const std::vector<std::pair<int, int>>& axis_x_moves();
const std::vector<std::pair<int, int>>& axis_y_moves();

// Shift permutation moving coin component c from (x, y) to (x, y) + moves[c].
Eigen::PermutationMatrix<Eigen::Dynamic> shift_permutation(
    const HilbertSpec& spec, const std::vector<std::pair<int, int>>& moves);

// y <- (C ⊗ 1) y acting on the coin factor; `block` is the position dimension.
void apply_coin_block(const Eigen::MatrixXcd& coin, Eigen::VectorXcd& psi, Eigen::Index block);
// rho <- (C ⊗ 1) rho (C ⊗ 1)^dagger
void conjugate_coin_block(const Eigen::MatrixXcd& coin, Eigen::MatrixXcd& rho,
                          Eigen::Index block);

void apply_leg(const Leg& leg, Eigen::VectorXcd& psi, Eigen::Index block);
void conjugate_leg(const Leg& leg, Eigen::MatrixXcd& rho, Eigen::Index block);

// One walk step through the explicit coin/shift operators.  Ground truth for
// the recurrence kernel below.
PureState step_pure_operator(const WalkScheme& scheme, const PureState& state);

// One walk step through the closed-form amplitude recurrences (gather form,
// coefficients derived from the operator composition).
PureState step_pure_iterative(const WalkScheme& scheme, const PureState& state);

// Full-lattice step unitary as a dense matrix, assembled independently from
// Kronecker products and permutation matrices.
Eigen::MatrixXcd step_unitary_matrix(const WalkScheme& scheme, const HilbertSpec& spec);

}  // namespace qwalk
