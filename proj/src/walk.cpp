#include "qwalk/walk.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

const std::vector<std::pair<int, int>> kDiagonalMoves = {{-1, -1}, {-1, +1}, {+1, -1}, {+1, +1}};
const std::vector<std::pair<int, int>> kAxisXMoves = {{-1, 0}, {+1, 0}};
const std::vector<std::pair<int, int>> kAxisYMoves = {{0, -1}, {0, +1}};

void require_budget(const PureState& state) {
    if (state.steps_taken >= state.spec.steps)
        throw config_error("walk step: no step budget remaining on this lattice");
}

}  // namespace

const std::vector<std::pair<int, int>>& diagonal_moves() { return kDiagonalMoves; }
const std::vector<std::pair<int, int>>& axis_x_moves() { return kAxisXMoves; }
const std::vector<std::pair<int, int>>& axis_y_moves() { return kAxisYMoves; }

const char* to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::grover: return "grover";
        case SchemeKind::alternate: return "alternate";
        case SchemeKind::pauli: return "pauli";
    }
    return "?";
}

InitialCoinState InitialCoinState::two_state(double delta, double eta) {
    Eigen::VectorXcd a(2);
    a << std::cos(delta / 2.0), std::polar(std::sin(delta / 2.0), eta);
    return {a};
}

InitialCoinState InitialCoinState::two_state_default() {
    Eigen::VectorXcd a(2);
    a << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    return {a};
}

InitialCoinState InitialCoinState::grover_default() {
    Eigen::VectorXcd a(4);
    a << 0.5, -0.5, -0.5, 0.5;
    return {a};
}

InitialCoinState InitialCoinState::scheme_default(const WalkScheme& scheme) {
    return scheme.kind == SchemeKind::grover ? grover_default() : two_state_default();
}

PureState initial_state(const WalkScheme& scheme, const HilbertSpec& spec) {
    return initial_state(scheme, spec, InitialCoinState::scheme_default(scheme));
}

PureState initial_state(const WalkScheme& scheme, const HilbertSpec& spec,
                        const InitialCoinState& coin) {
    if (spec.coin_dim != scheme.coin_dim())
        throw config_error("initial_state: lattice coin dimension does not match scheme");
    if (coin.amplitudes.size() != scheme.coin_dim())
        throw config_error("initial_state: coin state dimension does not match scheme");
    if (std::abs(coin.amplitudes.squaredNorm() - 1.0) > 1e-12)
        throw config_error("initial_state: coin state is not normalized");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(spec.dim());
    for (int c = 0; c < spec.coin_dim; ++c)
        amps[spec.flat_index(c, 0, 0)] = coin.amplitudes[c];
    return PureState{spec, std::move(amps), 0};
}

Eigen::PermutationMatrix<Eigen::Dynamic> shift_permutation(
    const HilbertSpec& spec, const std::vector<std::pair<int, int>>& moves) {
    if (static_cast<int>(moves.size()) != spec.coin_dim)
        throw config_error("shift_permutation: one move per coin component required");
    const int t = spec.steps;
    const int l = spec.extent();
    auto wrap = [&](int v) { return ((v + t) % l + l) % l - t; };
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(spec.dim());
    auto& idx = perm.indices();
    for (int c = 0; c < spec.coin_dim; ++c)
        for (int x = -t; x <= t; ++x)
            for (int y = -t; y <= t; ++y)
                idx[spec.flat_index(c, x, y)] =
                    static_cast<int>(spec.flat_index(c, wrap(x + moves[c].first),
                                                     wrap(y + moves[c].second)));
    return perm;
}

StepOperators step_operators(const WalkScheme& scheme, const HilbertSpec& spec) {
    if (spec.coin_dim != scheme.coin_dim())
        throw config_error("step_operators: lattice coin dimension does not match scheme");
    StepOperators ops;
    switch (scheme.kind) {
        case SchemeKind::grover:
            ops.legs.push_back({grover_coin(), shift_permutation(spec, kDiagonalMoves), {}});
            break;
        case SchemeKind::alternate:
            ops.legs.push_back(
                {rotation_coin(scheme.theta), shift_permutation(spec, kAxisXMoves), {}});
            ops.legs.push_back(
                {rotation_coin(scheme.theta), shift_permutation(spec, kAxisYMoves), {}});
            break;
        case SchemeKind::pauli:
            ops.legs.push_back({{}, shift_permutation(spec, kAxisXMoves), {}});
            // shift conditioned on |±>: rotate to the computational basis,
            // shift, rotate back
            ops.legs.push_back(
                {hadamard_coin(), shift_permutation(spec, kAxisYMoves), hadamard_coin()});
            break;
    }
    return ops;
}

void apply_coin_block(const Eigen::MatrixXcd& coin, Eigen::VectorXcd& psi, Eigen::Index block) {
    if (coin.size() == 0) return;
    const Eigen::Index c = coin.rows();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (Eigen::Index a = 0; a < c; ++a)
        for (Eigen::Index b = 0; b < c; ++b)
            out.segment(a * block, block) += coin(a, b) * psi.segment(b * block, block);
    psi.swap(out);
}

void conjugate_coin_block(const Eigen::MatrixXcd& coin, Eigen::MatrixXcd& rho,
                          Eigen::Index block) {
    if (coin.size() == 0) return;
    const Eigen::Index c = coin.rows();
    Eigen::MatrixXcd tmp = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (Eigen::Index a = 0; a < c; ++a)
        for (Eigen::Index b = 0; b < c; ++b)
            tmp.middleRows(a * block, block) += coin(a, b) * rho.middleRows(b * block, block);
    rho.setZero();
    for (Eigen::Index a = 0; a < c; ++a)
        for (Eigen::Index b = 0; b < c; ++b)
            rho.middleCols(a * block, block) +=
                std::conj(coin(a, b)) * tmp.middleCols(b * block, block);
}

void apply_leg(const Leg& leg, Eigen::VectorXcd& psi, Eigen::Index block) {
    apply_coin_block(leg.pre_coin, psi, block);
    psi = leg.shift * psi;
    apply_coin_block(leg.post_coin, psi, block);
}

void conjugate_leg(const Leg& leg, Eigen::MatrixXcd& rho, Eigen::Index block) {
    conjugate_coin_block(leg.pre_coin, rho, block);
    rho = leg.shift * rho * leg.shift.transpose();
    conjugate_coin_block(leg.post_coin, rho, block);
}

PureState step_pure_operator(const WalkScheme& scheme, const PureState& state) {
    require_budget(state);
    PureState out = state;
    const StepOperators ops = step_operators(scheme, state.spec);
    for (const Leg& leg : ops.legs) apply_leg(leg, out.amplitudes, state.spec.site_count());
    out.steps_taken = state.steps_taken + 1;
    return out;
}

PureState step_pure_iterative(const WalkScheme& scheme, const PureState& state) {
    require_budget(state);
    const HilbertSpec& spec = state.spec;
    const int t = spec.steps;
    const int l = spec.extent();
    const Eigen::Index sites = spec.site_count();
    const Eigen::VectorXcd& in = state.amplitudes;

    auto amp = [&](int c, int x, int y) -> Complex {
        if (x < -t || x > t || y < -t || y > t) return 0.0;
        return in[static_cast<Eigen::Index>(c) * sites +
                  static_cast<Eigen::Index>(x + t) * l + (y + t)];
    };

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(spec.dim());
    auto put = [&](int c, int x, int y, Complex v) {
        out[static_cast<Eigen::Index>(c) * sites + static_cast<Eigen::Index>(x + t) * l +
            (y + t)] = v;
    };

    switch (scheme.kind) {
        case SchemeKind::grover:
            // Each component gathers from the single site it was shifted away
            // from; the mixing weights are the rows of the diffusion coin.
            for (int x = -t; x <= t; ++x)
                for (int y = -t; y <= t; ++y) {
                    put(0, x, y,
                        0.5 * (-amp(0, x + 1, y + 1) + amp(1, x + 1, y + 1) +
                               amp(2, x + 1, y + 1) + amp(3, x + 1, y + 1)));
                    put(1, x, y,
                        0.5 * (amp(0, x + 1, y - 1) - amp(1, x + 1, y - 1) +
                               amp(2, x + 1, y - 1) + amp(3, x + 1, y - 1)));
                    put(2, x, y,
                        0.5 * (amp(0, x - 1, y + 1) + amp(1, x - 1, y + 1) -
                               amp(2, x - 1, y + 1) + amp(3, x - 1, y + 1)));
                    put(3, x, y,
                        0.5 * (amp(0, x - 1, y - 1) + amp(1, x - 1, y - 1) +
                               amp(2, x - 1, y - 1) - amp(3, x - 1, y - 1)));
                }
            break;
        case SchemeKind::alternate: {
            const double c = std::cos(scheme.theta), s = std::sin(scheme.theta);
            for (int x = -t; x <= t; ++x)
                for (int y = -t; y <= t; ++y) {
                    put(0, x, y,
                        c * (c * amp(0, x + 1, y + 1) + s * amp(1, x + 1, y + 1)) +
                            s * (s * amp(0, x - 1, y + 1) - c * amp(1, x - 1, y + 1)));
                    put(1, x, y,
                        s * (c * amp(0, x + 1, y - 1) + s * amp(1, x + 1, y - 1)) -
                            c * (s * amp(0, x - 1, y - 1) - c * amp(1, x - 1, y - 1)));
                }
            break;
        }
        case SchemeKind::pauli:
            for (int x = -t; x <= t; ++x)
                for (int y = -t; y <= t; ++y) {
                    put(0, x, y,
                        0.5 * (amp(0, x + 1, y + 1) + amp(1, x - 1, y + 1) +
                               amp(0, x + 1, y - 1) - amp(1, x - 1, y - 1)));
                    put(1, x, y,
                        0.5 * (amp(0, x + 1, y + 1) + amp(1, x - 1, y + 1) -
                               amp(0, x + 1, y - 1) + amp(1, x - 1, y - 1)));
                }
            break;
    }
    return PureState{spec, std::move(out), state.steps_taken + 1};
}

Eigen::MatrixXcd step_unitary_matrix(const WalkScheme& scheme, const HilbertSpec& spec) {
    const Eigen::Index d = spec.dim();
    const Eigen::Index sites = spec.site_count();
    const StepOperators ops = step_operators(scheme, spec);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
    for (const Leg& leg : ops.legs) {
        Eigen::MatrixXcd leg_u = Eigen::MatrixXcd::Identity(d, d);
        if (leg.pre_coin.size() > 0)
            leg_u = kron(leg.pre_coin, Eigen::MatrixXcd::Identity(sites, sites));
        Eigen::MatrixXcd perm_dense = Eigen::MatrixXcd::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i) perm_dense(leg.shift.indices()[i], i) = 1.0;
        leg_u = perm_dense * leg_u;
        if (leg.post_coin.size() > 0)
            leg_u = kron(leg.post_coin, Eigen::MatrixXcd::Identity(sites, sites)) * leg_u;
        u = leg_u * u;
    }
    return u;
}

}  // namespace qwalk
