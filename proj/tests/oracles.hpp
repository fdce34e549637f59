// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <Eigen/Core>
#include <complex>
#include <random>

#include "qwalk/state.hpp"

namespace qwalk::testing {

// Position distribution of the classical walker taking one of the four
// diagonal moves with probability 1/4 each step, by explicit enumeration of
// all 4^t paths.
inline Eigen::MatrixXd classical_diagonal_walk(int t) {
    Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(2 * t + 1, 2 * t + 1);
    const long paths = 1L << (2 * t);
    for (long path = 0; path < paths; ++path) {
        int x = 0, y = 0;
        for (int step = 0; step < t; ++step) {
            x += (path >> (2 * step)) & 1 ? 1 : -1;
            y += (path >> (2 * step + 1)) & 1 ? 1 : -1;
        }
        dist(x + t, y + t) += 1.0 / static_cast<double>(paths);
    }
    return dist;
}

// Coin-traced operator on the position factor, written with its own index
// arithmetic as a cross-check of the library partial trace.
inline Eigen::MatrixXcd coin_traced_xy_oracle(const DensityOperator& rho) {
    const int l = rho.spec.extent();
    const Eigen::Index sites = static_cast<Eigen::Index>(l) * l;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sites, sites);
    for (Eigen::Index r = 0; r < sites; ++r)
        for (Eigen::Index c = 0; c < sites; ++c)
            for (int coin = 0; coin < rho.spec.coin_dim; ++coin)
                out(r, c) += rho.matrix(coin * sites + r, coin * sites + c);
    return out;
}

inline Eigen::VectorXcd random_unit_vector(Eigen::Index n, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = std::complex<double>(gauss(rng), gauss(rng));
    return v / v.norm();
}

// Full-rank mixture of random pure states.
inline Eigen::MatrixXcd random_density_matrix(Eigen::Index n, std::mt19937& rng) {
    std::uniform_real_distribution<double> uniform(0.1, 1.0);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    double total = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
        const double w = uniform(rng);
        const Eigen::VectorXcd v = random_unit_vector(n, rng);
        rho += w * (v * v.adjoint());
        total += w;
    }
    return rho / total;
}

// Normalized state with support inside |x|, |y| <= radius, steps_taken set
// so one more step stays inside the lattice.
inline PureState random_walk_state(const HilbertSpec& spec, int radius, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(spec.dim());
    for (int c = 0; c < spec.coin_dim; ++c)
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                amps[spec.flat_index(c, x, y)] = std::complex<double>(gauss(rng), gauss(rng));
    amps /= amps.norm();
    return PureState{spec, std::move(amps), radius};
}

}  // namespace qwalk::testing
