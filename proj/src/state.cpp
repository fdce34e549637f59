#include "qwalk/state.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

PureState to_pure(const HilbertSpec& spec, const Eigen::VectorXcd& amplitudes, int steps_taken) {
    if (amplitudes.size() != spec.dim())
        throw config_error("to_pure: amplitude length " + std::to_string(amplitudes.size()) +
                           " does not match dimension " + std::to_string(spec.dim()));
    return PureState{spec, amplitudes, steps_taken};
}

DensityOperator to_density(const PureState& state) {
    return DensityOperator{state.spec, state.amplitudes * state.amplitudes.adjoint()};
}

Distribution marginal_distribution(const PureState& state) {
    const int l = state.spec.extent();
    const Eigen::Index sites = state.spec.site_count();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(l, l);
    for (int c = 0; c < state.spec.coin_dim; ++c) {
        const auto slice = state.amplitudes.segment(c * sites, sites);
        for (Eigen::Index s = 0; s < sites; ++s)
            p(static_cast<int>(s / l), static_cast<int>(s % l)) += std::norm(slice[s]);
    }
    return Distribution{state.spec, std::move(p)};
}

Distribution marginal_distribution(const DensityOperator& rho) {
    const int l = rho.spec.extent();
    const Eigen::Index sites = rho.spec.site_count();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(l, l);
    for (int c = 0; c < rho.spec.coin_dim; ++c)
        for (Eigen::Index s = 0; s < sites; ++s) {
            const Eigen::Index i = c * sites + s;
            p(static_cast<int>(s / l), static_cast<int>(s % l)) += rho.matrix(i, i).real();
        }
    return Distribution{rho.spec, std::move(p)};
}

PureState embedded(const PureState& state, const HilbertSpec& target) {
    if (target.coin_dim != state.spec.coin_dim)
        throw config_error("embedded: coin dimension mismatch");
    if (target.steps < state.spec.steps)
        throw config_error("embedded: target lattice smaller than source");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(target.dim());
    const int t = state.spec.steps;
    for (int c = 0; c < state.spec.coin_dim; ++c)
        for (int x = -t; x <= t; ++x)
            for (int y = -t; y <= t; ++y)
                amps[target.flat_index(c, x, y)] = state.amplitudes[state.spec.flat_index(c, x, y)];
    return PureState{target, std::move(amps), state.steps_taken};
}

double max_deviation(const Distribution& a, const Distribution& b) {
    if (a.spec.extent() == b.spec.extent())
        return (a.probabilities - b.probabilities).cwiseAbs().maxCoeff();
    // different lattice sizes: compare on the union of supports
    const int t = std::max(a.spec.steps, b.spec.steps);
    double dev = 0.0;
    for (int x = -t; x <= t; ++x)
        for (int y = -t; y <= t; ++y) {
            const double pa = a.spec.in_lattice(x, y) ? a.at(x, y) : 0.0;
            const double pb = b.spec.in_lattice(x, y) ? b.at(x, y) : 0.0;
            dev = std::max(dev, std::abs(pa - pb));
        }
    return dev;
}

void validate(const PureState& state, double tol) {
    if (state.amplitudes.size() != state.spec.dim())
        throw invariant_error("pure state: amplitude length does not match dimension");
    const double err = state.norm_error();
    if (!(err <= tol))
        throw invariant_error("pure state: norm error " + std::to_string(err));
    const int s = state.steps_taken;
    if (s < state.spec.steps) {
        for (int c = 0; c < state.spec.coin_dim; ++c)
            for (int x = -state.spec.steps; x <= state.spec.steps; ++x)
                for (int y = -state.spec.steps; y <= state.spec.steps; ++y)
                    if ((std::abs(x) > s || std::abs(y) > s) &&
                        state.amplitudes[state.spec.flat_index(c, x, y)] != 0.0)
                        throw invariant_error("pure state: support outside step bound");
    }
}

void validate(const DensityOperator& rho, bool check_psd) {
    if (rho.matrix.rows() != rho.spec.dim() || rho.matrix.cols() != rho.spec.dim())
        throw invariant_error("density operator: shape does not match dimension");
    const double tr_err = rho.trace_error();
    if (!(tr_err <= 1e-12))
        throw invariant_error("density operator: trace error " + std::to_string(tr_err));
    const double herm = hermiticity_defect(rho.matrix);
    if (!(herm <= 1e-12))
        throw invariant_error("density operator: Hermiticity defect " + std::to_string(herm));
    if (check_psd) {
        const double lambda_min = min_eigenvalue(rho.matrix);
        if (!(lambda_min >= -1e-10))
            throw invariant_error("density operator: negative eigenvalue " +
                                  std::to_string(lambda_min));
    }
}

void validate(const Distribution& dist, double tol) {
    if (dist.probabilities.minCoeff() < 0.0)
        throw invariant_error("distribution: negative probability");
    const double err = std::abs(dist.sum() - 1.0);
    if (!(err <= tol))
        throw invariant_error("distribution: normalization error " + std::to_string(err));
}

double min_eigenvalue(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace qwalk
