#pragma once

#include <Eigen/Core>

#include "qwalk/hilbert.hpp"

namespace qwalk {

// Amplitude vector over coin ⊗ x ⊗ y in the flat ordering of HilbertSpec.
// `steps_taken` counts walk steps already applied, so the support bound
// |x|,|y| <= steps_taken stays checkable and stepping past the lattice
// budget is an error.
struct PureState {
    HilbertSpec spec;
    Eigen::VectorXcd amplitudes;
    int steps_taken = 0;

    double norm_error() const { return std::abs(amplitudes.squaredNorm() - 1.0); }
};

struct DensityOperator {
    HilbertSpec spec;
    Eigen::MatrixXcd matrix;

    double trace_error() const { return std::abs(matrix.trace() - std::complex<double>(1.0)); }
    double purity() const { return matrix.squaredNorm(); }  // tr(rho^2) for Hermitian rho
};

// Position marginal P(x, y); probabilities(x + steps, y + steps).
struct Distribution {
    HilbertSpec spec;
    Eigen::MatrixXd probabilities;

    double at(int x, int y) const { return probabilities(x + spec.steps, y + spec.steps); }
    double sum() const { return probabilities.sum(); }
};

PureState to_pure(const HilbertSpec& spec, const Eigen::VectorXcd& amplitudes, int steps_taken = 0);
DensityOperator to_density(const PureState& state);

Distribution marginal_distribution(const PureState& state);
Distribution marginal_distribution(const DensityOperator& rho);

// Copy a state into a lattice with a larger step budget, origin-aligned.
PureState embedded(const PureState& state, const HilbertSpec& target);

double max_deviation(const Distribution& a, const Distribution& b);

// Throw invariant_error when the state violates its construction invariants.
void validate(const PureState& state, double tol = 1e-12);
// PSD is checked only when `check_psd` is set (it needs a full spectrum).
void validate(const DensityOperator& rho, bool check_psd = false);
void validate(const Distribution& dist, double tol = 1e-12);

double min_eigenvalue(const Eigen::MatrixXcd& hermitian);

}  // namespace qwalk
