#pragma once

#include <Eigen/Core>
#include <optional>

#include "qwalk/partial_trace.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

// Eigendecomposition refined to rank-one projectors.  Degenerate eigenvalues
// (gap below 1e-10 relative to the spectral radius, floored at 1) are
// resolved deterministically: the standard basis vectors are projected onto
// the degenerate subspace in ascending index order and orthonormalized,
// discarding residuals with norm <= 1e-12.  With a simple spectrum this
// reduces to the eigenbasis itself (up to phases, which no projector sees).
struct SpectralResolution {
    Eigen::VectorXd eigenvalues;  // ascending; entry j belongs to basis column j
    Eigen::MatrixXcd basis;       // unitary; column j spans the j-th rank-one projector
};

SpectralResolution spectral_resolution(const Eigen::MatrixXcd& hermitian);

// Entropy in bits.  Eigenvalues in [-1e-8, 0) are clamped to zero; anything
// below -1e-8 signals a broken state upstream and throws invariant_error.
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);
double shannon_entropy(const Eigen::VectorXd& probabilities);
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

Eigen::MatrixXcd trace_out_first(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                 Eigen::Index dim_b);
Eigen::MatrixXcd trace_out_second(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                  Eigen::Index dim_b);

double mutual_information(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                          Eigen::Index dim_b);

// Dephasing in the product of the refined marginal eigenbases.
Eigen::MatrixXcd measurement_channel(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                     Eigen::Index dim_b);

// Total and post-measurement mutual information; their difference is the
// measurement-induced disturbance.
struct MidBreakdown {
    double total_mi = 0.0;
    double classical_mi = 0.0;

    double raw() const { return total_mi - classical_mi; }
    double value() const { return raw() > 0.0 ? raw() : 0.0; }
};

MidBreakdown mid_breakdown(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                           Eigen::Index dim_b);
double mid(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a, Eigen::Index dim_b);

// Walk-level wrappers.  Subsystems missing from the bipartition are traced
// out first; the kept factors are reordered side A then side B.
double mutual_information(const DensityOperator& rho, const Bipartition& split);
Eigen::MatrixXcd measurement_channel(const DensityOperator& rho, const Bipartition& split);
MidBreakdown mid_breakdown(const DensityOperator& rho, const Bipartition& split);
double mid(const DensityOperator& rho, const Bipartition& split);

// Disturbance between the coin and the position factor.
MidBreakdown mid_pp_breakdown(const DensityOperator& rho);
double mid_pp(const DensityOperator& rho);
double mid_pp(const PureState& psi);

// Disturbance between the two spatial axes after tracing out the coin.
MidBreakdown mid_xy_breakdown(const DensityOperator& rho);
double mid_xy(const DensityOperator& rho);
double mid_xy(const PureState& psi);

// Noisy-to-noiseless correlation ratio; empty when the noiseless value
// vanishes (below 1e-12), as it does for the four-state walk's first step.
std::optional<double> robustness_ratio(double q_noisy, double q_noiseless);

}  // namespace qwalk
