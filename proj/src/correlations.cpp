#include "qwalk/correlations.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {
namespace {

constexpr double kEigenvalueFloor = -1e-8;
constexpr double kDegeneracyTol = 1e-10;
constexpr double kRefinementDiscard = 1e-12;

// Measurement statistics q(j*db + k) of rho in the product basis
// basis_a(:,j) ⊗ basis_b(:,k), computed column-wise without forming the
// dephased operator.
Eigen::VectorXd measured_distribution(const Eigen::MatrixXcd& rho,
                                      const Eigen::MatrixXcd& basis_a,
                                      const Eigen::MatrixXcd& basis_b) {
    const Eigen::MatrixXcd w = kron(basis_a, basis_b);
    const Eigen::MatrixXcd t = rho * w;
    return w.conjugate().cwiseProduct(t).colwise().sum().real();
}

double classical_mutual_information(const Eigen::VectorXd& q, Eigen::Index dim_a,
                                    Eigen::Index dim_b) {
    Eigen::VectorXd qa = Eigen::VectorXd::Zero(dim_a);
    Eigen::VectorXd qb = Eigen::VectorXd::Zero(dim_b);
    for (Eigen::Index j = 0; j < dim_a; ++j)
        for (Eigen::Index k = 0; k < dim_b; ++k) {
            qa[j] += q[j * dim_b + k];
            qb[k] += q[j * dim_b + k];
        }
    return shannon_entropy(qa) + shannon_entropy(qb) - shannon_entropy(q);
}

void check_bipartite_dims(const Eigen::MatrixXcd& rho, Eigen::Index dim_a, Eigen::Index dim_b) {
    if (dim_a < 1 || dim_b < 1 || rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b)
        throw config_error("bipartite operator dimensions do not factor as requested");
}

// Map of the walk state as a (position x coin) matrix; column c is coin slice c.
Eigen::Map<const Eigen::MatrixXcd> coin_slices(const PureState& psi) {
    return {psi.amplitudes.data(), psi.spec.site_count(), psi.spec.coin_dim};
}

}  // namespace

SpectralResolution spectral_resolution(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    if (solver.info() != Eigen::Success)
        throw invariant_error("spectral_resolution: eigensolver failed to converge");
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXcd& evecs = solver.eigenvectors();
    const Eigen::Index n = evals.size();
    const double scale = n > 0 ? std::max(1.0, evals.cwiseAbs().maxCoeff()) : 1.0;
    const double tol = kDegeneracyTol * scale;

    SpectralResolution result{evals, Eigen::MatrixXcd(n, n)};
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n && evals[end] - evals[end - 1] <= tol) ++end;
        const Eigen::Index size = end - start;
        if (size == 1) {
            result.basis.col(start) = evecs.col(start);
        } else {
            const auto subspace = evecs.middleCols(start, size);
            Eigen::MatrixXcd refined(n, size);
            Eigen::Index accepted = 0;
            for (Eigen::Index m = 0; m < n && accepted < size; ++m) {
                // projection of e_m onto the degenerate subspace
                Eigen::VectorXcd v = subspace * subspace.row(m).adjoint();
                for (Eigen::Index r = 0; r < accepted; ++r)
                    v -= refined.col(r) * refined.col(r).dot(v);
                const double norm = v.norm();
                if (norm > kRefinementDiscard) refined.col(accepted++) = v / norm;
            }
            // residual directions that no standard basis vector resolved
            for (Eigen::Index c = 0; c < size && accepted < size; ++c) {
                Eigen::VectorXcd v = subspace.col(c);
                for (Eigen::Index r = 0; r < accepted; ++r)
                    v -= refined.col(r) * refined.col(r).dot(v);
                const double norm = v.norm();
                if (norm > kRefinementDiscard) refined.col(accepted++) = v / norm;
            }
            if (accepted != size)
                throw invariant_error("spectral_resolution: degenerate subspace refinement failed");
            result.basis.middleCols(start, size) = refined;
        }
        start = end;
    }
    return result;
}

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double lambda = eigenvalues[i];
        if (lambda < kEigenvalueFloor)
            throw invariant_error("entropy: eigenvalue " + std::to_string(lambda) +
                                  " below tolerance floor");
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s < 0.0 ? 0.0 : s;
}

double shannon_entropy(const Eigen::VectorXd& probabilities) {
    return entropy_of_spectrum(probabilities);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw invariant_error("von_neumann_entropy: eigensolver failed to converge");
    return entropy_of_spectrum(solver.eigenvalues());
}

Eigen::MatrixXcd trace_out_first(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                 Eigen::Index dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_b, dim_b);
    for (Eigen::Index j = 0; j < dim_a; ++j)
        out += rho_ab.block(j * dim_b, j * dim_b, dim_b, dim_b);
    return out;
}

Eigen::MatrixXcd trace_out_second(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                  Eigen::Index dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    Eigen::MatrixXcd out(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
        for (Eigen::Index j = 0; j < dim_a; ++j)
            out(i, j) = rho_ab.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
}

double mutual_information(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                          Eigen::Index dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    return von_neumann_entropy(trace_out_second(rho_ab, dim_a, dim_b)) +
           von_neumann_entropy(trace_out_first(rho_ab, dim_a, dim_b)) -
           von_neumann_entropy(rho_ab);
}

Eigen::MatrixXcd measurement_channel(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                                     Eigen::Index dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    const SpectralResolution sr_a = spectral_resolution(trace_out_second(rho_ab, dim_a, dim_b));
    const SpectralResolution sr_b = spectral_resolution(trace_out_first(rho_ab, dim_a, dim_b));
    const Eigen::MatrixXcd w = kron(sr_a.basis, sr_b.basis);
    const Eigen::VectorXcd diag = (w.adjoint() * rho_ab * w).diagonal();
    return w * diag.asDiagonal() * w.adjoint();
}

MidBreakdown mid_breakdown(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a,
                           Eigen::Index dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    const SpectralResolution sr_a = spectral_resolution(trace_out_second(rho_ab, dim_a, dim_b));
    const SpectralResolution sr_b = spectral_resolution(trace_out_first(rho_ab, dim_a, dim_b));
    const double total = entropy_of_spectrum(sr_a.eigenvalues) +
                         entropy_of_spectrum(sr_b.eigenvalues) - von_neumann_entropy(rho_ab);
    const Eigen::VectorXd q = measured_distribution(rho_ab, sr_a.basis, sr_b.basis);
    return MidBreakdown{total, classical_mutual_information(q, dim_a, dim_b)};
}

double mid(const Eigen::MatrixXcd& rho_ab, Eigen::Index dim_a, Eigen::Index dim_b) {
    return mid_breakdown(rho_ab, dim_a, dim_b).value();
}

namespace {

std::pair<Eigen::MatrixXcd, std::pair<Eigen::Index, Eigen::Index>> split_to_bipartite(
    const DensityOperator& rho, const Bipartition& split) {
    check_bipartition(split);
    std::vector<Subsystem> order = split.side_a;
    order.insert(order.end(), split.side_b.begin(), split.side_b.end());
    return {reduce_subsystems(rho, order),
            {subsystem_dim(rho.spec, split.side_a), subsystem_dim(rho.spec, split.side_b)}};
}

}  // namespace

double mutual_information(const DensityOperator& rho, const Bipartition& split) {
    const auto [mat, dims] = split_to_bipartite(rho, split);
    return mutual_information(mat, dims.first, dims.second);
}

Eigen::MatrixXcd measurement_channel(const DensityOperator& rho, const Bipartition& split) {
    const auto [mat, dims] = split_to_bipartite(rho, split);
    return measurement_channel(mat, dims.first, dims.second);
}

MidBreakdown mid_breakdown(const DensityOperator& rho, const Bipartition& split) {
    const auto [mat, dims] = split_to_bipartite(rho, split);
    return mid_breakdown(mat, dims.first, dims.second);
}

double mid(const DensityOperator& rho, const Bipartition& split) {
    return mid_breakdown(rho, split).value();
}

MidBreakdown mid_pp_breakdown(const DensityOperator& rho) {
    // coin-major layout is already coin ⊗ position
    return mid_breakdown(rho.matrix, rho.spec.coin_dim, rho.spec.site_count());
}

double mid_pp(const DensityOperator& rho) { return mid_pp_breakdown(rho).value(); }

double mid_pp(const PureState& psi) {
    const auto slices = coin_slices(psi);
    const Eigen::MatrixXcd rho_coin = (slices.transpose() * slices.conjugate());
    const Eigen::MatrixXcd rho_pos = slices * slices.adjoint();
    const SpectralResolution sr_a = spectral_resolution(rho_coin);
    const SpectralResolution sr_b = spectral_resolution(rho_pos);
    // pure state: S = 0 and both marginal entropies coincide
    const double total = 2.0 * entropy_of_spectrum(sr_a.eigenvalues);

    const Eigen::Index da = psi.spec.coin_dim, db = psi.spec.site_count();
    const Eigen::MatrixXcd coeff = sr_b.basis.adjoint() * slices * sr_a.basis.conjugate();
    Eigen::VectorXd q(da * db);
    for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) q[j * db + k] = std::norm(coeff(k, j));
    return MidBreakdown{total, classical_mutual_information(q, da, db)}.value();
}

MidBreakdown mid_xy_breakdown(const DensityOperator& rho) {
    const Eigen::MatrixXcd rho_xy = partial_trace(rho, {Subsystem::x, Subsystem::y});
    const Eigen::Index l = rho.spec.extent();
    return mid_breakdown(rho_xy, l, l);
}

double mid_xy(const DensityOperator& rho) { return mid_xy_breakdown(rho).value(); }

double mid_xy(const PureState& psi) {
    const auto slices = coin_slices(psi);
    const Eigen::MatrixXcd rho_xy = slices * slices.adjoint();
    const Eigen::Index l = psi.spec.extent();
    return mid(rho_xy, l, l);
}

std::optional<double> robustness_ratio(double q_noisy, double q_noiseless) {
    if (!(q_noiseless > 1e-12)) return std::nullopt;
    return q_noisy / q_noiseless;
}

}  // namespace qwalk
