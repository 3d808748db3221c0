#include "graphcalc/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "graphcalc/errors.hpp"

namespace graphcalc {

SpectralDecomposition eigendecompose(const WeightedGraph& g) {
    const int n = g.node_count();

    // Conjugate by M^{1/2}: S = M^{-1/2} (D - W) M^{-1/2} is symmetric and
    // shares eigenvalues with -Delta_mu. Off-diagonal fill is dense-friendly
    // at the sizes we target, and the symmetric solver is the stable path.
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd inv_sqrt_mu(n);
    for (int i = 0; i < n; ++i) inv_sqrt_mu(i) = 1.0 / std::sqrt(g.mu(i));
    for (int i = 0; i < n; ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        double diag = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const int j = nbrs[k];
            diag += wts[k];
            s(i, j) = -wts[k] * inv_sqrt_mu(i) * inv_sqrt_mu(j);
        }
        s(i, i) = diag * inv_sqrt_mu(i) * inv_sqrt_mu(i);
    }
    // Symmetrize away the last-bit asymmetry from the two multiply orders.
    s = 0.5 * (s + s.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("eigendecomposition did not converge");

    SpectralDecomposition sd;
    sd.alphas = solver.eigenvalues();
    sd.eigfuncs = inv_sqrt_mu.asDiagonal() * solver.eigenvectors();
    sd.mu = Eigen::Map<const Eigen::VectorXd>(g.mu_vec().data(), n);
    sd.zero_tol = 1e-9 * std::max(1.0, sd.alphas(n - 1));
    sd.zero_count = 0;
    for (int k = 0; k < n; ++k)
        if (sd.alphas(k) <= sd.zero_tol) ++sd.zero_count;
    return sd;
}

double spectral_gap(const SpectralDecomposition& sd) {
    if (sd.zero_count != 1)
        throw DisconnectedGraph("spectral gap needs exactly one zero mode, got " +
                                std::to_string(sd.zero_count));
    if (sd.zero_count >= sd.size())
        throw PreconditionViolated("no positive eigenvalues");
    return sd.alphas(sd.zero_count);
}

LambdaMaxCheck lambda_max_check(const WeightedGraph& g,
                                const SpectralDecomposition& sd) {
    LambdaMaxCheck r;
    r.lambda_max = sd.lambda_max();
    r.bound = 2.0 * g.m_max();
    r.holds = r.lambda_max <= r.bound + 1e-9;
    return r;
}

bool bipartite_spectral_test(const WeightedGraph& g,
                             const SpectralDecomposition& sd) {
    if (!g.sub_stochastic())
        throw PreconditionViolated(
            "spectral bipartiteness test needs sum_j omega_ij <= mu_i");
    if (!sd.connected())
        throw PreconditionViolated(
            "spectral bipartiteness test needs a connected graph");
    return std::abs(sd.lambda_max() - 2.0) <= 1e-8;
}

Eigen::MatrixXd spectral_coefficients(const SpectralDecomposition& sd,
                                      const NodeFunction& f) {
    if (f.rows() != sd.size())
        throw DimensionMismatch("function has " + std::to_string(f.rows()) +
                                " rows, decomposition has " +
                                std::to_string(sd.size()));
    return sd.eigfuncs.transpose() * (sd.mu.asDiagonal() * f);
}

double spectral_energy(const SpectralDecomposition& sd, const NodeFunction& f,
                       int m) {
    if (m < 0) throw NegativeOrder("derivative order " + std::to_string(m));
    const Eigen::MatrixXd c = spectral_coefficients(sd, f);
    double total = 0.0;
    for (int k = 0; k < sd.size(); ++k) {
        // Treat near-zero modes as exactly zero so m = 0 drops them instead
        // of weighting them by alpha^0 = 1.
        const double alpha = sd.alphas(k) <= sd.zero_tol ? 0.0 : sd.alphas(k);
        const double factor = alpha > 0.0 ? std::pow(alpha, m) : 0.0;
        if (factor == 0.0) continue;
        total += factor * c.row(k).squaredNorm();
    }
    return total;
}

}  // namespace graphcalc
