#pragma once

#include <Eigen/Core>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

// Eigendecomposition of -Delta_mu in the mu-weighted inner product.
// alphas are ascending with multiplicity; column k of eigfuncs is the scalar
// eigenfunction v_k with int v_i v_j dmu = delta_ij. The operator acts
// componentwise, so vector-valued functions reuse the same n scalar pairs.
struct SpectralDecomposition {
    Eigen::VectorXd alphas;
    Eigen::MatrixXd eigfuncs;    // n x n, column k = v_k
    Eigen::VectorXd mu;          // measure the basis is orthonormal under
    double zero_tol = 0.0;       // threshold classifying zero eigenvalues
    int zero_count = 0;          // number of alphas <= zero_tol

    int size() const { return static_cast<int>(alphas.size()); }
    bool connected() const { return zero_count == 1; }
    double lambda_max() const { return alphas(alphas.size() - 1); }
};

// Result of the largest-eigenvalue bound check lambda_N <= 2 M_max.
struct LambdaMaxCheck {
    double lambda_max = 0.0;
    double bound = 0.0;  // 2 M_max
    bool holds = false;
};

SpectralDecomposition eigendecompose(const WeightedGraph& g);

// Smallest eigenvalue above zero_tol; requires a connected graph.
double spectral_gap(const SpectralDecomposition& sd);

LambdaMaxCheck lambda_max_check(const WeightedGraph& g,
                                const SpectralDecomposition& sd);

// True iff |lambda_N - 2| <= 1e-8. Requires connected and sub-stochastic.
bool bipartite_spectral_test(const WeightedGraph& g,
                             const SpectralDecomposition& sd);

// C(k,c) = int v_k f_c dmu. Reconstruction sum_k C(k,c) v_k recovers f.
Eigen::MatrixXd spectral_coefficients(const SpectralDecomposition& sd,
                                      const NodeFunction& f);

// int ||grad^m f||^2 dmu = sum_{k,c} alpha_k^m C(k,c)^2, with the zero modes
// excluded at m = 0 (the centered zero-order convention).
double spectral_energy(const SpectralDecomposition& sd, const NodeFunction& f,
                       int m);

}  // namespace graphcalc
