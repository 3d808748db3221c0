#pragma once

#include <Eigen/Core>

#include "graphcalc/graph.hpp"

namespace graphcalc {

// A vector-valued function on the nodes: row i = f(i) in R^d.
using NodeFunction = Eigen::MatrixXd;

// Throws DimensionMismatch unless f has g.node_count() rows and d >= 1.
void check_shape(const WeightedGraph& g, const NodeFunction& f);

// integral of f over V: sum_i f(i) mu_i, componentwise.
Eigen::RowVectorXd integrate(const WeightedGraph& g, const NodeFunction& f);

// (1/2) sum_i sum_{j in N_i} omega_ij (f(j)-f(i)) . (h(j)-h(i)).
// Partial sums are accumulated per node and reduced in ascending node order,
// so the result does not depend on the number of threads.
double gradient_inner(const WeightedGraph& g, const NodeFunction& f,
                      const NodeFunction& h);

// ( sum_{j in N_i} omega_ij ||f(j)-f(i)||_p^p / (2 mu_i) )^{1/p}, p >= 1.
double gradient_p_norm_at(const WeightedGraph& g, const NodeFunction& f, int node,
                          double p);

// (Delta_mu f)(i) = sum_{j in N_i} omega_ij (f(j)-f(i)) / mu_i.
NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f);

// integral of ||f||_2^2 over V: sum_i mu_i ||f(i)||^2.
double squared_norm_mu(const WeightedGraph& g, const NodeFunction& f);

// | int Delta f . h dmu + int grad f . grad h dmu |, computed from the two
// independent code paths (laplacian_apply+integrate vs gradient_inner).
double ibp_residual(const WeightedGraph& g, const NodeFunction& f,
                    const NodeFunction& h);

}  // namespace graphcalc
