#pragma once

#include "graphcalc/calculus.hpp"

namespace graphcalc::reference {

// Serial reference implementations of the calculus kernels. These stay
// deliberately close to the definitions (plain nested loops, no threading)
// and are used by the parity tests and the kernel benchmark.

Eigen::RowVectorXd integrate(const WeightedGraph& g, const NodeFunction& f);
double gradient_inner(const WeightedGraph& g, const NodeFunction& f,
                      const NodeFunction& h);
NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f);
double squared_norm_mu(const WeightedGraph& g, const NodeFunction& f);

}  // namespace graphcalc::reference
