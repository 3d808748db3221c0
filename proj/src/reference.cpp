#include "graphcalc/reference.hpp"

namespace graphcalc::reference {

Eigen::RowVectorXd integrate(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    Eigen::RowVectorXd out = Eigen::RowVectorXd::Zero(f.cols());
    for (int i = 0; i < g.node_count(); ++i) out += g.mu(i) * f.row(i);
    return out;
}

double gradient_inner(const WeightedGraph& g, const NodeFunction& f,
                      const NodeFunction& h) {
    check_shape(g, f);
    check_shape(g, h);
    double acc = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const int j = nbrs[k];
            for (int c = 0; c < f.cols(); ++c) {
                acc += wts[k] * (f(j, c) - f(i, c)) * (h(j, c) - h(i, c));
            }
        }
    }
    return 0.5 * acc;
}

NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    NodeFunction out = NodeFunction::Zero(f.rows(), f.cols());
    for (int i = 0; i < g.node_count(); ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const int j = nbrs[k];
            for (int c = 0; c < f.cols(); ++c) {
                out(i, c) += wts[k] * (f(j, c) - f(i, c));
            }
        }
        for (int c = 0; c < f.cols(); ++c) out(i, c) /= g.mu(i);
    }
    return out;
}

double squared_norm_mu(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    double acc = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        for (int c = 0; c < f.cols(); ++c) acc += g.mu(i) * f(i, c) * f(i, c);
    }
    return acc;
}

}  // namespace graphcalc::reference
