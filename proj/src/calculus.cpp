#include "graphcalc/calculus.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace graphcalc {

void check_shape(const WeightedGraph& g, const NodeFunction& f) {
    if (f.rows() != g.node_count()) {
        throw DimensionMismatch("function has " + std::to_string(f.rows()) +
                                " rows for " + std::to_string(g.node_count()) +
                                " nodes");
    }
    if (f.cols() < 1) {
        throw DimensionMismatch("function must have at least one column");
    }
}

Eigen::RowVectorXd integrate(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    const int n = g.node_count();
    const int d = static_cast<int>(f.cols());
    Eigen::RowVectorXd out = Eigen::RowVectorXd::Zero(d);
    // column-parallel; each column is summed in ascending node order
    #pragma omp parallel for schedule(static)
    for (int c = 0; c < d; ++c) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += f(i, c) * g.mu(i);
        out(c) = acc;
    }
    return out;
}

double gradient_inner(const WeightedGraph& g, const NodeFunction& f,
                      const NodeFunction& h) {
    check_shape(g, f);
    check_shape(g, h);
    if (f.cols() != h.cols()) {
        throw DimensionMismatch("functions have different widths");
    }
    const int n = g.node_count();
    std::vector<double> partial(n, 0.0);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const int j = nbrs[k];
            acc += wts[k] * (f.row(j) - f.row(i)).dot(h.row(j) - h.row(i));
        }
        partial[i] = acc;
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += partial[i];
    return 0.5 * total;
}

double gradient_p_norm_at(const WeightedGraph& g, const NodeFunction& f, int node,
                          double p) {
    check_shape(g, f);
    if (node < 0 || node >= g.node_count()) {
        throw IndexOutOfRange("node " + std::to_string(node) + " out of range");
    }
    if (!(p >= 1.0)) {
        throw InvalidP("gradient p-norm requires p >= 1, got " + std::to_string(p));
    }
    const auto nbrs = g.neighbors(node);
    const auto wts = g.weights(node);
    double acc = 0.0;
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const Eigen::RowVectorXd diff = f.row(nbrs[k]) - f.row(node);
        double lp = 0.0;
        for (int c = 0; c < diff.size(); ++c) lp += std::pow(std::abs(diff(c)), p);
        acc += wts[k] * lp;
    }
    return std::pow(acc / (2.0 * g.mu(node)), 1.0 / p);
}

NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    const int n = g.node_count();
    NodeFunction out(n, f.cols());
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        out.row(i).setZero();
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            out.row(i) += wts[k] * (f.row(nbrs[k]) - f.row(i));
        }
        out.row(i) /= g.mu(i);
    }
    return out;
}

double squared_norm_mu(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    const int n = g.node_count();
    std::vector<double> partial(n, 0.0);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        partial[i] = g.mu(i) * f.row(i).squaredNorm();
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += partial[i];
    return total;
}

double ibp_residual(const WeightedGraph& g, const NodeFunction& f,
                    const NodeFunction& h) {
    const NodeFunction lf = laplacian_apply(g, f);
    const int n = g.node_count();
    std::vector<double> partial(n, 0.0);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        partial[i] = g.mu(i) * lf.row(i).dot(h.row(i));
    }
    double lap_path = 0.0;
    for (int i = 0; i < n; ++i) lap_path += partial[i];
    return std::abs(lap_path + gradient_inner(g, f, h));
}

}  // namespace graphcalc
