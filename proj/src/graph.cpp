#include "graphcalc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace graphcalc {

WeightedGraph::WeightedGraph(int n, const std::vector<WeightedEdge>& edges,
                             std::vector<double> mu)
    : n_(n), mu_(std::move(mu)) {
    if (n_ < 1) {
        throw IndexOutOfRange("node count must be >= 1, got " + std::to_string(n_));
    }
    if (static_cast<int>(mu_.size()) != n_) {
        throw DimensionMismatch("measure has " + std::to_string(mu_.size()) +
                                " entries for " + std::to_string(n_) + " nodes");
    }
    for (int i = 0; i < n_; ++i) {
        if (!(mu_[i] > 0.0) || !std::isfinite(mu_[i])) {
            throw NonPositiveWeight("node measure mu[" + std::to_string(i) +
                                    "] = " + std::to_string(mu_[i]));
        }
    }

    std::set<std::pair<int, int>> seen;
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw IndexOutOfRange("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") out of range for n=" +
                                  std::to_string(n_));
        }
        if (e.u == e.v) {
            throw SelfLoopEdge("self-loop at node " + std::to_string(e.u));
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw NonPositiveWeight("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") has weight " +
                                    std::to_string(e.w));
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw DuplicateEdge("edge (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ") listed twice");
        }
        ++deg[e.u];
        ++deg[e.v];
    }

    offsets_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    neighbors_.resize(offsets_[n_]);
    weights_.resize(offsets_[n_]);

    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges) {
        neighbors_[cursor[e.u]] = e.v;
        weights_[cursor[e.u]++] = e.w;
        neighbors_[cursor[e.v]] = e.u;
        weights_[cursor[e.v]++] = e.w;
    }
    // sort each adjacency row by neighbor index
    for (int i = 0; i < n_; ++i) {
        const auto b = offsets_[i], e = offsets_[i + 1];
        std::vector<int> idx(e - b);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int c) {
            return neighbors_[b + a] < neighbors_[b + c];
        });
        std::vector<int> nb(e - b);
        std::vector<double> wb(e - b);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            nb[k] = neighbors_[b + idx[k]];
            wb[k] = weights_[b + idx[k]];
        }
        std::copy(nb.begin(), nb.end(), neighbors_.begin() + b);
        std::copy(wb.begin(), wb.end(), weights_.begin() + b);
    }

    mu1_.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (double w : weights(i)) s += w;
        mu1_[i] = s;
    }
    total_measure_ = std::accumulate(mu_.begin(), mu_.end(), 0.0);
    m_max_ = 0.0;
    for (int i = 0; i < n_; ++i) m_max_ = std::max(m_max_, mu1_[i] / mu_[i]);
    sub_stochastic_ = true;
    for (int i = 0; i < n_; ++i) {
        if (mu1_[i] > mu_[i] * (1.0 + 1e-12)) {
            sub_stochastic_ = false;
            break;
        }
    }
}

double WeightedGraph::weight(int i, int j) const {
    auto nb = neighbors(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j) return 0.0;
    return weights_[offsets_[i] + (it - nb.begin())];
}

WeightedGraph build_graph(int n, const std::vector<WeightedEdge>& edges,
                          std::vector<double> mu) {
    return WeightedGraph(n, edges, std::move(mu));
}

WeightedGraph preset_graph(const Topology& topology, Preset preset) {
    std::vector<WeightedEdge> edges;
    edges.reserve(topology.edges.size());
    std::vector<int> deg(std::max(topology.n, 0), 0);
    for (auto [u, v] : topology.edges) {
        edges.push_back({u, v, 1.0});
        if (u >= 0 && u < topology.n && v >= 0 && v < topology.n && u != v) {
            ++deg[u];
            ++deg[v];
        }
    }
    std::vector<double> mu(topology.n, 1.0);
    switch (preset) {
        case Preset::adj:
        case Preset::adj_selfloop:
            // A+I and A induce the same operator; the I cancels against D+I.
            break;
        case Preset::rw:
            for (int i = 0; i < topology.n; ++i) {
                if (deg[i] == 0) {
                    throw IsolatedNode("node " + std::to_string(i) +
                                       " has degree 0 under rw preset");
                }
                mu[i] = static_cast<double>(deg[i]);
            }
            break;
        case Preset::rw_selfloop:
            for (int i = 0; i < topology.n; ++i) {
                mu[i] = static_cast<double>(deg[i] + 1);
            }
            break;
    }
    return build_graph(topology.n, edges, std::move(mu));
}

WeightedGraph attention_graph(const Eigen::MatrixXd& scores,
                              const Topology& adjacency) {
    const int n = adjacency.n;
    if (scores.rows() != n || scores.cols() != n) {
        throw DimensionMismatch("score matrix is " + std::to_string(scores.rows()) +
                                "x" + std::to_string(scores.cols()) + " for n=" +
                                std::to_string(n));
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(adjacency.edges.size());
    for (auto [u, v] : adjacency.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw IndexOutOfRange("mask edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
        }
        const double eij = scores(u, v), eji = scores(v, u);
        const double scale = std::max({1.0, std::abs(eij), std::abs(eji)});
        if (std::abs(eij - eji) > kSymTol * scale) {
            throw AsymmetricScores("scores e(" + std::to_string(u) + "," +
                                   std::to_string(v) + ")=" + std::to_string(eij) +
                                   " and e(" + std::to_string(v) + "," +
                                   std::to_string(u) + ")=" + std::to_string(eji) +
                                   " differ beyond tolerance");
        }
        // average the two scores so omega is symmetric to the last bit
        edges.push_back({u, v, std::exp(0.5 * (eij + eji))});
    }
    std::vector<double> mu(n);
    std::vector<double> wsum(n, 0.0);
    for (const auto& e : edges) {
        wsum[e.u] += e.w;
        wsum[e.v] += e.w;
    }
    for (int i = 0; i < n; ++i) mu[i] = std::exp(scores(i, i)) + wsum[i];
    return build_graph(n, edges, std::move(mu));
}

std::vector<double> reversible_measure(const Eigen::MatrixXd& P) {
    const int n = static_cast<int>(P.rows());
    if (P.cols() != n || n < 1) {
        throw DimensionMismatch("stochastic matrix must be square");
    }
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (P(i, j) < 0.0) {
                throw PreconditionViolated("P(" + std::to_string(i) + "," +
                                           std::to_string(j) + ") is negative");
            }
            row += P(i, j);
        }
        if (std::abs(row - 1.0) > kRowTol) {
            throw PreconditionViolated("row " + std::to_string(i) + " sums to " +
                                       std::to_string(row));
        }
        for (int j = 0; j < n; ++j) {
            if ((P(i, j) > 0.0) != (P(j, i) > 0.0) && i != j) {
                throw AsymmetricSupport("support of P is not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        ")");
            }
        }
    }

    std::vector<double> mu(n, 0.0);
    std::vector<int> parent(n, -1);
    std::deque<int> queue;
    mu[0] = 1.0;
    parent[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (v == u || P(u, v) <= 0.0 || parent[v] >= 0) continue;
            parent[v] = u;
            mu[v] = mu[u] * P(u, v) / P(v, u);
            queue.push_back(v);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (parent[i] < 0) {
            throw DisconnectedGraph("support graph of P is not connected");
        }
    }

    const double mu_max = *std::max_element(mu.begin(), mu.end());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (P(i, j) <= 0.0) continue;
            const double resid = std::abs(P(i, j) * mu[i] - P(j, i) * mu[j]);
            if (resid > kBalTol * mu_max) {
                throw NotReversible("detailed balance fails on edge (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    "), residual " + std::to_string(resid));
            }
        }
    }

    const double mu_min = *std::min_element(mu.begin(), mu.end());
    for (double& m : mu) m /= mu_min;
    return mu;
}

GraphStats graph_stats(const WeightedGraph& g) {
    const int n = g.node_count();
    GraphStats stats;
    stats.total_measure = g.total_measure();
    stats.m_max = g.m_max();
    stats.sub_stochastic = g.sub_stochastic();
    stats.component_labels.assign(n, -1);

    std::vector<int> color(n, -1);
    bool bipartite = true;
    int components = 0;
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (stats.component_labels[s] >= 0) continue;
        stats.component_labels[s] = components;
        color[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (stats.component_labels[v] < 0) {
                    stats.component_labels[v] = components;
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                }
            }
        }
        ++components;
    }
    stats.component_count = components;
    stats.is_bipartite_structural = bipartite;
    return stats;
}

}  // namespace graphcalc
