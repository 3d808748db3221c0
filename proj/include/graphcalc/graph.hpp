#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "graphcalc/errors.hpp"

namespace graphcalc {

// One undirected edge {u,v} with positive weight.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Unweighted topology: node count plus undirected edge list.
struct Topology {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Weight/measure choices that recover the standard Laplacians.
enum class Preset { adj, adj_selfloop, rw, rw_selfloop };

// Relative tolerances for score symmetry, row-stochasticity and detailed
// balance. All quantities are O(1) after normalization.
inline constexpr double kSymTol = 1e-9;
inline constexpr double kRowTol = 1e-9;
inline constexpr double kBalTol = 1e-9;

// Undirected graph with symmetric positive edge weights and a positive node
// measure. Immutable after construction; adjacency is stored CSR-style with
// neighbor lists sorted ascending, so every operator iterates neighborhoods
// in a fixed order.
class WeightedGraph {
  public:
    WeightedGraph(int n, const std::vector<WeightedEdge>& edges,
                  std::vector<double> mu);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(offsets_[n_]) / 2; }

    double mu(int i) const { return mu_[i]; }
    const std::vector<double>& mu_vec() const { return mu_; }

    // mu1_i = sum of incident edge weights.
    double weighted_degree(int i) const { return mu1_[i]; }
    int degree(int i) const { return static_cast<int>(offsets_[i + 1] - offsets_[i]); }

    double total_measure() const { return total_measure_; }
    double m_max() const { return m_max_; }
    bool sub_stochastic() const { return sub_stochastic_; }

    std::span<const int> neighbors(int i) const {
        return {neighbors_.data() + offsets_[i],
                static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
    }
    std::span<const double> weights(int i) const {
        return {weights_.data() + offsets_[i],
                static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
    }

    // Weight of edge {i,j}, or 0 when absent.
    double weight(int i, int j) const;

  private:
    int n_ = 0;
    std::vector<std::int64_t> offsets_;  // size n+1
    std::vector<int> neighbors_;         // sorted per node
    std::vector<double> weights_;        // aligned with neighbors_
    std::vector<double> mu_;
    std::vector<double> mu1_;
    double total_measure_ = 0.0;
    double m_max_ = 0.0;
    bool sub_stochastic_ = false;
};

// Aggregate structural quantities of a graph.
struct GraphStats {
    double total_measure = 0.0;
    double m_max = 0.0;
    int component_count = 0;
    std::vector<int> component_labels;
    bool is_bipartite_structural = false;
    bool sub_stochastic = false;
};

WeightedGraph build_graph(int n, const std::vector<WeightedEdge>& edges,
                          std::vector<double> mu);

// Standard-Laplacian weight/measure presets on an unweighted topology.
WeightedGraph preset_graph(const Topology& topology, Preset preset);

// Graph induced by softmax attention scores: omega_ij = exp(e_ij) on masked
// entries, mu_i = exp(e_ii) + sum_j omega_ij. Scores must be symmetric on the
// mask within kSymTol; the result is strictly sub-stochastic.
WeightedGraph attention_graph(const Eigen::MatrixXd& scores,
                              const Topology& adjacency);

// Recovers the node measure making a row-stochastic matrix reversible
// (detailed balance P_ij mu_i = P_ji mu_j), normalized so min mu_i = 1.
// Fixes mu at a root, propagates ratios along a BFS spanning tree and checks
// every non-tree edge for Kolmogorov consistency.
std::vector<double> reversible_measure(const Eigen::MatrixXd& P);

GraphStats graph_stats(const WeightedGraph& g);

}  // namespace graphcalc
