#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"

namespace testsupport {

using graphcalc::NodeFunction;
using graphcalc::Topology;
using graphcalc::WeightedEdge;
using graphcalc::WeightedGraph;

using Rng = std::mt19937_64;

inline bool has_edge(const Topology& t, int u, int v) {
    for (const auto& [a, b] : t.edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

inline int pick_index(Rng& rng, std::size_t size) {
    return static_cast<int>(
        std::uniform_int_distribution<std::size_t>(0, size - 1)(rng));
}

namespace detail {

inline void add_extra_edges(Rng& rng, Topology& t, std::vector<int>& deg,
                            int max_degree, int extra,
                            const std::vector<int>* side) {
    std::uniform_int_distribution<int> pick(0, t.n - 1);
    int added = 0;
    for (int tries = 0; added < extra && tries < 20 * (extra + 1); ++tries) {
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
        if (side && (*side)[u] == (*side)[v]) continue;
        if (has_edge(t, u, v)) continue;
        t.edges.emplace_back(std::min(u, v), std::max(u, v));
        ++deg[u];
        ++deg[v];
        ++added;
    }
}

}  // namespace detail

// Random spanning tree plus a few extra edges, degrees capped at max_degree.
inline Topology random_topology(Rng& rng, int n, int max_degree = 4,
                                int extra = 2) {
    Topology t;
    t.n = n;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> cand;
        for (int u = 0; u < v; ++u)
            if (deg[u] < max_degree) cand.push_back(u);
        if (cand.empty())
            for (int u = 0; u < v; ++u) cand.push_back(u);
        const int u = cand[static_cast<std::size_t>(pick_index(rng, cand.size()))];
        t.edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    detail::add_extra_edges(rng, t, deg, max_degree, extra, nullptr);
    return t;
}

// Connected and 2-colorable by construction: the tree and every extra edge
// cross a random bipartition.
inline Topology random_bipartite_topology(Rng& rng, int n, int max_degree = 4,
                                          int extra = 2) {
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = coin(rng);
    side[0] = 0;
    if (n > 1) side[1] = 1;

    Topology t;
    t.n = n;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) {
        auto collect = [&](bool capped) {
            std::vector<int> cand;
            for (int u = 0; u < v; ++u)
                if (side[u] != side[v] && (!capped || deg[u] < max_degree))
                    cand.push_back(u);
            return cand;
        };
        std::vector<int> cand = collect(true);
        if (cand.empty()) {
            side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(v)];
            cand = collect(true);
        }
        if (cand.empty()) cand = collect(false);
        const int u = cand[static_cast<std::size_t>(pick_index(rng, cand.size()))];
        t.edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    detail::add_extra_edges(rng, t, deg, max_degree, extra, &side);
    return t;
}

// Connected with a triangle on nodes {0,1,2}, so never 2-colorable. n >= 3.
inline Topology random_nonbipartite_topology(Rng& rng, int n,
                                             int max_degree = 4,
                                             int extra = 2) {
    Topology t;
    t.n = n;
    t.edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    deg[0] = deg[1] = deg[2] = 2;
    for (int v = 3; v < n; ++v) {
        std::vector<int> cand;
        for (int u = 0; u < v; ++u)
            if (deg[u] < max_degree) cand.push_back(u);
        if (cand.empty())
            for (int u = 0; u < v; ++u) cand.push_back(u);
        const int u = cand[static_cast<std::size_t>(pick_index(rng, cand.size()))];
        t.edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    detail::add_extra_edges(rng, t, deg, max_degree, extra, nullptr);
    return t;
}

enum class MeasureKind {
    balanced,        // mu = mu1 * U[0.5, 2]; keeps M_max <= 2
    sub_stochastic,  // mu = mu1 * (1 + U[0, 1]); strictly below the boundary
    boundary,        // mu = mu1 bit for bit; the lazy walk is stochastic
};

// Weights U[0.5, 2] on the given topology plus a measure of the chosen kind.
// The boundary kind sums incident weights in ascending neighbor order, which
// is exactly how the graph itself accumulates weighted degrees.
inline WeightedGraph weighted_graph(Rng& rng, const Topology& topo,
                                    MeasureKind kind) {
    std::uniform_real_distribution<double> wdist(0.5, 2.0);
    std::vector<WeightedEdge> edges;
    edges.reserve(topo.edges.size());
    for (const auto& [u, v] : topo.edges) edges.push_back({u, v, wdist(rng)});

    std::vector<std::vector<std::pair<int, double>>> inc(
        static_cast<std::size_t>(topo.n));
    for (const auto& e : edges) {
        inc[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        inc[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    }
    std::vector<double> mu(static_cast<std::size_t>(topo.n));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < topo.n; ++i) {
        auto& row = inc[static_cast<std::size_t>(i)];
        std::sort(row.begin(), row.end());
        double s = 0.0;
        for (const auto& [j, w] : row) s += w;
        switch (kind) {
            case MeasureKind::balanced:
                mu[static_cast<std::size_t>(i)] = s * wdist(rng);
                break;
            case MeasureKind::sub_stochastic:
                mu[static_cast<std::size_t>(i)] = s * (1.0 + u01(rng));
                break;
            case MeasureKind::boundary:
                mu[static_cast<std::size_t>(i)] = s;
                break;
        }
    }
    return graphcalc::build_graph(topo.n, edges, std::move(mu));
}

inline NodeFunction gaussian(Rng& rng, int n, int d) {
    std::normal_distribution<double> g(0.0, 1.0);
    NodeFunction x(n, d);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < d; ++c) x(i, c) = g(rng);
    return x;
}

inline WeightedGraph path2() {
    return graphcalc::build_graph(2, {{0, 1, 1.0}}, {1.0, 1.0});
}

inline Topology k3_topology() {
    return {3, {{0, 1}, {0, 2}, {1, 2}}};
}

inline Topology k22_topology() {
    return {4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
}

}  // namespace testsupport
