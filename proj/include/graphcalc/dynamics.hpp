#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/spectral.hpp"

namespace graphcalc {

// One decay bound at a single time or step count. slack = rate - observed;
// vacuous marks rate >= 1, where the bound rules nothing out (bipartite
// walks) but is still checked.
struct DecayCertificate {
    double abscissa = 0.0;  // t for heat flow, k for walks
    double rate = 0.0;      // theoretical factor
    double observed = 0.0;  // measured energy ratio
    double slack = 0.0;
    bool satisfied = false;
    bool vacuous = false;
};

struct TrajectorySample {
    double abscissa = 0.0;
    std::map<int, double> energies;  // m -> E_m
    std::optional<NodeFunction> snapshot;
};

struct Trajectory {
    enum class Kind { heat_exact, heat_euler, walk, sym_walk };
    Kind kind = Kind::heat_exact;
    std::vector<TrajectorySample> samples;
};

// Exact heat flow d f/dt = Lap f via the spectral solution. t = 0 returns f0
// unchanged; constants are fixed points.
NodeFunction heat_evolve(const WeightedGraph& g, const SpectralDecomposition& sd,
                         const NodeFunction& f0, double t);

// Explicit Euler cross-check: f <- f + dt * Lap f, t / dt steps. Stable for
// dt <= 1/M_max (then every multiplier 1 - dt*alpha stays in [-1, 1]); on
// sub-stochastic graphs that admits dt = 1, where one step is exactly one
// random_walk_step.
NodeFunction heat_evolve_euler(const WeightedGraph& g, const NodeFunction& f0,
                               double t, double dt);

// Certificates for int ||grad f_t||^2 <= exp(-2 lambda_1 t) int ||grad f0||^2.
std::vector<DecayCertificate> heat_decay_certificate(
    const WeightedGraph& g, const SpectralDecomposition& sd,
    const NodeFunction& f0, const std::vector<double>& t_list);

// One step of the lazy walk P = I + Lap. Requires sum_j omega_ij <= mu_i.
NodeFunction random_walk_step(const WeightedGraph& g, const NodeFunction& f);

NodeFunction walk_propagate(const WeightedGraph& g, const NodeFunction& f,
                            int k);

// Certificates for the k-step bound with rate (1 - (2 - lambda_N) lambda_1)^k,
// one per k = 1..k_max.
std::vector<DecayCertificate> walk_decay_certificate(
    const WeightedGraph& g, const SpectralDecomposition& sd,
    const NodeFunction& f, int k_max);

struct SymPropagateResult {
    NodeFunction out;
    // Absent when the conjugated initial condition is constant (nothing to
    // bound: the walk holds it fixed).
    std::optional<DecayCertificate> certificate;
};

// k applications of the degree-symmetrized operator M^{1/2} P M^{-1/2},
// realized by conjugating a walk on g. Intended for graphs built with the
// rw_selfloop preset. The certificate bounds the conjugated function's
// gradient energy by the walk rate of g.
SymPropagateResult sym_propagate(const WeightedGraph& g, const NodeFunction& f,
                                 int k);

// Energy traces for the CLI and tests. orders defaults to {0, 1, 2}.
Trajectory heat_trajectory(const WeightedGraph& g,
                           const SpectralDecomposition& sd,
                           const NodeFunction& f0,
                           const std::vector<double>& t_list,
                           const std::vector<int>& orders = {0, 1, 2},
                           bool record_snapshots = false);

Trajectory walk_trajectory(const WeightedGraph& g, const NodeFunction& f0,
                           int k_max,
                           const std::vector<int>& orders = {0, 1, 2},
                           bool record_snapshots = false);

}  // namespace graphcalc
