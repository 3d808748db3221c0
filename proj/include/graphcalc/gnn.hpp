#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

enum class Arch { gcn, gat };
enum class Activation { identity, relu };

// Untrained message-passing stack X^{l+1} = phi(P^l X^l W^l). gcn uses the
// fixed degree-symmetrized aggregation of the topology; gat rebuilds P^l each
// layer from attention scores on the current features.
struct LayerStack {
    Arch arch = Arch::gcn;
    int depth = 0;
    std::vector<int> dims;                  // depth + 1 widths
    std::vector<Eigen::MatrixXd> weights;   // weights[l]: dims[l] x dims[l+1]
    std::vector<Eigen::VectorXd> attn;      // gat only, attn[l]: 2 * dims[l]
    Activation activation = Activation::relu;
    std::uint64_t seed = 0;
};

LayerStack init_stack(Arch arch, int depth, const std::vector<int>& dims,
                      std::uint64_t seed, Activation activation);

struct OversmoothReport {
    std::map<int, std::map<int, double>> energies_by_depth;  // depth -> m -> E_m
    double log_slope = 0.0;         // fitted slope of log E_1 vs depth
    double theoretical_rate = 0.0;  // 1 - (2 - lambda_N) lambda_1, NaN if unknown

    // First depth with E_1 below threshold, or -1 if none.
    int depth_below(double threshold) const;
};

// Slope fit over the final tail_fraction of the depths whose E_1 survived
// underflow filtering (values below 1e-300 are dropped before the fit).
OversmoothReport oversmooth_report(
    const std::map<int, std::map<int, double>>& energies_by_depth,
    double tail_fraction,
    double theoretical_rate = std::numeric_limits<double>::quiet_NaN());

struct ForwardResult {
    NodeFunction final;
    OversmoothReport report;
    std::vector<NodeFunction> snapshots;  // depth 0..L when requested
};

// Runs the stack on X0 over the given topology. Energies are recorded after
// every layer (depth 0 included) against the fixed self-loop random-walk
// graph of the topology, for both architectures, so depth curves from gcn and
// gat are comparable and the theoretical rate refers to one operator. Order 1
// is always recorded in addition to record_orders; the slope fit needs it.
ForwardResult forward(const Topology& topology, const LayerStack& stack,
                      const NodeFunction& X0,
                      const std::vector<int>& record_orders,
                      bool record_snapshots = false);

}  // namespace graphcalc
