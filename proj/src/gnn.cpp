#include "graphcalc/gnn.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "graphcalc/dynamics.hpp"
#include "graphcalc/energy.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/spectral.hpp"

namespace graphcalc {

namespace {

double leaky_relu(double x) { return x >= 0.0 ? x : 0.2 * x; }

NodeFunction activate(const NodeFunction& x, Activation a) {
    if (a == Activation::identity) return x;
    return x.cwiseMax(0.0);
}

}  // namespace

LayerStack init_stack(Arch arch, int depth, const std::vector<int>& dims,
                      std::uint64_t seed, Activation activation) {
    if (depth < 1) throw InvalidDims("depth must be >= 1");
    if (dims.size() != static_cast<std::size_t>(depth) + 1)
        throw InvalidDims("need depth + 1 widths, got " +
                          std::to_string(dims.size()));
    for (int d : dims)
        if (d < 1) throw InvalidDims("widths must be positive");

    LayerStack st;
    st.arch = arch;
    st.depth = depth;
    st.dims = dims;
    st.activation = activation;
    st.seed = seed;
    st.weights.reserve(static_cast<std::size_t>(depth));
    if (arch == Arch::gat) st.attn.reserve(static_cast<std::size_t>(depth));

    std::mt19937_64 rng(seed);
    for (int l = 0; l < depth; ++l) {
        const int din = dims[static_cast<std::size_t>(l)];
        const int dout = dims[static_cast<std::size_t>(l) + 1];
        const double b = std::sqrt(6.0 / (din + dout));
        std::uniform_real_distribution<double> u(-b, b);
        Eigen::MatrixXd w(din, dout);
        for (int i = 0; i < din; ++i)
            for (int j = 0; j < dout; ++j) w(i, j) = u(rng);
        st.weights.push_back(std::move(w));
        if (arch == Arch::gat) {
            const double ba = std::sqrt(6.0 / (2 * din + 1));
            std::uniform_real_distribution<double> ua(-ba, ba);
            Eigen::VectorXd a(2 * din);
            for (int i = 0; i < 2 * din; ++i) a(i) = ua(rng);
            st.attn.push_back(std::move(a));
        }
    }
    return st;
}

int OversmoothReport::depth_below(double threshold) const {
    for (const auto& [depth, by_m] : energies_by_depth) {
        const auto it = by_m.find(1);
        if (it != by_m.end() && it->second < threshold) return depth;
    }
    return -1;
}

OversmoothReport oversmooth_report(
    const std::map<int, std::map<int, double>>& energies_by_depth,
    double tail_fraction, double theoretical_rate) {
    if (energies_by_depth.size() < 4)
        throw InsufficientData("need at least 4 recorded depths, got " +
                               std::to_string(energies_by_depth.size()));
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw PreconditionViolated("tail_fraction must be in (0, 1]");

    std::vector<std::pair<double, double>> pts;  // (depth, log E_1)
    for (const auto& [depth, by_m] : energies_by_depth) {
        const auto it = by_m.find(1);
        if (it == by_m.end())
            throw PreconditionViolated("order-1 energy missing at depth " +
                                       std::to_string(depth));
        if (it->second >= 1e-300)
            pts.emplace_back(static_cast<double>(depth),
                             std::log(it->second));
    }
    if (pts.empty())
        throw AllZeroEnergies("every recorded E_1 is zero or underflowed");
    if (pts.size() < 2)
        throw InsufficientData("only one depth survived underflow filtering");

    auto cnt = static_cast<std::size_t>(
        std::ceil(tail_fraction * static_cast<double>(pts.size())));
    cnt = std::clamp<std::size_t>(cnt, 2, pts.size());
    const std::size_t first = pts.size() - cnt;

    double mx = 0.0, my = 0.0;
    for (std::size_t i = first; i < pts.size(); ++i) {
        mx += pts[i].first;
        my += pts[i].second;
    }
    mx /= static_cast<double>(cnt);
    my /= static_cast<double>(cnt);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = first; i < pts.size(); ++i) {
        const double dx = pts[i].first - mx;
        sxx += dx * dx;
        sxy += dx * (pts[i].second - my);
    }

    OversmoothReport rep;
    rep.energies_by_depth = energies_by_depth;
    rep.log_slope = sxy / sxx;
    rep.theoretical_rate = theoretical_rate;
    return rep;
}

ForwardResult forward(const Topology& topology, const LayerStack& stack,
                      const NodeFunction& X0,
                      const std::vector<int>& record_orders,
                      bool record_snapshots) {
    const WeightedGraph ref = preset_graph(topology, Preset::rw_selfloop);
    const int n = ref.node_count();
    if (X0.rows() != n)
        throw DimensionMismatch("features have " + std::to_string(X0.rows()) +
                                " rows for " + std::to_string(n) + " nodes");
    if (stack.dims.empty() || X0.cols() != stack.dims.front())
        throw DimensionMismatch("features have width " +
                                std::to_string(X0.cols()) + ", stack expects " +
                                std::to_string(stack.dims.front()));

    std::vector<int> orders = record_orders;
    if (std::find(orders.begin(), orders.end(), 1) == orders.end())
        orders.push_back(1);

    Eigen::VectorXd sqrt_mu(n), inv_sqrt_mu(n);
    for (int i = 0; i < n; ++i) {
        sqrt_mu(i) = std::sqrt(ref.mu(i));
        inv_sqrt_mu(i) = 1.0 / sqrt_mu(i);
    }

    std::map<int, std::map<int, double>> energies;
    const auto record = [&](int depth, const NodeFunction& x) {
        for (int m : orders) energies[depth][m] = energy_m(ref, x, m);
    };

    ForwardResult res;
    NodeFunction x = X0;
    record(0, x);
    if (record_snapshots) res.snapshots.push_back(x);

    for (int l = 0; l < stack.depth; ++l) {
        NodeFunction agg;
        if (stack.arch == Arch::gcn) {
            // Same expression as sym_propagate's step, so identity weights
            // and identity activation reproduce it bit for bit.
            agg = sqrt_mu.asDiagonal() *
                  random_walk_step(ref, inv_sqrt_mu.asDiagonal() * x);
        } else {
            const auto& a = stack.attn[static_cast<std::size_t>(l)];
            const int d = stack.dims[static_cast<std::size_t>(l)];
            const Eigen::VectorXd left = x * a.head(d);
            const Eigen::VectorXd right = x * a.tail(d);
            Eigen::MatrixXd scores = Eigen::MatrixXd::Zero(n, n);
            for (const auto& [i, j] : topology.edges) {
                const double s = 0.5 * (leaky_relu(left(i) + right(j)) +
                                        leaky_relu(left(j) + right(i)));
                scores(i, j) = s;
                scores(j, i) = s;
            }
            for (int i = 0; i < n; ++i)
                scores(i, i) = leaky_relu(left(i) + right(i));
            const WeightedGraph att = attention_graph(scores, topology);
            agg = random_walk_step(att, x);
        }
        x = activate(agg * stack.weights[static_cast<std::size_t>(l)],
                     stack.activation);
        record(l + 1, x);
        if (record_snapshots) res.snapshots.push_back(x);
    }

    double rate = std::numeric_limits<double>::quiet_NaN();
    try {
        const SpectralDecomposition sd = eigendecompose(ref);
        rate = 1.0 - (2.0 - sd.lambda_max()) * spectral_gap(sd);
    } catch (const DisconnectedGraph&) {
        // no single decay rate for a disconnected reference graph
    }
    try {
        res.report = oversmooth_report(energies, 0.5, rate);
    } catch (const AllZeroEnergies&) {
        res.report.energies_by_depth = energies;
        res.report.log_slope = std::numeric_limits<double>::quiet_NaN();
        res.report.theoretical_rate = rate;
    } catch (const InsufficientData&) {
        res.report.energies_by_depth = energies;
        res.report.log_slope = std::numeric_limits<double>::quiet_NaN();
        res.report.theoretical_rate = rate;
    }
    res.final = std::move(x);
    return res;
}

}  // namespace graphcalc
