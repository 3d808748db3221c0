// Acceptance gate: one case per shipped guarantee, each printing a single
// ACCEPTANCE line so the suite's output doubles as a checklist.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "doctest.h"
#include "graphcalc/dynamics.hpp"
#include "graphcalc/energy.hpp"
#include "graphcalc/gnn.hpp"
#include "graphcalc/spectral.hpp"
#include "graphcalc/verify.hpp"
#include "support.hpp"

using namespace graphcalc;

namespace {

void announce(int index, const char* label, bool ok) {
    std::printf("ACCEPTANCE %2d %s - %s\n", index, ok ? "PASS" : "FAIL", label);
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct CorpusEntry {
    WeightedGraph g;
    SpectralDecomposition sd;
    NodeFunction f;
    NodeFunction h;
};

// 200 random connected weighted graphs, n in [3, 60], degrees capped at 4,
// feature widths cycling 1..4, measures alternating between balanced and
// strictly sub-stochastic.
const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        out.reserve(200);
        testsupport::Rng rng(20200);
        for (int i = 0; i < 200; ++i) {
            const int n = 3 + static_cast<int>(rng() % 58);
            const Topology t = testsupport::random_topology(rng, n);
            const auto kind = i % 2 == 0
                                  ? testsupport::MeasureKind::balanced
                                  : testsupport::MeasureKind::sub_stochastic;
            WeightedGraph g = testsupport::weighted_graph(rng, t, kind);
            SpectralDecomposition sd = eigendecompose(g);
            const int d = 1 + i % 4;
            NodeFunction f = testsupport::gaussian(rng, n, d);
            NodeFunction h = testsupport::gaussian(rng, n, d);
            out.push_back({std::move(g), std::move(sd), std::move(f),
                           std::move(h)});
        }
        return out;
    }();
    return entries;
}

}  // namespace

TEST_CASE("integration by parts across the corpus") {
    const auto& entries = corpus();
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : entries) {
        const double scale =
            std::max(1.0, std::abs(gradient_inner(e.g, e.f, e.h)));
        if (!(ibp_residual(e.g, e.f, e.h) <= 1e-10 * scale)) ok = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) ok = false;
    announce(1, "integration by parts, 200 graphs under 5 s", ok);
    CHECK(ok);
}

TEST_CASE("largest eigenvalue stays under twice the measure ratio") {
    bool ok = true;
    for (const auto& e : corpus()) {
        const LambdaMaxCheck c = lambda_max_check(e.g, e.sd);
        if (!c.holds) ok = false;
    }
    // the single edge with unit measure meets the bound exactly
    const WeightedGraph p2 = testsupport::path2();
    const LambdaMaxCheck tight = lambda_max_check(p2, eigendecompose(p2));
    if (tight.bound != 2.0) ok = false;
    if (std::abs(tight.lambda_max - 2.0) > 1e-12) ok = false;
    announce(2, "spectral ceiling 2 M_max, equality on the single edge", ok);
    CHECK(ok);
}

TEST_CASE("gamma is a node similarity measure") {
    const auto& entries = corpus();
    bool ok = true;
    testsupport::Rng rng(20203);
    for (int i = 0; i < 500; ++i) {
        const auto& e = entries[i % entries.size()];
        const int n = e.g.node_count();
        const int d = 1 + i % 4;
        const NodeFunction f1 = testsupport::gaussian(rng, n, d);
        const NodeFunction f2 = testsupport::gaussian(rng, n, d);
        for (int m = 0; m <= 5; ++m) {
            const double slack = gamma_m(e.g, f1, m) + gamma_m(e.g, f2, m) -
                                 gamma_m(e.g, f1 + f2, m);
            if (!(slack >= -1e-10)) ok = false;
        }
    }
    for (const auto& e : entries) {
        const NodeFunction ones =
            NodeFunction::Constant(e.g.node_count(), 2, 1.0);
        if (!(gamma_m(e.g, ones, 1) <= 1e-8)) ok = false;
        if (!(gamma_m(e.g, e.f, 1) > 1e-8)) ok = false;
    }
    announce(3, "triangle inequality, zero exactly on constants", ok);
    CHECK(ok);
}

TEST_CASE("poincare sandwich with a sharp lower bound") {
    bool ok = true;
    for (const auto& e : corpus()) {
        if (!poincare_check(e.g, e.f, e.sd).holds) ok = false;
        // shifted gap eigenfunction: centering strips the shift, equality holds
        NodeFunction v1 = e.sd.eigfuncs.col(e.sd.zero_count);
        v1.array() += 3.0;
        const PoincareCheck sharp = poincare_check(e.g, v1, e.sd);
        if (!(std::abs(sharp.lhs - sharp.rhs) <=
              1e-10 * std::max(1.0, sharp.rhs)))
            ok = false;
    }
    announce(4, "poincare bounds, equality on the gap eigenfunction", ok);
    CHECK(ok);
}

TEST_CASE("norm equivalence chain holds with pinned constants") {
    bool ok = true;
    for (const auto& e : corpus()) {
        const auto rows = equivalence_check(e.g, e.f, e.sd);
        if (rows.size() != 4) ok = false;
        for (const auto& r : rows) {
            const double scale =
                std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
            if (!r.holds) ok = false;
            if (!(r.slack >= -1e-9 * scale)) ok = false;
        }
    }
    announce(5, "gradient/laplacian norm equivalence, four inequalities", ok);
    CHECK(ok);
}

TEST_CASE("operator and spectral energies agree to seven digits") {
    bool ok = true;
    for (const auto& e : corpus()) {
        for (int m = 0; m <= 6; ++m) {
            const double op =
                static_cast<double>(e.g.node_count()) * energy_m(e.g, e.f, m);
            const double sp = spectral_energy(e.sd, e.f, m);
            const double scale = std::max({1.0, std::abs(op), std::abs(sp)});
            if (!(std::abs(op - sp) <= 1e-7 * scale)) ok = false;
        }
    }
    announce(6, "energy via operators equals energy via the spectrum", ok);
    CHECK(ok);
}

TEST_CASE("heat flow dissipates at the spectral-gap rate") {
    bool ok = true;
    const std::vector<double> times = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (const auto& e : corpus()) {
        for (const auto& c : heat_decay_certificate(e.g, e.sd, e.f, times))
            if (!c.satisfied) ok = false;
        // sharpness: the gap eigenfunction rides the bound exactly
        const NodeFunction v1 = e.sd.eigfuncs.col(e.sd.zero_count);
        const DecayCertificate sharp =
            heat_decay_certificate(e.g, e.sd, v1, {1.0}).front();
        if (!(std::abs(sharp.observed - sharp.rate) <= 1e-10)) ok = false;
    }
    announce(7, "continuous decay bound, sharp on the gap eigenfunction", ok);
    CHECK(ok);
}

TEST_CASE("lazy walks dissipate at the discrete rate") {
    bool ok = true;
    // uniform triangle: every nonzero mode sits at 3/2, one step divides the
    // gradient energy by four
    const WeightedGraph k3 = preset_graph(testsupport::k3_topology(), Preset::rw);
    testsupport::Rng rng(20208);
    const NodeFunction f = testsupport::gaussian(rng, 3, 2);
    const double e0 = gradient_inner(k3, f, f);
    const NodeFunction pf = random_walk_step(k3, f);
    const double ratio = gradient_inner(k3, pf, pf) / e0;
    if (!(ratio <= 0.25 + 1e-12)) ok = false;

    for (int i = 0; i < 100; ++i) {
        const int n = 4 + static_cast<int>(rng() % 57);
        const Topology t = testsupport::random_nonbipartite_topology(rng, n);
        const WeightedGraph g = testsupport::weighted_graph(
            rng, t, testsupport::MeasureKind::sub_stochastic);
        const SpectralDecomposition sd = eigendecompose(g);
        const NodeFunction x = testsupport::gaussian(rng, n, 2);
        for (const auto& c : walk_decay_certificate(g, sd, x, 20))
            if (!c.satisfied) ok = false;
    }
    announce(8, "discrete decay: quarter rate on the triangle, bound for k<=20",
             ok);
    CHECK(ok);
}

TEST_CASE("bipartite four-cycle keeps its energy forever") {
    bool ok = true;
    const WeightedGraph g = preset_graph(testsupport::k22_topology(), Preset::rw);
    NodeFunction x(4, 1);
    x << 1.0, 1.0, 0.0, 0.0;
    NodeFunction cur = x;
    for (int k = 0; k <= 10; ++k) {
        if (gradient_inner(g, cur, cur) != 4.0) ok = false;
        cur = random_walk_step(g, cur);
    }
    announce(9, "side indicator on the four-cycle holds energy 4 exactly", ok);
    CHECK(ok);
}

TEST_CASE("spectral and structural bipartiteness agree at the boundary") {
    bool ok = true;
    testsupport::Rng rng(20210);
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + static_cast<int>(rng() % 40);
        const Topology t = i < 50
                               ? testsupport::random_bipartite_topology(rng, n)
                               : testsupport::random_nonbipartite_topology(rng, n);
        const WeightedGraph g = testsupport::weighted_graph(
            rng, t, testsupport::MeasureKind::boundary);
        const bool structural = graph_stats(g).is_bipartite_structural;
        const bool spectral = bipartite_spectral_test(g, eigendecompose(g));
        if ((i < 50) != structural) ok = false;  // generator sanity
        if (spectral == structural) ++agree;
    }
    if (agree != 100) ok = false;
    announce(10, "largest eigenvalue 2 iff bipartite, 100/100 graphs", ok);
    CHECK(ok);
}

TEST_CASE("deep relu stacks collapse the dirichlet energy") {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    testsupport::Rng rng(20211);
    const Topology topo = testsupport::random_nonbipartite_topology(rng, 50);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const LayerStack stack = init_stack(
            Arch::gcn, 256, std::vector<int>(257, 16), seed, Activation::relu);
        std::mt19937_64 xrng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> gauss(0.0, 1.0);
        NodeFunction x0(50, 16);
        for (int i = 0; i < 50; ++i)
            for (int c = 0; c < 16; ++c) x0(i, c) = gauss(xrng);
        const ForwardResult res = forward(topo, stack, x0, {1});
        const double first = res.report.energies_by_depth.at(0).at(1);
        const double last = res.report.energies_by_depth.at(256).at(1);
        if (!(last / first < 1e-10)) ok = false;
        if (!(res.report.log_slope < 0.0)) ok = false;
    }
    if (seconds_since(t0) >= 30.0) ok = false;
    announce(11, "depth-256 relu gcn: energy ratio under 1e-10, negative slope",
             ok);
    CHECK(ok);
}

TEST_CASE("identity-weight gcn equals symmetrized propagation") {
    bool ok = true;
    testsupport::Rng rng(20212);
    const Topology t = testsupport::random_nonbipartite_topology(rng, 16);
    const WeightedGraph ref = preset_graph(t, Preset::rw_selfloop);
    const NodeFunction x0 = testsupport::gaussian(rng, 16, 5);

    LayerStack stack;
    stack.arch = Arch::gcn;
    stack.depth = 32;
    stack.dims.assign(33, 5);
    stack.activation = Activation::identity;
    for (int l = 0; l < 32; ++l)
        stack.weights.push_back(Eigen::MatrixXd::Identity(5, 5));

    const ForwardResult res = forward(t, stack, x0, {1}, true);
    if (res.snapshots.size() != 33) ok = false;
    for (int l = 0; l <= 32 && ok; ++l) {
        const NodeFunction want = sym_propagate(ref, x0, l).out;
        const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
        if (!((res.snapshots[l] - want).cwiseAbs().maxCoeff() <= 1e-12 * scale))
            ok = false;
    }
    announce(12, "32-layer identity gcn matches conjugated walk snapshots", ok);
    CHECK(ok);
}
