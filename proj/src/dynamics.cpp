#include "graphcalc/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "graphcalc/energy.hpp"
#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

DecayCertificate make_certificate(double abscissa, double rate,
                                  double observed) {
    DecayCertificate c;
    c.abscissa = abscissa;
    c.rate = rate;
    c.observed = observed;
    c.slack = rate - observed;
    c.satisfied = observed <= rate + 1e-9 * std::max(1.0, rate);
    c.vacuous = rate >= 1.0 - 1e-12;
    return c;
}

double gradient_energy(const WeightedGraph& g, const NodeFunction& f) {
    return gradient_inner(g, f, f);
}

}  // namespace

NodeFunction heat_evolve(const WeightedGraph& g, const SpectralDecomposition& sd,
                         const NodeFunction& f0, double t) {
    check_shape(g, f0);
    if (t < 0.0) throw NegativeTime("t = " + std::to_string(t));
    if (t == 0.0) return f0;
    const Eigen::MatrixXd c = spectral_coefficients(sd, f0);
    const Eigen::VectorXd decay = (-t * sd.alphas.array()).exp();
    return sd.eigfuncs * (decay.asDiagonal() * c);
}

NodeFunction heat_evolve_euler(const WeightedGraph& g, const NodeFunction& f0,
                               double t, double dt) {
    check_shape(g, f0);
    if (t < 0.0) throw NegativeTime("t = " + std::to_string(t));
    if (dt <= 0.0) throw UnstableStep("dt must be positive");
    const double limit = 1.0 / g.m_max();
    if (dt > limit * (1.0 + 1e-12))
        throw UnstableStep("dt = " + std::to_string(dt) + " exceeds 1/M_max = " +
                           std::to_string(limit));
    const long steps = std::lround(t / dt);
    if (std::abs(steps * dt - t) > 1e-9 * std::max(1.0, t))
        throw PreconditionViolated("t is not an integer multiple of dt");
    NodeFunction f = f0;
    for (long s = 0; s < steps; ++s) f += dt * laplacian_apply(g, f);
    return f;
}

std::vector<DecayCertificate> heat_decay_certificate(
    const WeightedGraph& g, const SpectralDecomposition& sd,
    const NodeFunction& f0, const std::vector<double>& t_list) {
    const double lambda1 = spectral_gap(sd);
    const double e0 = gradient_energy(g, f0);
    if (e0 <= 0.0)
        throw ConstantInitialCondition("initial gradient energy is zero");
    std::vector<DecayCertificate> out;
    out.reserve(t_list.size());
    for (double t : t_list) {
        const NodeFunction ft = heat_evolve(g, sd, f0, t);
        out.push_back(make_certificate(t, std::exp(-2.0 * lambda1 * t),
                                       gradient_energy(g, ft) / e0));
    }
    return out;
}

NodeFunction random_walk_step(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    if (!g.sub_stochastic())
        throw NotSubStochastic("some node has sum_j omega_ij > mu_i");
    // P f = f + Lap f, evaluated in difference form so constants are exact
    // fixed points.
    return f + laplacian_apply(g, f);
}

NodeFunction walk_propagate(const WeightedGraph& g, const NodeFunction& f,
                            int k) {
    if (k < 0) throw NegativeOrder("step count " + std::to_string(k));
    NodeFunction cur = f;
    for (int s = 0; s < k; ++s) cur = random_walk_step(g, cur);
    return cur;
}

std::vector<DecayCertificate> walk_decay_certificate(
    const WeightedGraph& g, const SpectralDecomposition& sd,
    const NodeFunction& f, int k_max) {
    const double lambda1 = spectral_gap(sd);
    const double e0 = gradient_energy(g, f);
    if (e0 <= 0.0)
        throw ConstantInitialCondition("initial gradient energy is zero");
    const double base = 1.0 - (2.0 - sd.lambda_max()) * lambda1;
    std::vector<DecayCertificate> out;
    out.reserve(static_cast<std::size_t>(std::max(k_max, 0)));
    NodeFunction cur = f;
    double rate = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        cur = random_walk_step(g, cur);
        rate *= base;
        out.push_back(make_certificate(static_cast<double>(k), rate,
                                       gradient_energy(g, cur) / e0));
    }
    return out;
}

SymPropagateResult sym_propagate(const WeightedGraph& g, const NodeFunction& f,
                                 int k) {
    check_shape(g, f);
    if (k < 0) throw NegativeOrder("step count " + std::to_string(k));
    const int n = g.node_count();
    Eigen::VectorXd sqrt_mu(n), inv_sqrt_mu(n);
    for (int i = 0; i < n; ++i) {
        sqrt_mu(i) = std::sqrt(g.mu(i));
        inv_sqrt_mu(i) = 1.0 / sqrt_mu(i);
    }
    const auto down = [&](const NodeFunction& x) -> NodeFunction {
        return inv_sqrt_mu.asDiagonal() * x;
    };

    const double e0 = gradient_energy(g, down(f));

    // Materialize the unconjugated features after every step, exactly like a
    // propagation layer would, so layer stacks built on top of this operator
    // match it step for step.
    NodeFunction cur = f;
    for (int s = 0; s < k; ++s)
        cur = sqrt_mu.asDiagonal() * random_walk_step(g, down(cur));

    SymPropagateResult res;
    res.out = std::move(cur);
    // Roundoff-level initial energy means the conjugated input was constant
    // up to floating point; a decay ratio against it would be noise.
    const double floor = 1e-24 * std::max(1.0, squared_norm_mu(g, down(f)));
    if (e0 > floor) {
        const SpectralDecomposition sd = eigendecompose(g);
        const double base = 1.0 - (2.0 - sd.lambda_max()) * spectral_gap(sd);
        res.certificate = make_certificate(
            static_cast<double>(k), std::pow(base, k),
            gradient_energy(g, down(res.out)) / e0);
    }
    return res;
}

namespace {

TrajectorySample make_sample(const WeightedGraph& g, double abscissa,
                             const NodeFunction& f,
                             const std::vector<int>& orders, bool snapshot) {
    TrajectorySample s;
    s.abscissa = abscissa;
    for (int m : orders) s.energies[m] = energy_m(g, f, m);
    if (snapshot) s.snapshot = f;
    return s;
}

}  // namespace

Trajectory heat_trajectory(const WeightedGraph& g,
                           const SpectralDecomposition& sd,
                           const NodeFunction& f0,
                           const std::vector<double>& t_list,
                           const std::vector<int>& orders,
                           bool record_snapshots) {
    for (std::size_t i = 1; i < t_list.size(); ++i)
        if (t_list[i] <= t_list[i - 1])
            throw PreconditionViolated("times must be strictly increasing");
    Trajectory tr;
    tr.kind = Trajectory::Kind::heat_exact;
    tr.samples.reserve(t_list.size());
    for (double t : t_list)
        tr.samples.push_back(make_sample(g, t, heat_evolve(g, sd, f0, t),
                                         orders, record_snapshots));
    return tr;
}

Trajectory walk_trajectory(const WeightedGraph& g, const NodeFunction& f0,
                           int k_max, const std::vector<int>& orders,
                           bool record_snapshots) {
    if (k_max < 0) throw NegativeOrder("step count " + std::to_string(k_max));
    Trajectory tr;
    tr.kind = Trajectory::Kind::walk;
    tr.samples.reserve(static_cast<std::size_t>(k_max) + 1);
    NodeFunction cur = f0;
    tr.samples.push_back(make_sample(g, 0.0, cur, orders, record_snapshots));
    for (int k = 1; k <= k_max; ++k) {
        cur = random_walk_step(g, cur);
        tr.samples.push_back(
            make_sample(g, static_cast<double>(k), cur, orders,
                        record_snapshots));
    }
    return tr;
}

}  // namespace graphcalc
