#include "graphcalc/energy.hpp"

#include <algorithm>
#include <cmath>

#include "graphcalc/errors.hpp"

namespace graphcalc {

NodeFunction center(const WeightedGraph& g, const NodeFunction& f) {
    check_shape(g, f);
    const Eigen::RowVectorXd mean = integrate(g, f) / g.total_measure();
    return f.rowwise() - mean;
}

double energy_m(const WeightedGraph& g, const NodeFunction& f, int m) {
    check_shape(g, f);
    if (m < 0) throw NegativeOrder("derivative order " + std::to_string(m));
    const double n = static_cast<double>(g.node_count());
    if (m == 0) {
        const NodeFunction c = center(g, f);
        return squared_norm_mu(g, c) / n;
    }
    NodeFunction cur = f;
    for (int i = 0; i < m / 2; ++i) cur = laplacian_apply(g, cur);
    if (m % 2 == 0) return squared_norm_mu(g, cur) / n;
    return gradient_inner(g, cur, cur) / n;
}

double gamma_m(const WeightedGraph& g, const NodeFunction& f, int m) {
    return std::sqrt(energy_m(g, f, m));
}

PoincareCheck poincare_check(const WeightedGraph& g, const NodeFunction& f,
                             const SpectralDecomposition& sd) {
    const double lambda1 = spectral_gap(sd);
    const NodeFunction c = center(g, f);
    const double centered2 = squared_norm_mu(g, c);
    PoincareCheck r;
    r.lhs = lambda1 * centered2;
    r.rhs = gradient_inner(g, f, f);
    r.upper = 2.0 * g.m_max() * centered2;
    const double tol = 1e-9 * std::max({1.0, r.lhs, r.rhs, r.upper});
    r.holds = r.lhs <= r.rhs + tol && r.rhs <= r.upper + tol;
    return r;
}

std::vector<InequalityCheck> equivalence_check(const WeightedGraph& g,
                                               const NodeFunction& f,
                                               const SpectralDecomposition& sd) {
    const double lambda1 = spectral_gap(sd);
    const double two_mmax = 2.0 * g.m_max();
    const double grad2 = gradient_inner(g, f, f);
    const NodeFunction lap = laplacian_apply(g, f);
    const double lap2 = squared_norm_mu(g, lap);
    const double gradlap2 = gradient_inner(g, lap, lap);

    std::vector<InequalityCheck> out;
    const auto push = [&out](std::string name, double lhs, double rhs) {
        InequalityCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.slack = rhs - lhs;
        c.holds =
            lhs <= rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
        out.push_back(std::move(c));
    };
    push("gap*grad2<=lap2", lambda1 * grad2, lap2);
    push("lap2<=2mmax*grad2", lap2, two_mmax * grad2);
    push("lap2<=gradlap2/gap", lap2, gradlap2 / lambda1);
    push("gradlap2<=2mmax*lap2", gradlap2, two_mmax * lap2);
    return out;
}

EnergyReport energy_report(const WeightedGraph& g, const NodeFunction& f,
                           const std::vector<int>& orders) {
    EnergyReport rep;
    rep.orders = orders;
    rep.n = g.node_count();
    for (int m : orders) {
        EnergyReport::Entry e;
        e.energy = energy_m(g, f, m);
        e.gamma = std::sqrt(e.energy);
        e.integral = e.energy * static_cast<double>(rep.n);
        rep.values[m] = e;
    }
    return rep;
}

}  // namespace graphcalc
