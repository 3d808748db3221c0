#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/spectral.hpp"

namespace graphcalc {

// f minus its mu-mean, taken per column. Integrates to zero afterwards.
NodeFunction center(const WeightedGraph& g, const NodeFunction& f);

// E_m(f) = (1/n) int ||grad^m f||^2 dmu, computed by operator composition:
// even m via repeated Laplacians, odd m via one gradient on top. m = 0 uses
// the centered function, so constants score zero at every order.
double energy_m(const WeightedGraph& g, const NodeFunction& f, int m);

// gamma_m(f) = sqrt(E_m(f)). Zero iff f is constant (connected graphs), and
// subadditive: gamma_m(f + h) <= gamma_m(f) + gamma_m(h).
double gamma_m(const WeightedGraph& g, const NodeFunction& f, int m);

struct PoincareCheck {
    double lhs = 0.0;    // lambda_1 * int ||f - mean||^2
    double rhs = 0.0;    // int ||grad f||^2
    double upper = 0.0;  // 2 M_max * int ||f - mean||^2
    bool holds = false;
};

PoincareCheck poincare_check(const WeightedGraph& g, const NodeFunction& f,
                             const SpectralDecomposition& sd);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
};

// The four comparisons tying int ||grad f||^2, int ||lap f||^2 and
// int ||grad lap f||^2 together through lambda_1 and 2 M_max.
std::vector<InequalityCheck> equivalence_check(const WeightedGraph& g,
                                               const NodeFunction& f,
                                               const SpectralDecomposition& sd);

struct EnergyReport {
    struct Entry {
        double energy = 0.0;    // E_m, with the 1/n prefactor
        double gamma = 0.0;     // sqrt(E_m)
        double integral = 0.0;  // n * E_m, the raw integral
    };
    std::vector<int> orders;
    std::map<int, Entry> values;
    int n = 0;
};

EnergyReport energy_report(const WeightedGraph& g, const NodeFunction& f,
                           const std::vector<int>& orders);

}  // namespace graphcalc
