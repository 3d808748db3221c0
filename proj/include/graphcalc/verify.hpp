#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

struct VerifyRow {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool pass = false;
    std::string note;  // error name when a check could not run
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass() const;
};

// Runs every analytic identity and bound the library promises against one
// graph: integration by parts and Laplacian self-adjointness, the spectral
// ceiling 2 M_max, the gamma_m metric axioms, the Poincare and norm-
// equivalence inequalities, operator/spectral energy agreement, continuous
// and discrete decay with the sharpness witness, and the spectral
// bipartiteness criterion. Checks whose preconditions the graph violates
// (disconnected, not sub-stochastic) fail with the violation named in note.
// f defaults to a seeded Gaussian two-column function; auxiliary functions
// are always drawn from the seed.
VerifyReport run_verify(const WeightedGraph& g,
                        const std::optional<NodeFunction>& f,
                        std::uint64_t seed);

}  // namespace graphcalc
