#pragma once

#include <optional>
#include <vector>

#include "costgcc/types.hpp"
#include "costgcc/value_network.hpp"

namespace costgcc {

// A feasible minimum-cost circulation on a value network together with node
// potentials certifying optimality: every residual arc (u, v) satisfies
// rc_uv + pi_u - pi_v >= 0. Immutable once returned; shareable.
struct FlowState {
    std::vector<int> flow;         // per network arc
    Cost total_cost = 0;
    std::vector<Cost> potentials;  // per node
};

// Successive shortest augmenting paths: start from the zero flow (which
// respects every upper bound) and repair lower-bound violations, lowest arc
// index first, along shortest residual paths found by Dijkstra on reduced
// costs. The initial all-zero potentials are valid because arc costs are
// nonnegative and the zero flow has only forward residual arcs.
//
// Returns std::nullopt when some violated arc admits no repair path, i.e. no
// feasible flow exists at all. That is distinct from the flow cost exceeding
// the instance cap, which callers check themselves.
std::optional<FlowState> min_cost_feasible_flow(const ValueNetwork& network);

}  // namespace costgcc
