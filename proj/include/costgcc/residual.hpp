#pragma once

#include <span>
#include <vector>

#include "costgcc/flow.hpp"
#include "costgcc/types.hpp"
#include "costgcc/value_network.hpp"

namespace costgcc {

struct ResidualArc {
    NodeId from = 0;
    NodeId to = 0;
    int capacity = 0;   // always > 0
    Cost cost = 0;
    int network_arc = -1;  // originating arc, -1 for hand-built graphs
    bool backward = false;
};

// Residual graph of a flow: a forward arc with cost +c wherever flow can
// still grow (flow < upper), a backward arc with cost -c wherever it can
// shrink toward the lower bound (flow > lower). All residual lower bounds are
// zero. Both adjacency directions are materialized at build time so searches
// on the reverse graph never rebuild anything.
struct ResidualGraph {
    int node_count = 0;
    std::vector<ResidualArc> arcs;
    std::vector<std::vector<int>> out;  // arc indices grouped by from-node
    std::vector<std::vector<int>> in;   // arc indices grouped by to-node

    explicit ResidualGraph(int nodes = 0) : node_count(nodes), out(nodes), in(nodes) {}

    void add_arc(NodeId from, NodeId to, int capacity, Cost cost,
                 int network_arc = -1, bool backward = false);
};

// Requires a flow feasible on the network.
ResidualGraph build_residual(const ValueNetwork& network, const FlowState& flow);

// rc_uv + pi_u - pi_v. Throws NegativeReducedCost when the result is
// negative, which signals stale potentials rather than bad input. Distances
// computed under reduced costs convert back exactly:
// d(x, y) = d_reduced(x, y) - pi_x + pi_y.
Cost reduced_cost(const ResidualArc& arc, std::span<const Cost> potentials);

}  // namespace costgcc
