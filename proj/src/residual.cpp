#include "costgcc/residual.hpp"

#include <string>

namespace costgcc {

void ResidualGraph::add_arc(NodeId from, NodeId to, int capacity, Cost cost,
                            int network_arc, bool backward) {
    const int id = static_cast<int>(arcs.size());
    arcs.push_back({from, to, capacity, cost, network_arc, backward});
    out[static_cast<size_t>(from)].push_back(id);
    in[static_cast<size_t>(to)].push_back(id);
}

ResidualGraph build_residual(const ValueNetwork& network, const FlowState& flow) {
    ResidualGraph graph(network.node_count());
    for (int i = 0; i < static_cast<int>(network.arcs.size()); ++i) {
        const NetworkArc& arc = network.arcs[i];
        const int f = flow.flow[static_cast<size_t>(i)];
        if (f < arc.upper)
            graph.add_arc(arc.from, arc.to, arc.upper - f, arc.cost, i, false);
        if (f > arc.lower)
            graph.add_arc(arc.to, arc.from, f - arc.lower, -arc.cost, i, true);
    }
    return graph;
}

Cost reduced_cost(const ResidualArc& arc, std::span<const Cost> potentials) {
    const Cost value = arc.cost + potentials[static_cast<size_t>(arc.from)] -
                       potentials[static_cast<size_t>(arc.to)];
    if (value < 0)
        throw NegativeReducedCost("reduced cost " + std::to_string(value) + " on residual arc " +
                                  std::to_string(arc.from) + "->" + std::to_string(arc.to));
    return value;
}

}  // namespace costgcc
