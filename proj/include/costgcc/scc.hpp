#pragma once

#include <vector>

#include "costgcc/residual.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

// Strongly connected components with canonical numbering: components are
// ordered by their smallest contained node id and each node list is sorted
// ascending, so the partition is deterministic for a given graph.
struct SccPartition {
    std::vector<int> component_of;             // per node
    std::vector<std::vector<NodeId>> components;
};

// Iterative Tarjan over the full residual graph, source and sink included.
SccPartition strongly_connected_components(const ResidualGraph& graph);

}  // namespace costgcc
