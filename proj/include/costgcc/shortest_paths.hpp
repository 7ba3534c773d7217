#pragma once

#include <optional>
#include <span>
#include <vector>

#include "costgcc/residual.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

// Single-source shortest distances under true residual costs. Unreachable
// nodes carry an explicit marker instead of a large finite value so bound
// comparisons can never silently pass on them.
class DistanceVector {
public:
    enum class Direction { FromSource, IntoSink };

    DistanceVector() = default;
    DistanceVector(NodeId endpoint, Direction direction, int node_count);

    NodeId endpoint() const { return endpoint_; }
    Direction direction() const { return direction_; }

    bool reachable(NodeId v) const { return reached_[static_cast<size_t>(v)] != 0; }
    std::optional<Cost> get(NodeId v) const;
    Cost at(NodeId v) const;  // throws InternalError when unreachable

    // FromSource: predecessor on the endpoint->v path.
    // IntoSink: successor on the v->endpoint path.
    // -1 at the endpoint itself and at unreachable nodes.
    NodeId parent(NodeId v) const { return parent_[static_cast<size_t>(v)]; }

    void set(NodeId v, Cost distance, NodeId parent);

private:
    NodeId endpoint_ = -1;
    Direction direction_ = Direction::FromSource;
    std::vector<Cost> dist_;
    std::vector<NodeId> parent_;
    std::vector<char> reached_;
};

// Dijkstra over reduced costs, converted back to true costs on return. Each
// call counts as exactly one shortest-path computation. Requires potentials
// under which every residual reduced cost is nonnegative.
DistanceVector shortest_paths_from(const ResidualGraph& graph,
                                   std::span<const Cost> potentials,
                                   NodeId source, SearchCounter& counter);

// Distances x -> sink for every x, computed on the stored reverse adjacency.
DistanceVector shortest_paths_into(const ResidualGraph& graph,
                                   std::span<const Cost> potentials,
                                   NodeId sink, SearchCounter& counter);

}  // namespace costgcc
