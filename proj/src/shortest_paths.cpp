#include "costgcc/shortest_paths.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace costgcc {
namespace {

constexpr Cost kInfinity = std::numeric_limits<Cost>::max();

}  // namespace

DistanceVector::DistanceVector(NodeId endpoint, Direction direction, int node_count)
    : endpoint_(endpoint),
      direction_(direction),
      dist_(static_cast<size_t>(node_count), 0),
      parent_(static_cast<size_t>(node_count), -1),
      reached_(static_cast<size_t>(node_count), 0) {}

std::optional<Cost> DistanceVector::get(NodeId v) const {
    if (!reachable(v)) return std::nullopt;
    return dist_[static_cast<size_t>(v)];
}

Cost DistanceVector::at(NodeId v) const {
    if (!reachable(v))
        throw InternalError("distance requested for unreachable node " + std::to_string(v));
    return dist_[static_cast<size_t>(v)];
}

void DistanceVector::set(NodeId v, Cost distance, NodeId parent) {
    dist_[static_cast<size_t>(v)] = distance;
    parent_[static_cast<size_t>(v)] = parent;
    reached_[static_cast<size_t>(v)] = 1;
}

namespace {

// Dijkstra with lazy deletion. The (key, node) pair ordering makes the lowest
// node id pop first among equal keys, so results are deterministic.
// `arc_lists` is either graph.out (forward) or graph.in (reverse); `across`
// maps an arc to the node on its other side.
template <typename Across>
DistanceVector run_dijkstra(const ResidualGraph& graph, std::span<const Cost> potentials,
                            NodeId start, DistanceVector::Direction direction,
                            const std::vector<std::vector<int>>& arc_lists, Across&& across) {
    const int n = graph.node_count;
    std::vector<Cost> dist(static_cast<size_t>(n), kInfinity);
    std::vector<NodeId> parent(static_cast<size_t>(n), -1);
    std::vector<char> finalized(static_cast<size_t>(n), 0);

    using Entry = std::pair<Cost, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<size_t>(start)] = 0;
    heap.push({0, start});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (finalized[static_cast<size_t>(u)]) continue;
        finalized[static_cast<size_t>(u)] = 1;
        for (const int id : arc_lists[static_cast<size_t>(u)]) {
            const ResidualArc& arc = graph.arcs[static_cast<size_t>(id)];
            const NodeId v = across(arc);
            if (finalized[static_cast<size_t>(v)]) continue;
            const Cost step = reduced_cost(arc, potentials);
            if (d + step < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = d + step;
                parent[static_cast<size_t>(v)] = u;
                heap.push({dist[static_cast<size_t>(v)], v});
            }
        }
    }

    // Convert reduced distances back to true residual costs.
    DistanceVector result(start, direction, n);
    for (NodeId v = 0; v < n; ++v) {
        if (dist[static_cast<size_t>(v)] == kInfinity) continue;
        const Cost true_cost =
            direction == DistanceVector::Direction::FromSource
                ? dist[static_cast<size_t>(v)] - potentials[static_cast<size_t>(start)] +
                      potentials[static_cast<size_t>(v)]
                : dist[static_cast<size_t>(v)] - potentials[static_cast<size_t>(v)] +
                      potentials[static_cast<size_t>(start)];
        result.set(v, true_cost, parent[static_cast<size_t>(v)]);
    }
    return result;
}

}  // namespace

DistanceVector shortest_paths_from(const ResidualGraph& graph, std::span<const Cost> potentials,
                                   NodeId source, SearchCounter& counter) {
    ++counter;
    return run_dijkstra(graph, potentials, source, DistanceVector::Direction::FromSource,
                        graph.out, [](const ResidualArc& arc) { return arc.to; });
}

DistanceVector shortest_paths_into(const ResidualGraph& graph, std::span<const Cost> potentials,
                                   NodeId sink, SearchCounter& counter) {
    ++counter;
    return run_dijkstra(graph, potentials, sink, DistanceVector::Direction::IntoSink,
                        graph.in, [](const ResidualArc& arc) { return arc.from; });
}

}  // namespace costgcc
