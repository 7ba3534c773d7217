#include "costgcc/flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "costgcc/types.hpp"

namespace costgcc {
namespace {

constexpr Cost kInfinity = std::numeric_limits<Cost>::max();

// One direction of a network arc viewed as a residual arc. Existence is
// decided at traversal time from the current flow, so the adjacency lists
// never change across augmentations.
struct HalfArc {
    int arc = 0;
    bool forward = true;
};

}  // namespace

std::optional<FlowState> min_cost_feasible_flow(const ValueNetwork& network) {
    const auto& arcs = network.arcs;
    const int node_count = network.node_count();
    const int arc_count = static_cast<int>(arcs.size());

    std::vector<int> flow(arcs.size(), 0);
    std::vector<Cost> potentials(static_cast<size_t>(node_count), 0);

    std::vector<std::vector<HalfArc>> outgoing(static_cast<size_t>(node_count));
    for (int i = 0; i < arc_count; ++i) {
        outgoing[static_cast<size_t>(arcs[i].from)].push_back({i, true});
        outgoing[static_cast<size_t>(arcs[i].to)].push_back({i, false});
    }

    auto residual_capacity = [&](const HalfArc& h) {
        return h.forward ? arcs[h.arc].upper - flow[h.arc] : flow[h.arc] - arcs[h.arc].lower;
    };
    auto residual_cost = [&](const HalfArc& h) {
        return h.forward ? arcs[h.arc].cost : -arcs[h.arc].cost;
    };
    auto head = [&](const HalfArc& h) { return h.forward ? arcs[h.arc].to : arcs[h.arc].from; };
    auto tail = [&](const HalfArc& h) { return h.forward ? arcs[h.arc].from : arcs[h.arc].to; };

    std::vector<Cost> dist(static_cast<size_t>(node_count));
    std::vector<char> finalized(static_cast<size_t>(node_count));
    std::vector<HalfArc> reached_via(static_cast<size_t>(node_count));

    // Repairs never push any arc below its lower bound, so arcs already
    // feasible stay feasible and the cursor only moves forward.
    for (int cursor = 0; cursor < arc_count;) {
        if (flow[cursor] >= arcs[cursor].lower) {
            ++cursor;
            continue;
        }
        const NodeId path_source = arcs[cursor].to;
        const NodeId path_target = arcs[cursor].from;

        // Shortest repair path under reduced costs. The reverse residual of
        // the violated arc itself cannot exist (its flow is below the lower
        // bound), so no explicit exclusion is needed.
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::fill(finalized.begin(), finalized.end(), 0);
        using Entry = std::pair<Cost, NodeId>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist[static_cast<size_t>(path_source)] = 0;
        heap.push({0, path_source});
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (finalized[static_cast<size_t>(u)]) continue;
            finalized[static_cast<size_t>(u)] = 1;
            if (u == path_target) break;
            for (const HalfArc& h : outgoing[static_cast<size_t>(u)]) {
                if (residual_capacity(h) <= 0) continue;
                const NodeId v = head(h);
                if (finalized[static_cast<size_t>(v)]) continue;
                const Cost reduced = residual_cost(h) + potentials[static_cast<size_t>(u)] -
                                     potentials[static_cast<size_t>(v)];
                if (reduced < 0)
                    throw NegativeReducedCost("min_cost_feasible_flow: potential invariant broken");
                if (d + reduced < dist[static_cast<size_t>(v)]) {
                    dist[static_cast<size_t>(v)] = d + reduced;
                    reached_via[static_cast<size_t>(v)] = h;
                    heap.push({dist[static_cast<size_t>(v)], v});
                }
            }
        }
        if (!finalized[static_cast<size_t>(path_target)]) return std::nullopt;

        // Nodes not finalized when the target popped have distance at least
        // the target's, so capping them there keeps reduced costs valid.
        const Cost target_dist = dist[static_cast<size_t>(path_target)];
        for (int v = 0; v < node_count; ++v) {
            potentials[static_cast<size_t>(v)] +=
                finalized[static_cast<size_t>(v)]
                    ? std::min(dist[static_cast<size_t>(v)], target_dist)
                    : target_dist;
        }

        int amount = arcs[cursor].lower - flow[cursor];
        for (NodeId v = path_target; v != path_source;) {
            const HalfArc& h = reached_via[static_cast<size_t>(v)];
            amount = std::min(amount, residual_capacity(h));
            v = tail(h);
        }
        flow[cursor] += amount;
        for (NodeId v = path_target; v != path_source;) {
            const HalfArc& h = reached_via[static_cast<size_t>(v)];
            flow[h.arc] += h.forward ? amount : -amount;
            v = tail(h);
        }
    }

    FlowState state;
    state.total_cost = 0;
    for (int i = 0; i < arc_count; ++i)
        state.total_cost += static_cast<Cost>(flow[i]) * arcs[i].cost;
    state.flow = std::move(flow);
    state.potentials = std::move(potentials);
    return state;
}

}  // namespace costgcc
