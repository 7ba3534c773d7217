#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "costgcc/residual.hpp"
#include "costgcc/shortest_paths.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

enum class SelectionMethod { Random, Outline, Center, OutlineAndCenter, MaxDegree };

// CLI spellings: random, outline, center, outline-center, degree.
std::string_view to_string(SelectionMethod method);
std::optional<SelectionMethod> parse_selection_method(std::string_view name);

struct SelectionPolicy {
    SelectionMethod method = SelectionMethod::MaxDegree;
    int count = 1;  // k >= 1
    uint64_t seed = 0;
};

// A node p with its two shortest-path trees over the whole residual graph.
// For any x, y of the owning component, into_node(x) + from_node(y) is an
// upper bound on d(x, y); both vectors are finite on every component node.
struct Landmark {
    NodeId node = -1;
    int component = -1;
    DistanceVector from_node;  // d(p, .)
    DistanceVector into_node;  // d(., p)
};

// Approximate diameter pair of a component: y is the node of the component
// furthest from start, z the furthest from y. Costs two counted searches.
// Singleton components yield (v, v).
std::pair<NodeId, NodeId> outline_pair(const ResidualGraph& graph,
                                       std::span<const Cost> potentials,
                                       std::span<const NodeId> component,
                                       NodeId start, SearchCounter& counter);

// Node whose distance from y along a reconstructed shortest y->z path is
// closest to half that path's cost, where (y, z) is the approximate diameter
// pair started from the component's lowest node. Costs two counted searches.
NodeId center_node(const ResidualGraph& graph, std::span<const Cost> potentials,
                   std::span<const NodeId> component, SearchCounter& counter);

// Chooses min(policy.count, |component|) distinct nodes. Counts only the
// probe searches the strategy itself performs; no distance vectors are built
// here. Tie-breaks are by lowest node id throughout, so a fixed seed gives a
// fixed selection. `component` must be sorted ascending.
std::vector<NodeId> select_landmark_nodes(const ResidualGraph& graph,
                                          std::span<const Cost> potentials,
                                          std::span<const NodeId> component,
                                          const SelectionPolicy& policy,
                                          SearchCounter& counter);

// Builds the two distance vectors for one node: exactly two counted searches.
Landmark materialize_landmark(const ResidualGraph& graph,
                              std::span<const Cost> potentials,
                              NodeId node, int component, SearchCounter& counter);

// Selection plus materialization of every chosen landmark, i.e. the probe
// searches plus two searches per returned landmark. component_id is recorded
// on the landmarks as their owning component.
std::vector<Landmark> select_landmarks(const ResidualGraph& graph,
                                       std::span<const Cost> potentials,
                                       std::span<const NodeId> component,
                                       const SelectionPolicy& policy,
                                       SearchCounter& counter, int component_id = -1);

}  // namespace costgcc
