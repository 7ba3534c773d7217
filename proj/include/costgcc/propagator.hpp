#pragma once

#include <span>
#include <utility>
#include <vector>

#include "costgcc/instance.hpp"
#include "costgcc/landmarks.hpp"
#include "costgcc/residual.hpp"
#include "costgcc/types.hpp"
#include "costgcc/value_network.hpp"

namespace costgcc {

struct ComponentOutcome {
    int component = -1;
    bool cleared_by_component_bound = false;
    int landmarks_used = 0;
};

// Result of one propagation call. Removed pairs always had zero flow; the
// assigned pair of a variable is never deleted. useless_sp_count counts the
// trees that produced no deletion; every landmark-related search (selection
// probes and the two per-landmark trees) is counted useless by convention.
struct FilterReport {
    std::vector<std::pair<int, int>> removed;  // (variable, value), sorted, unique
    bool consistent = true;
    int64_t sp_count = 0;
    int64_t useless_sp_count = 0;
    int scc_count = 0;                           // landmark method only; 0 for the baseline
    std::vector<ComponentOutcome> scc_outcomes;  // components that had undecided pairs
};

// Baseline filtering: one shortest-path tree per assigned value, exact bound
// test on every zero-flow domain arc of the variables carrying that value.
// If no feasible flow exists or the min cost exceeds the cap, returns
// consistent = false with no removals.
FilterReport propagate_regin(const CostGccInstance& instance);

// Landmark-accelerated filtering. Removes exactly the same pairs as the
// baseline: landmark bounds only certify consistency and prune searches,
// never cause a deletion by themselves. Per component, landmarks are
// consumed lazily, component-wide bound first, then the per-pair bound, and
// explicit trees are computed only for values whose pairs stay undecided.
FilterReport propagate_landmarks(const CostGccInstance& instance,
                                 const SelectionPolicy& policy);

// Largest cost among zero-flow value->variable residual arcs with both
// endpoints inside the component. 0 when the component has no such arc.
Cost component_rc_max(const ValueNetwork& network, const ResidualGraph& residual,
                      std::span<const NodeId> component);

// Component-wide sufficient condition: when the two landmark eccentricities
// fit within the margin left after rc_max, every domain pair inside the
// component is consistent. False never implies anything.
bool landmark_clears_component(std::span<const NodeId> component, const Landmark& landmark,
                               Cost rc_max, Cost flow_cost, Cost cost_cap);

// Per-pair sufficient condition via the landmark triangle bound, tried both
// from the variable node (budget: cap - flow cost - rc_ax) and from its
// assigned value (same budget minus rc_xb). True means certainly consistent;
// false leaves the pair undecided.
bool landmark_certifies_pair(NodeId variable_node, NodeId assigned_value_node,
                             NodeId value_node, const Landmark& landmark,
                             Cost rc_ax, Cost rc_xb, Cost flow_cost, Cost cost_cap);

}  // namespace costgcc
