#pragma once

#include <utility>
#include <vector>

#include "costgcc/instance.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

struct NetworkArc {
    NodeId from = 0;
    NodeId to = 0;
    int lower = 0;
    int upper = 0;
    Cost cost = 0;
};

// Capacitated cost digraph whose feasible circulations are exactly the
// assignments satisfying the cardinality bounds:
//   source -> value     window [lower_a, upper_a], cost 0
//   value  -> variable  one arc per domain pair, window [0, 1], the assignment cost
//   variable -> sink    window [1, 1], cost 0
//   sink -> source      window [n, n], cost 0
//
// Arc layout, in order: domain arcs (variable-major, ascending value), then
// source->value arcs, then variable->sink arcs, then the single sink->source
// arc. Construction is deterministic: equal instances yield equal networks.
struct ValueNetwork {
    static constexpr NodeId source = 0;
    static constexpr NodeId sink = 1;

    int n_variables = 0;
    int n_values = 0;
    std::vector<NetworkArc> arcs;
    int domain_arc_count = 0;

    NodeId value_node(int value) const { return 2 + value; }
    NodeId variable_node(int variable) const { return 2 + n_values + variable; }
    int node_count() const { return 2 + n_values + n_variables; }

    bool is_value_node(NodeId v) const { return v >= 2 && v < 2 + n_values; }
    bool is_variable_node(NodeId v) const { return v >= 2 + n_values && v < node_count(); }
    int value_of(NodeId v) const { return v - 2; }
    int variable_of(NodeId v) const { return v - 2 - n_values; }

    // Index of the value->variable arc, or -1 when the pair is not a domain pair.
    int domain_arc(int value, int variable) const;
    int source_arc(int value) const { return domain_arc_count + value; }
    int sink_arc(int variable) const { return domain_arc_count + n_values + variable; }
    int circulation_arc() const { return static_cast<int>(arcs.size()) - 1; }

    // (value, arc index) pairs per variable, ascending by value.
    std::vector<std::vector<std::pair<int, int>>> arcs_by_variable;
};

// Requires a validated instance. Values that appear in no domain still get
// their source arc; an unsatisfiable lower bound there surfaces later as flow
// infeasibility, not as a construction error.
ValueNetwork build_value_network(const CostGccInstance& instance);

}  // namespace costgcc
