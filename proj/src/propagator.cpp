#include "costgcc/propagator.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "costgcc/flow.hpp"
#include "costgcc/scc.hpp"
#include "costgcc/shortest_paths.hpp"

namespace costgcc {
namespace {

// Everything both propagators derive from the instance before filtering.
struct FlowFacts {
    ValueNetwork net;
    FlowState flow;
    ResidualGraph residual;
    std::vector<int> assigned;        // per variable: the value carrying its unit
    std::vector<Cost> assigned_cost;  // cost of that assignment
    Cost margin = 0;                  // cap minus flow cost
};

// nullopt when the flow is infeasible or its cost exceeds the cap; either way
// the constraint is inconsistent and no filtering happens.
std::optional<FlowFacts> prepare(const CostGccInstance& inst) {
    ValueNetwork net = build_value_network(inst);
    auto flow = min_cost_feasible_flow(net);
    if (!flow || flow->total_cost > inst.cost_cap) return std::nullopt;

    FlowFacts facts{std::move(net), std::move(*flow), ResidualGraph(), {}, {}, 0};
    facts.residual = build_residual(facts.net, facts.flow);
    facts.margin = inst.cost_cap - facts.flow.total_cost;
    facts.assigned.assign(static_cast<size_t>(inst.n_variables), -1);
    facts.assigned_cost.assign(static_cast<size_t>(inst.n_variables), 0);
    int arc = 0;  // domain arcs are variable-major, in domain order
    for (int x = 0; x < inst.n_variables; ++x) {
        for (size_t s = 0; s < inst.domains[static_cast<size_t>(x)].size(); ++s, ++arc) {
            if (facts.flow.flow[static_cast<size_t>(arc)] == 1) {
                facts.assigned[static_cast<size_t>(x)] = inst.domains[static_cast<size_t>(x)][s];
                facts.assigned_cost[static_cast<size_t>(x)] =
                    inst.domain_costs[static_cast<size_t>(x)][s];
            }
        }
        if (facts.assigned[static_cast<size_t>(x)] < 0)
            throw InternalError("feasible flow left a variable without an assignment");
    }
    return facts;
}

// Right-hand side of the exact deletion test for the pair (x, a) with
// assigned value b: cap - cost(f) - rc_ax - rc_xb, where rc_ax is the
// assignment cost of a and rc_xb the negated assignment cost of b.
Cost exact_budget(const FlowFacts& facts, int variable, Cost candidate_cost) {
    return facts.margin - candidate_cost + facts.assigned_cost[static_cast<size_t>(variable)];
}

}  // namespace

FilterReport propagate_regin(const CostGccInstance& inst) {
    FilterReport report;
    auto facts = prepare(inst);
    if (!facts) {
        report.consistent = false;
        return report;
    }
    const auto& net = facts->net;
    const std::span<const Cost> pi(facts->flow.potentials);

    std::vector<std::vector<int>> variables_of(static_cast<size_t>(inst.n_values));
    for (int x = 0; x < inst.n_variables; ++x)
        variables_of[static_cast<size_t>(facts->assigned[static_cast<size_t>(x)])].push_back(x);

    SearchCounter searches = 0;
    for (int b = 0; b < inst.n_values; ++b) {
        if (facts->flow.flow[static_cast<size_t>(net.source_arc(b))] <= 0) continue;
        const DistanceVector tree =
            shortest_paths_from(facts->residual, pi, net.value_node(b), searches);
        const size_t removed_before = report.removed.size();
        for (const int x : variables_of[static_cast<size_t>(b)]) {
            const auto& dom = inst.domains[static_cast<size_t>(x)];
            const auto& costs = inst.domain_costs[static_cast<size_t>(x)];
            for (size_t s = 0; s < dom.size(); ++s) {
                if (dom[s] == b) continue;  // the assigned pair carries flow
                const auto d = tree.get(net.value_node(dom[s]));
                if (!d || *d > exact_budget(*facts, x, costs[s]))
                    report.removed.push_back({x, dom[s]});
            }
        }
        if (report.removed.size() == removed_before) ++report.useless_sp_count;
    }

    std::sort(report.removed.begin(), report.removed.end());
    report.sp_count = searches;
    return report;
}

FilterReport propagate_landmarks(const CostGccInstance& inst, const SelectionPolicy& policy) {
    FilterReport report;
    auto facts = prepare(inst);
    if (!facts) {
        report.consistent = false;
        return report;
    }
    const auto& net = facts->net;
    const std::span<const Cost> pi(facts->flow.potentials);

    const SccPartition scc = strongly_connected_components(facts->residual);
    report.scc_count = static_cast<int>(scc.components.size());

    // A zero-flow pair (x, a) can only be repaired through a residual cycle
    // a -> x -> b -> ... -> a, so a and the assigned value b must share a
    // component; otherwise the pair is inconsistent outright.
    struct PendingPair {
        int variable;
        int value;
        Cost candidate_cost;
    };
    std::vector<std::vector<PendingPair>> pending(scc.components.size());
    for (int x = 0; x < inst.n_variables; ++x) {
        const int b = facts->assigned[static_cast<size_t>(x)];
        const int b_component = scc.component_of[static_cast<size_t>(net.value_node(b))];
        const auto& dom = inst.domains[static_cast<size_t>(x)];
        const auto& costs = inst.domain_costs[static_cast<size_t>(x)];
        for (size_t s = 0; s < dom.size(); ++s) {
            if (dom[s] == b) continue;
            const int a_component = scc.component_of[static_cast<size_t>(net.value_node(dom[s]))];
            if (a_component != b_component)
                report.removed.push_back({x, dom[s]});
            else
                pending[static_cast<size_t>(a_component)].push_back({x, dom[s], costs[s]});
        }
    }

    SearchCounter searches = 0;
    for (int cid = 0; cid < static_cast<int>(scc.components.size()); ++cid) {
        auto& todo = pending[static_cast<size_t>(cid)];
        if (todo.empty()) continue;
        const std::span<const NodeId> component(scc.components[static_cast<size_t>(cid)]);

        // Equal to component_rc_max: the zero-flow domain arcs inside the
        // component are exactly the pending pairs.
        Cost rc_max = 0;
        for (const PendingPair& p : todo) rc_max = std::max(rc_max, p.candidate_cost);

        SelectionPolicy component_policy = policy;
        component_policy.seed =
            policy.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(cid + 1));
        SearchCounter probes = 0;
        const std::vector<NodeId> landmark_nodes =
            select_landmark_nodes(facts->residual, pi, component, component_policy, probes);
        searches += probes;
        report.useless_sp_count += probes;

        ComponentOutcome outcome{cid, false, 0};
        for (const NodeId p : landmark_nodes) {
            if (todo.empty()) break;
            const Landmark landmark = materialize_landmark(facts->residual, pi, p, cid, searches);
            report.useless_sp_count += 2;
            ++outcome.landmarks_used;
            if (landmark_clears_component(component, landmark, rc_max, facts->flow.total_cost,
                                          inst.cost_cap)) {
                todo.clear();
                outcome.cleared_by_component_bound = true;
                break;
            }
            std::erase_if(todo, [&](const PendingPair& pr) {
                const int x = pr.variable;
                return landmark_certifies_pair(
                    net.variable_node(x),
                    net.value_node(facts->assigned[static_cast<size_t>(x)]),
                    net.value_node(pr.value), landmark, pr.candidate_cost,
                    -facts->assigned_cost[static_cast<size_t>(x)], facts->flow.total_cost,
                    inst.cost_cap);
            });
        }

        if (!todo.empty()) {
            // Exact phase: one tree per assigned value that still has
            // undecided pairs, never more than the baseline would compute.
            std::sort(todo.begin(), todo.end(), [&](const PendingPair& a, const PendingPair& b) {
                const int ba = facts->assigned[static_cast<size_t>(a.variable)];
                const int bb = facts->assigned[static_cast<size_t>(b.variable)];
                return std::tie(ba, a.variable, a.value) < std::tie(bb, b.variable, b.value);
            });
            size_t i = 0;
            while (i < todo.size()) {
                const int b = facts->assigned[static_cast<size_t>(todo[i].variable)];
                const DistanceVector tree =
                    shortest_paths_from(facts->residual, pi, net.value_node(b), searches);
                bool removed_any = false;
                for (; i < todo.size() &&
                       facts->assigned[static_cast<size_t>(todo[i].variable)] == b;
                     ++i) {
                    const PendingPair& pr = todo[i];
                    const auto d = tree.get(net.value_node(pr.value));
                    if (!d || *d > exact_budget(*facts, pr.variable, pr.candidate_cost)) {
                        report.removed.push_back({pr.variable, pr.value});
                        removed_any = true;
                    }
                }
                if (!removed_any) ++report.useless_sp_count;
            }
        }
        report.scc_outcomes.push_back(outcome);
    }

    std::sort(report.removed.begin(), report.removed.end());
    report.sp_count = searches;
    return report;
}

Cost component_rc_max(const ValueNetwork& network, const ResidualGraph& residual,
                      std::span<const NodeId> component) {
    std::vector<char> in_component(static_cast<size_t>(residual.node_count), 0);
    for (const NodeId v : component) in_component[static_cast<size_t>(v)] = 1;

    Cost best = 0;
    for (const NodeId v : component) {
        if (!network.is_value_node(v)) continue;
        for (const int id : residual.out[static_cast<size_t>(v)]) {
            const ResidualArc& arc = residual.arcs[static_cast<size_t>(id)];
            if (arc.backward || !network.is_variable_node(arc.to) ||
                !in_component[static_cast<size_t>(arc.to)])
                continue;
            best = std::max(best, arc.cost);
        }
    }
    return best;
}

bool landmark_clears_component(std::span<const NodeId> component, const Landmark& landmark,
                               Cost rc_max, Cost flow_cost, Cost cost_cap) {
    Cost max_into = 0;
    Cost max_from = 0;
    bool first = true;
    for (const NodeId v : component) {
        const auto into = landmark.into_node.get(v);
        const auto from = landmark.from_node.get(v);
        if (!into || !from) return false;
        if (first) {
            max_into = *into;
            max_from = *from;
            first = false;
        } else {
            max_into = std::max(max_into, *into);
            max_from = std::max(max_from, *from);
        }
    }
    return !first && max_into + max_from <= cost_cap - flow_cost - rc_max;
}

bool landmark_certifies_pair(NodeId variable_node, NodeId assigned_value_node,
                             NodeId value_node, const Landmark& landmark, Cost rc_ax,
                             Cost rc_xb, Cost flow_cost, Cost cost_cap) {
    const auto from_p_to_a = landmark.from_node.get(value_node);
    if (!from_p_to_a) return false;
    const Cost budget = cost_cap - flow_cost - rc_ax;

    const auto x_to_p = landmark.into_node.get(variable_node);
    if (x_to_p && *x_to_p + *from_p_to_a <= budget) return true;

    const auto b_to_p = landmark.into_node.get(assigned_value_node);
    return b_to_p && *b_to_p + *from_p_to_a <= budget - rc_xb;
}

}  // namespace costgcc
