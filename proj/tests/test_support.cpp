#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace costgcc::testing {

CostGccInstance make_instance(int n_values,
                              std::vector<std::vector<std::pair<int, Cost>>> domains,
                              std::vector<std::pair<int, int>> bounds, Cost cap) {
    CostGccInstance inst;
    inst.n_variables = static_cast<int>(domains.size());
    inst.n_values = n_values;
    inst.cost_cap = cap;
    for (auto& dom : domains) {
        std::sort(dom.begin(), dom.end());
        std::vector<int> values;
        std::vector<Cost> costs;
        for (const auto& [value, cost] : dom) {
            values.push_back(value);
            costs.push_back(cost);
        }
        inst.domains.push_back(std::move(values));
        inst.domain_costs.push_back(std::move(costs));
    }
    for (const auto& [lo, hi] : bounds) {
        inst.lower.push_back(lo);
        inst.upper.push_back(hi);
    }
    return inst;
}

NamedInstance load_figure1() {
    return load_instance(std::filesystem::path(COSTGCC_DATA_DIR) / "figure1.json");
}

ResidualGraph graph_from_arcs(int nodes, const std::vector<std::tuple<int, int, Cost>>& arcs) {
    ResidualGraph graph(nodes);
    for (const auto& [from, to, cost] : arcs) graph.add_arc(from, to, 1, cost);
    return graph;
}

std::vector<std::optional<Cost>> bellman_ford(const ResidualGraph& graph, NodeId source) {
    std::vector<std::optional<Cost>> dist(static_cast<size_t>(graph.node_count));
    dist[static_cast<size_t>(source)] = 0;
    for (int round = 0; round < graph.node_count; ++round) {
        bool changed = false;
        for (const ResidualArc& arc : graph.arcs) {
            const auto& du = dist[static_cast<size_t>(arc.from)];
            if (!du) continue;
            auto& dv = dist[static_cast<size_t>(arc.to)];
            if (!dv || *du + arc.cost < *dv) {
                dv = *du + arc.cost;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

std::vector<int> components_by_reachability(const ResidualGraph& graph) {
    const int n = graph.node_count;
    std::vector<std::vector<char>> reaches(static_cast<size_t>(n),
                                           std::vector<char>(static_cast<size_t>(n), 0));
    for (NodeId s = 0; s < n; ++s) {
        std::vector<NodeId> queue{s};
        reaches[static_cast<size_t>(s)][static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            const NodeId u = queue.back();
            queue.pop_back();
            for (const int id : graph.out[static_cast<size_t>(u)]) {
                const NodeId v = graph.arcs[static_cast<size_t>(id)].to;
                if (!reaches[static_cast<size_t>(s)][static_cast<size_t>(v)]) {
                    reaches[static_cast<size_t>(s)][static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
    }
    // Canonical id: the smallest mutually-reachable node.
    std::vector<int> component(static_cast<size_t>(n), -1);
    int next_id = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (component[static_cast<size_t>(v)] != -1) continue;
        const int id = next_id++;
        for (NodeId w = v; w < n; ++w)
            if (reaches[static_cast<size_t>(v)][static_cast<size_t>(w)] &&
                reaches[static_cast<size_t>(w)][static_cast<size_t>(v)])
                component[static_cast<size_t>(w)] = id;
    }
    return component;
}

CostGccInstance random_instance(uint64_t seed, int max_variables, int max_values) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    GeneratorSpec spec;
    spec.n_variables = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_variables - 1));
    spec.n_values = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_values - 1));
    spec.density = 0.35 + 0.65 * (static_cast<double>(rng() % 1000) / 1000.0);
    spec.density = std::max(spec.density, 1.05 / spec.n_values);
    spec.cost_min = 0;
    spec.cost_max = static_cast<Cost>(1 + rng() % 9);
    switch (rng() % 3) {
        case 0:
            spec.bounds = BoundStyle::Loose;
            break;
        case 1:
            spec.bounds = BoundStyle::Tight;
            break;
        default:
            spec.bounds = spec.n_values >= spec.n_variables ? BoundStyle::AlldiffLike
                                                            : BoundStyle::Loose;
            break;
    }
    spec.seed = seed;
    return generate_instance(spec).core;
}

}  // namespace costgcc::testing
