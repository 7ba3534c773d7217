#include "costgcc/landmarks.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace costgcc {

std::string_view to_string(SelectionMethod method) {
    switch (method) {
        case SelectionMethod::Random: return "random";
        case SelectionMethod::Outline: return "outline";
        case SelectionMethod::Center: return "center";
        case SelectionMethod::OutlineAndCenter: return "outline-center";
        case SelectionMethod::MaxDegree: return "degree";
    }
    return "degree";
}

std::optional<SelectionMethod> parse_selection_method(std::string_view name) {
    if (name == "random") return SelectionMethod::Random;
    if (name == "outline") return SelectionMethod::Outline;
    if (name == "center") return SelectionMethod::Center;
    if (name == "outline-center") return SelectionMethod::OutlineAndCenter;
    if (name == "degree") return SelectionMethod::MaxDegree;
    return std::nullopt;
}

namespace {

// Largest finite distance among component nodes; ties go to the lowest node
// id because the component list is ascending and only strict improvements
// replace the incumbent.
NodeId furthest_node(const DistanceVector& distances, std::span<const NodeId> component) {
    NodeId best = -1;
    Cost best_distance = 0;
    for (const NodeId v : component) {
        const auto d = distances.get(v);
        if (!d) continue;
        if (best == -1 || *d > best_distance) {
            best = v;
            best_distance = *d;
        }
    }
    return best;
}

struct OutlineProbe {
    NodeId y = -1;
    NodeId z = -1;
    DistanceVector from_y;
};

OutlineProbe probe_outline(const ResidualGraph& graph, std::span<const Cost> potentials,
                           std::span<const NodeId> component, NodeId start,
                           SearchCounter& counter) {
    const DistanceVector from_start = shortest_paths_from(graph, potentials, start, counter);
    const NodeId y = furthest_node(from_start, component);
    DistanceVector from_y = shortest_paths_from(graph, potentials, y, counter);
    const NodeId z = furthest_node(from_y, component);
    return {y, z, std::move(from_y)};
}

Cost floor_half(Cost c) { return c >= 0 ? c / 2 : -((-c + 1) / 2); }

// Walks the y->z shortest path out of y's tree and picks the node whose
// distance from y is closest to half the path cost, lowest id on ties.
NodeId center_of_probe(const OutlineProbe& probe) {
    std::vector<NodeId> path;
    for (NodeId v = probe.z; v != -1; v = probe.from_y.parent(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());

    const Cost target = floor_half(probe.from_y.at(probe.z));
    NodeId best = path.front();
    Cost best_gap = std::llabs(probe.from_y.at(best) - target);
    for (const NodeId v : path) {
        const Cost gap = std::llabs(probe.from_y.at(v) - target);
        if (gap < best_gap || (gap == best_gap && v < best)) {
            best = v;
            best_gap = gap;
        }
    }
    return best;
}

std::vector<NodeId> pick_by_degree(const ResidualGraph& graph, std::span<const NodeId> component,
                                   int want) {
    std::vector<char> in_component(static_cast<size_t>(graph.node_count), 0);
    for (const NodeId v : component) in_component[static_cast<size_t>(v)] = 1;

    struct Scored {
        int64_t score;
        NodeId node;
    };
    std::vector<Scored> scored;
    scored.reserve(component.size());
    for (const NodeId v : component) {
        int64_t out_degree = 0;
        int64_t in_degree = 0;
        for (const int id : graph.out[static_cast<size_t>(v)])
            if (in_component[static_cast<size_t>(graph.arcs[static_cast<size_t>(id)].to)])
                ++out_degree;
        for (const int id : graph.in[static_cast<size_t>(v)])
            if (in_component[static_cast<size_t>(graph.arcs[static_cast<size_t>(id)].from)])
                ++in_degree;
        scored.push_back({(out_degree + in_degree) * std::min(out_degree, in_degree), v});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        return a.score != b.score ? a.score > b.score : a.node < b.node;
    });
    std::vector<NodeId> chosen;
    chosen.reserve(static_cast<size_t>(want));
    for (int i = 0; i < want; ++i) chosen.push_back(scored[static_cast<size_t>(i)].node);
    return chosen;
}

}  // namespace

std::pair<NodeId, NodeId> outline_pair(const ResidualGraph& graph,
                                       std::span<const Cost> potentials,
                                       std::span<const NodeId> component, NodeId start,
                                       SearchCounter& counter) {
    const OutlineProbe probe = probe_outline(graph, potentials, component, start, counter);
    return {probe.y, probe.z};
}

NodeId center_node(const ResidualGraph& graph, std::span<const Cost> potentials,
                   std::span<const NodeId> component, SearchCounter& counter) {
    return center_of_probe(probe_outline(graph, potentials, component, component.front(), counter));
}

std::vector<NodeId> select_landmark_nodes(const ResidualGraph& graph,
                                          std::span<const Cost> potentials,
                                          std::span<const NodeId> component,
                                          const SelectionPolicy& policy,
                                          SearchCounter& counter) {
    const int want = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(std::max(policy.count, 1)), component.size()));

    if (policy.method == SelectionMethod::MaxDegree)
        return pick_by_degree(graph, component, want);

    if (policy.method == SelectionMethod::Random) {
        std::mt19937_64 rng(policy.seed);
        std::vector<NodeId> pool(component.begin(), component.end());
        std::vector<NodeId> chosen;
        chosen.reserve(static_cast<size_t>(want));
        for (int i = 0; i < want; ++i) {
            const size_t j =
                static_cast<size_t>(i) + static_cast<size_t>(rng() % (pool.size() - static_cast<size_t>(i)));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
            chosen.push_back(pool[static_cast<size_t>(i)]);
        }
        return chosen;
    }

    // Outline-family methods cycle with fresh start nodes until enough
    // distinct landmarks were produced.
    std::vector<NodeId> chosen;
    chosen.reserve(static_cast<size_t>(want));
    auto already = [&](NodeId v) {
        return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    };
    auto push_unique = [&](NodeId v) {
        if (static_cast<int>(chosen.size()) < want && !already(v)) chosen.push_back(v);
    };
    auto lowest_unchosen = [&]() {
        for (const NodeId v : component)
            if (!already(v)) return v;
        return component.front();
    };

    while (static_cast<int>(chosen.size()) < want) {
        const size_t before = chosen.size();
        const NodeId start = lowest_unchosen();
        const OutlineProbe probe = probe_outline(graph, potentials, component, start, counter);
        switch (policy.method) {
            case SelectionMethod::Outline:
                push_unique(probe.y);
                push_unique(probe.z);
                break;
            case SelectionMethod::Center:
                push_unique(center_of_probe(probe));
                break;
            default:  // OutlineAndCenter
                push_unique(probe.y);
                push_unique(probe.z);
                push_unique(center_of_probe(probe));
                break;
        }
        // A probe can land entirely on known landmarks; the fresh start node
        // keeps the loop making progress.
        if (chosen.size() == before) push_unique(start);
    }
    return chosen;
}

Landmark materialize_landmark(const ResidualGraph& graph, std::span<const Cost> potentials,
                              NodeId node, int component, SearchCounter& counter) {
    Landmark landmark;
    landmark.node = node;
    landmark.component = component;
    landmark.from_node = shortest_paths_from(graph, potentials, node, counter);
    landmark.into_node = shortest_paths_into(graph, potentials, node, counter);
    return landmark;
}

std::vector<Landmark> select_landmarks(const ResidualGraph& graph,
                                       std::span<const Cost> potentials,
                                       std::span<const NodeId> component,
                                       const SelectionPolicy& policy, SearchCounter& counter,
                                       int component_id) {
    std::vector<Landmark> landmarks;
    for (const NodeId node : select_landmark_nodes(graph, potentials, component, policy, counter))
        landmarks.push_back(materialize_landmark(graph, potentials, node, component_id, counter));
    return landmarks;
}

}  // namespace costgcc
