#include "costgcc/scc.hpp"

#include <algorithm>

namespace costgcc {

SccPartition strongly_connected_components(const ResidualGraph& graph) {
    const int n = graph.node_count;
    std::vector<int> index(static_cast<size_t>(n), -1);
    std::vector<int> lowlink(static_cast<size_t>(n), 0);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<NodeId> stack;
    stack.reserve(static_cast<size_t>(n));
    std::vector<std::vector<NodeId>> components;

    struct Frame {
        NodeId node;
        size_t next_arc;
    };
    std::vector<Frame> dfs;
    int counter = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        dfs.push_back({root, 0});

        while (!dfs.empty()) {
            Frame& frame = dfs.back();
            const NodeId u = frame.node;
            const auto& arcs_out = graph.out[static_cast<size_t>(u)];
            bool descended = false;
            while (frame.next_arc < arcs_out.size()) {
                const NodeId v = graph.arcs[static_cast<size_t>(arcs_out[frame.next_arc++])].to;
                if (index[static_cast<size_t>(v)] == -1) {
                    index[static_cast<size_t>(v)] = lowlink[static_cast<size_t>(v)] = counter++;
                    stack.push_back(v);
                    on_stack[static_cast<size_t>(v)] = 1;
                    dfs.push_back({v, 0});  // invalidates `frame`
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<size_t>(v)])
                    lowlink[static_cast<size_t>(u)] =
                        std::min(lowlink[static_cast<size_t>(u)], index[static_cast<size_t>(v)]);
            }
            if (descended) continue;

            dfs.pop_back();
            if (!dfs.empty()) {
                const NodeId parent = dfs.back().node;
                lowlink[static_cast<size_t>(parent)] =
                    std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(u)]);
            }
            if (lowlink[static_cast<size_t>(u)] == index[static_cast<size_t>(u)]) {
                components.emplace_back();
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    components.back().push_back(w);
                } while (w != u);
            }
        }
    }

    // Canonical numbering independent of traversal order.
    for (auto& component : components) std::sort(component.begin(), component.end());
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SccPartition partition;
    partition.components = std::move(components);
    partition.component_of.assign(static_cast<size_t>(n), -1);
    for (int c = 0; c < static_cast<int>(partition.components.size()); ++c)
        for (const NodeId v : partition.components[static_cast<size_t>(c)])
            partition.component_of[static_cast<size_t>(v)] = c;
    return partition;
}

}  // namespace costgcc
