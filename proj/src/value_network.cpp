#include "costgcc/value_network.hpp"

#include <algorithm>

namespace costgcc {

int ValueNetwork::domain_arc(int value, int variable) const {
    const auto& list = arcs_by_variable[static_cast<size_t>(variable)];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{value, -1});
    if (it == list.end() || it->first != value) return -1;
    return it->second;
}

ValueNetwork build_value_network(const CostGccInstance& inst) {
    ValueNetwork net;
    net.n_variables = inst.n_variables;
    net.n_values = inst.n_values;
    net.arcs.reserve(static_cast<size_t>(inst.n_variables) + inst.n_values + 1);
    net.arcs_by_variable.resize(static_cast<size_t>(inst.n_variables));

    for (int x = 0; x < inst.n_variables; ++x) {
        const auto& dom = inst.domains[static_cast<size_t>(x)];
        const auto& costs = inst.domain_costs[static_cast<size_t>(x)];
        for (size_t s = 0; s < dom.size(); ++s) {
            const int arc = static_cast<int>(net.arcs.size());
            net.arcs.push_back({net.value_node(dom[s]), net.variable_node(x), 0, 1, costs[s]});
            net.arcs_by_variable[static_cast<size_t>(x)].push_back({dom[s], arc});
        }
    }
    net.domain_arc_count = static_cast<int>(net.arcs.size());

    for (int a = 0; a < inst.n_values; ++a)
        net.arcs.push_back({ValueNetwork::source, net.value_node(a), inst.lower[a], inst.upper[a], 0});
    for (int x = 0; x < inst.n_variables; ++x)
        net.arcs.push_back({net.variable_node(x), ValueNetwork::sink, 1, 1, 0});
    net.arcs.push_back({ValueNetwork::sink, ValueNetwork::source, inst.n_variables, inst.n_variables, 0});

    return net;
}

}  // namespace costgcc
