#include "doctest.h"

#include <random>

#include "costgcc/flow.hpp"
#include "costgcc/residual.hpp"
#include "costgcc/scc.hpp"
#include "costgcc/shortest_paths.hpp"
#include "test_support.hpp"

using namespace costgcc;
using namespace costgcc::testing;

namespace {

struct ResidualAtOptimum {
    ValueNetwork net;
    FlowState flow;
    ResidualGraph residual;
};

ResidualAtOptimum residual_of(const CostGccInstance& inst) {
    ResidualAtOptimum r{build_value_network(inst), {}, ResidualGraph()};
    r.flow = *min_cost_feasible_flow(r.net);
    r.residual = build_residual(r.net, r.flow);
    return r;
}

}  // namespace

TEST_CASE("figure1 residual distances match the worked values") {
    const auto named = load_figure1();
    const auto r = residual_of(named.core);
    SearchCounter counter = 0;

    const auto from_julia = shortest_paths_from(
        r.residual, r.flow.potentials, r.net.variable_node(named.variable_index("Julia")), counter);
    CHECK(from_julia.at(r.net.value_node(named.value_index("E"))) == -1);
    CHECK(from_julia.at(from_julia.endpoint()) == 0);

    const auto from_peter = shortest_paths_from(
        r.residual, r.flow.potentials, r.net.variable_node(named.variable_index("Peter")), counter);
    CHECK(from_peter.at(r.net.value_node(named.value_index("B"))) == 1);
    CHECK(counter == 2);
}

TEST_CASE("distances into the source node match the worked component") {
    const auto named = load_figure1();
    const auto r = residual_of(named.core);
    SearchCounter counter = 0;
    const auto into_s =
        shortest_paths_into(r.residual, r.flow.potentials, ValueNetwork::source, counter);
    CHECK(into_s.at(ValueNetwork::source) == 0);
    CHECK(into_s.at(r.net.value_node(named.value_index("D"))) == 0);
    CHECK(into_s.at(r.net.value_node(named.value_index("E"))) == 0);
    CHECK(into_s.at(r.net.variable_node(named.variable_index("Julia"))) == -1);
    CHECK(counter == 1);
}

TEST_CASE("forward distances agree with Bellman-Ford on random residuals") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        const auto inst = random_instance(seed, 7, 5);
        const auto r = residual_of(inst);
        SearchCounter counter = 0;
        for (NodeId source = 0; source < r.residual.node_count; ++source) {
            const auto fast = shortest_paths_from(r.residual, r.flow.potentials, source, counter);
            const auto slow = bellman_ford(r.residual, source);
            for (NodeId v = 0; v < r.residual.node_count; ++v) {
                REQUIRE(fast.reachable(v) == slow[static_cast<size_t>(v)].has_value());
                if (fast.reachable(v)) CHECK(fast.at(v) == *slow[static_cast<size_t>(v)]);
            }
        }
    }
}

TEST_CASE("reverse distances equal forward distances on the reversed graph") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        const auto inst = random_instance(seed, 6, 5);
        const auto r = residual_of(inst);

        // Explicitly reversed copy, searched forward with plain Bellman-Ford.
        ResidualGraph reversed(r.residual.node_count);
        for (const ResidualArc& arc : r.residual.arcs)
            reversed.add_arc(arc.to, arc.from, arc.capacity, arc.cost);

        SearchCounter counter = 0;
        for (NodeId sink = 0; sink < r.residual.node_count; ++sink) {
            const auto into = shortest_paths_into(r.residual, r.flow.potentials, sink, counter);
            const auto slow = bellman_ford(reversed, sink);
            for (NodeId v = 0; v < r.residual.node_count; ++v) {
                REQUIRE(into.reachable(v) == slow[static_cast<size_t>(v)].has_value());
                if (into.reachable(v)) CHECK(into.at(v) == *slow[static_cast<size_t>(v)]);
            }
        }
    }
}

TEST_CASE("from-trees and into-trees agree pairwise") {
    const auto inst = random_instance(42, 7, 5);
    const auto r = residual_of(inst);
    SearchCounter counter = 0;
    std::vector<DistanceVector> from;
    std::vector<DistanceVector> into;
    for (NodeId v = 0; v < r.residual.node_count; ++v) {
        from.push_back(shortest_paths_from(r.residual, r.flow.potentials, v, counter));
        into.push_back(shortest_paths_into(r.residual, r.flow.potentials, v, counter));
    }
    CHECK(counter == 2 * r.residual.node_count);
    for (NodeId u = 0; u < r.residual.node_count; ++u)
        for (NodeId v = 0; v < r.residual.node_count; ++v) {
            REQUIRE(from[static_cast<size_t>(u)].get(v) == into[static_cast<size_t>(v)].get(u));
        }
}

TEST_CASE("unreachable nodes are marked, not given big distances") {
    const ResidualGraph graph = graph_from_arcs(3, {{0, 1, 5}});
    SearchCounter counter = 0;
    const std::vector<Cost> zero(3, 0);
    const auto dv = shortest_paths_from(graph, zero, 0, counter);
    CHECK(dv.reachable(1));
    CHECK(!dv.reachable(2));
    CHECK(!dv.get(2).has_value());
    CHECK_THROWS_AS(dv.at(2), InternalError);
}

TEST_CASE("figure1 strongly connected components") {
    const auto named = load_figure1();
    const auto r = residual_of(named.core);
    const auto scc = strongly_connected_components(r.residual);
    CHECK(scc.components.size() == 6);

    const auto component_of_name = [&](const std::string& value) {
        return scc.component_of[static_cast<size_t>(r.net.value_node(named.value_index(value)))];
    };
    // {Peter, A, Mary, Paul, B, John} and {Julia, D, s, E}; everything else trivial.
    const int workers = component_of_name("A");
    CHECK(component_of_name("B") == workers);
    CHECK(scc.component_of[static_cast<size_t>(
              r.net.variable_node(named.variable_index("Peter")))] == workers);
    CHECK(scc.components[static_cast<size_t>(workers)].size() == 6);

    const int spare = component_of_name("D");
    CHECK(component_of_name("E") == spare);
    CHECK(scc.component_of[0] == spare);  // source node
    CHECK(scc.components[static_cast<size_t>(spare)].size() == 4);

    CHECK(scc.components[static_cast<size_t>(scc.component_of[1])].size() == 1);  // sink
}

TEST_CASE("a single node with no arcs is one singleton component") {
    const ResidualGraph graph(1);
    const auto scc = strongly_connected_components(graph);
    REQUIRE(scc.components.size() == 1);
    CHECK(scc.components[0] == std::vector<NodeId>{0});
}

TEST_CASE("components match a pairwise-reachability oracle on random digraphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int nodes = 2 + static_cast<int>(rng() % 9);
        std::vector<std::tuple<int, int, Cost>> arcs;
        const int arc_count = static_cast<int>(rng() % static_cast<uint64_t>(3 * nodes + 1));
        for (int i = 0; i < arc_count; ++i) {
            const int from = static_cast<int>(rng() % static_cast<uint64_t>(nodes));
            const int to = static_cast<int>(rng() % static_cast<uint64_t>(nodes));
            if (from != to) arcs.push_back({from, to, 1});
        }
        const ResidualGraph graph = graph_from_arcs(nodes, arcs);
        const auto scc = strongly_connected_components(graph);
        CHECK(scc.component_of == components_by_reachability(graph));
    }
}

TEST_CASE("nodes sharing a component are mutually reachable at finite cost") {
    const auto inst = random_instance(17, 7, 5);
    const auto r = residual_of(inst);
    const auto scc = strongly_connected_components(r.residual);
    SearchCounter counter = 0;
    for (const auto& component : scc.components) {
        const auto from = shortest_paths_from(r.residual, r.flow.potentials, component.front(), counter);
        const auto into = shortest_paths_into(r.residual, r.flow.potentials, component.front(), counter);
        for (const NodeId v : component) {
            CHECK(from.reachable(v));
            CHECK(into.reachable(v));
        }
    }
}
