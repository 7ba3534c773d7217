#include "doctest.h"

#include <set>
#include <tuple>

#include "costgcc/flow.hpp"
#include "costgcc/oracle.hpp"
#include "costgcc/residual.hpp"
#include "test_support.hpp"

using namespace costgcc;
using namespace costgcc::testing;

namespace {

void check_feasible(const ValueNetwork& net, const FlowState& state) {
    std::vector<Cost> balance(static_cast<size_t>(net.node_count()), 0);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const NetworkArc& arc = net.arcs[i];
        const int f = state.flow[i];
        CHECK(f >= arc.lower);
        CHECK(f <= arc.upper);
        balance[static_cast<size_t>(arc.from)] -= f;
        balance[static_cast<size_t>(arc.to)] += f;
    }
    for (const Cost b : balance) CHECK(b == 0);
}

}  // namespace

TEST_CASE("figure1 min cost flow costs 7 and matches the drawn assignment") {
    const auto named = load_figure1();
    const auto net = build_value_network(named.core);
    const auto flow = min_cost_feasible_flow(net);
    REQUIRE(flow.has_value());
    CHECK(flow->total_cost == 7);
    check_feasible(net, *flow);

    // The circulation arc carries exactly n units.
    CHECK(flow->flow[static_cast<size_t>(net.circulation_arc())] == 7);

    const std::vector<std::pair<std::string, std::string>> expected{
        {"Peter", "A"}, {"Paul", "A"}, {"Mary", "B"}, {"John", "B"},
        {"Bob", "C"},   {"Mike", "D"}, {"Julia", "D"}};
    for (const auto& [var, val] : expected) {
        const int arc = net.domain_arc(named.value_index(val), named.variable_index(var));
        REQUIRE(arc >= 0);
        CHECK(flow->flow[static_cast<size_t>(arc)] == 1);
    }
}

TEST_CASE("single assignment instance flows one unit at cost zero") {
    const auto inst = make_instance(1, {{{0, 0}}}, {{1, 1}}, 0);
    const auto net = build_value_network(inst);
    const auto flow = min_cost_feasible_flow(net);
    REQUIRE(flow.has_value());
    CHECK(flow->total_cost == 0);
    CHECK(flow->flow[0] == 1);
}

TEST_CASE("uncovered mandatory value makes the flow infeasible") {
    // Value 1 requires one occurrence but no domain contains it.
    const auto inst = make_instance(2, {{{0, 1}}}, {{0, 1}, {1, 1}}, 5);
    CHECK(!min_cost_feasible_flow(build_value_network(inst)).has_value());
}

TEST_CASE("insufficient upper bounds make the flow infeasible") {
    // Two variables competing for a single occurrence slot.
    const auto inst = make_instance(1, {{{0, 1}}, {{0, 1}}}, {{0, 1}}, 5);
    CHECK(!min_cost_feasible_flow(build_value_network(inst)).has_value());
}

TEST_CASE("flow cost matches the exhaustive oracle on random instances") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        const auto inst = random_instance(seed, 7, 5);
        const auto flow = min_cost_feasible_flow(build_value_network(inst));
        const auto expected = oracle_min_cost(inst);
        REQUIRE(flow.has_value() == expected.has_value());
        if (flow) CHECK(flow->total_cost == *expected);
    }
}

TEST_CASE("potentials certify optimality after the flow") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(seed, 7, 5);
        const auto net = build_value_network(inst);
        const auto flow = min_cost_feasible_flow(net);
        REQUIRE(flow.has_value());
        check_feasible(net, *flow);
        const auto residual = build_residual(net, *flow);
        for (const ResidualArc& arc : residual.arcs)
            CHECK(reduced_cost(arc, flow->potentials) >= 0);
    }
}

TEST_CASE("figure1 residual holds the reversed assignment arcs") {
    const auto named = load_figure1();
    const auto net = build_value_network(named.core);
    const auto flow = *min_cost_feasible_flow(net);
    const auto residual = build_residual(net, flow);

    // Mary is assigned B, so the residual carries Mary->B at cost -1.
    const NodeId mary = net.variable_node(named.variable_index("Mary"));
    const NodeId b = net.value_node(named.value_index("B"));
    bool found = false;
    for (const int id : residual.out[static_cast<size_t>(mary)]) {
        const ResidualArc& arc = residual.arcs[static_cast<size_t>(id)];
        if (arc.to == b) {
            found = true;
            CHECK(arc.cost == -1);
            CHECK(arc.backward);
        }
    }
    CHECK(found);

    // The saturated circulation arc (lower == upper == flow) leaves no
    // residual arc in either direction.
    for (const ResidualArc& arc : residual.arcs) CHECK(arc.network_arc != net.circulation_arc());
}

TEST_CASE("residual graph matches an independent reconstruction") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(seed, 6, 5);
        const auto net = build_value_network(inst);
        const auto flow = *min_cost_feasible_flow(net);
        const auto residual = build_residual(net, flow);

        std::multiset<std::tuple<NodeId, NodeId, int, Cost>> expected;
        for (size_t i = 0; i < net.arcs.size(); ++i) {
            const NetworkArc& arc = net.arcs[i];
            const int f = flow.flow[i];
            if (f < arc.upper) expected.insert({arc.from, arc.to, arc.upper - f, arc.cost});
            if (f > arc.lower) expected.insert({arc.to, arc.from, f - arc.lower, -arc.cost});
        }
        REQUIRE(residual.arcs.size() == expected.size());
        std::multiset<std::tuple<NodeId, NodeId, int, Cost>> actual;
        for (const ResidualArc& arc : residual.arcs)
            actual.insert({arc.from, arc.to, arc.capacity, arc.cost});
        CHECK(actual == expected);
    }
}

TEST_CASE("reduced_cost throws on stale potentials") {
    const auto named = load_figure1();
    const auto net = build_value_network(named.core);
    const auto flow = *min_cost_feasible_flow(net);
    const auto residual = build_residual(net, flow);

    std::vector<Cost> skewed = flow.potentials;
    skewed[static_cast<size_t>(residual.arcs[0].to)] += 1000;
    bool threw = false;
    for (const ResidualArc& arc : residual.arcs) {
        try {
            reduced_cost(arc, skewed);
        } catch (const NegativeReducedCost&) {
            threw = true;
        }
    }
    CHECK(threw);
}
