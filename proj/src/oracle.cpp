#include "costgcc/oracle.hpp"

#include <string>

namespace costgcc {
namespace {

uint64_t tuple_space(const CostGccInstance& inst) {
    uint64_t product = 1;
    for (const auto& dom : inst.domains) {
        product *= dom.size();
        if (product > kOracleTupleGuard) return product;
    }
    return product;
}

void check_guard(const CostGccInstance& inst) {
    const uint64_t space = tuple_space(inst);
    if (space > kOracleTupleGuard)
        throw TooLargeError("tuple space exceeds the enumeration guard (" +
                            std::to_string(kOracleTupleGuard) + ")");
}

// Odometer over the Cartesian product of domains, lexicographic by variable
// then domain order, with occurrence counts and the cost sum maintained
// incrementally. Calls fn(cost, slots) on every cardinality-feasible tuple.
template <typename Fn>
void for_each_feasible_tuple(const CostGccInstance& inst, Fn&& fn) {
    const int n = inst.n_variables;
    std::vector<size_t> slot(static_cast<size_t>(n), 0);
    std::vector<int> count(static_cast<size_t>(inst.n_values), 0);
    Cost cost = 0;
    for (int x = 0; x < n; ++x) {
        ++count[static_cast<size_t>(inst.domains[static_cast<size_t>(x)][0])];
        cost += inst.domain_costs[static_cast<size_t>(x)][0];
    }

    while (true) {
        bool feasible = true;
        for (int a = 0; a < inst.n_values && feasible; ++a)
            feasible = inst.lower[static_cast<size_t>(a)] <= count[static_cast<size_t>(a)] &&
                       count[static_cast<size_t>(a)] <= inst.upper[static_cast<size_t>(a)];
        if (feasible) fn(cost, slot);

        int x = n - 1;
        while (x >= 0) {
            const auto& dom = inst.domains[static_cast<size_t>(x)];
            const auto& costs = inst.domain_costs[static_cast<size_t>(x)];
            size_t& s = slot[static_cast<size_t>(x)];
            --count[static_cast<size_t>(dom[s])];
            cost -= costs[s];
            if (++s < dom.size()) {
                ++count[static_cast<size_t>(dom[s])];
                cost += costs[s];
                break;
            }
            s = 0;
            ++count[static_cast<size_t>(dom[0])];
            cost += costs[0];
            --x;
        }
        if (x < 0) break;
    }
}

}  // namespace

std::optional<Cost> oracle_min_cost(const CostGccInstance& inst) {
    check_guard(inst);
    std::optional<Cost> best;
    for_each_feasible_tuple(inst, [&](Cost cost, const std::vector<size_t>&) {
        if (!best || cost < *best) best = cost;
    });
    return best;
}

std::vector<std::pair<int, int>> oracle_consistent_pairs(const CostGccInstance& inst) {
    check_guard(inst);
    std::vector<std::vector<char>> supported(static_cast<size_t>(inst.n_variables));
    for (int x = 0; x < inst.n_variables; ++x)
        supported[static_cast<size_t>(x)].assign(inst.domains[static_cast<size_t>(x)].size(), 0);

    for_each_feasible_tuple(inst, [&](Cost cost, const std::vector<size_t>& slot) {
        if (cost > inst.cost_cap) return;
        for (int x = 0; x < inst.n_variables; ++x)
            supported[static_cast<size_t>(x)][slot[static_cast<size_t>(x)]] = 1;
    });

    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < inst.n_variables; ++x)
        for (size_t s = 0; s < supported[static_cast<size_t>(x)].size(); ++s)
            if (supported[static_cast<size_t>(x)][s])
                pairs.push_back({x, inst.domains[static_cast<size_t>(x)][s]});
    return pairs;  // already sorted: ascending variable, ascending value
}

}  // namespace costgcc
