#include "costgcc/instance.hpp"

#include <algorithm>
#include <string>

namespace costgcc {

int CostGccInstance::domain_slot(int variable, int value) const {
    const auto& dom = domains[static_cast<size_t>(variable)];
    auto it = std::lower_bound(dom.begin(), dom.end(), value);
    if (it == dom.end() || *it != value) return -1;
    return static_cast<int>(it - dom.begin());
}

std::optional<Cost> CostGccInstance::assignment_cost(int variable, int value) const {
    const int slot = domain_slot(variable, value);
    if (slot < 0) return std::nullopt;
    return domain_costs[static_cast<size_t>(variable)][static_cast<size_t>(slot)];
}

namespace {

[[noreturn]] void fail(ValidationFault fault, int variable, int value, const std::string& what) {
    throw ValidationError(fault, variable, value, what);
}

}  // namespace

void validate(const CostGccInstance& inst) {
    if (inst.n_variables < 0 || inst.n_values < 0)
        fail(ValidationFault::Malformed, -1, -1, "negative variable or value count");
    if (inst.domains.size() != static_cast<size_t>(inst.n_variables) ||
        inst.domain_costs.size() != static_cast<size_t>(inst.n_variables))
        fail(ValidationFault::Malformed, -1, -1, "domain tables do not match the variable count");
    if (inst.lower.size() != static_cast<size_t>(inst.n_values) ||
        inst.upper.size() != static_cast<size_t>(inst.n_values))
        fail(ValidationFault::Malformed, -1, -1, "bound tables do not match the value count");
    if (inst.cost_cap < 0)
        fail(ValidationFault::NegativeCap, -1, -1, "cost cap is negative");

    for (int a = 0; a < inst.n_values; ++a) {
        if (inst.lower[a] < 0 || inst.upper[a] < inst.lower[a])
            fail(ValidationFault::BadBounds, -1, a,
                 "value " + std::to_string(a) + " has bounds [" + std::to_string(inst.lower[a]) +
                     ", " + std::to_string(inst.upper[a]) + "]");
    }

    for (int x = 0; x < inst.n_variables; ++x) {
        const auto& dom = inst.domains[static_cast<size_t>(x)];
        const auto& costs = inst.domain_costs[static_cast<size_t>(x)];
        if (dom.empty())
            fail(ValidationFault::EmptyDomain, x, -1,
                 "variable " + std::to_string(x) + " has an empty domain");
        for (size_t s = 0; s < dom.size(); ++s) {
            if (dom[s] < 0 || dom[s] >= inst.n_values)
                fail(ValidationFault::BadDomainValue, x, dom[s],
                     "variable " + std::to_string(x) + " lists unknown value " +
                         std::to_string(dom[s]));
            if (s > 0 && dom[s] <= dom[s - 1])
                fail(ValidationFault::BadDomainValue, x, dom[s],
                     "variable " + std::to_string(x) + " has an unsorted or duplicated domain");
        }
        if (costs.size() < dom.size())
            fail(ValidationFault::MissingCost, x, dom[costs.size()],
                 "variable " + std::to_string(x) + " has no cost for value " +
                     std::to_string(dom[costs.size()]));
        if (costs.size() > dom.size())
            fail(ValidationFault::MissingCost, x, -1,
                 "variable " + std::to_string(x) + " has costs beyond its domain");
        for (size_t s = 0; s < costs.size(); ++s) {
            if (costs[s] < 0)
                fail(ValidationFault::NegativeCost, x, dom[s],
                     "variable " + std::to_string(x) + ", value " + std::to_string(dom[s]) +
                         ": negative cost " + std::to_string(costs[s]));
        }
    }
}

}  // namespace costgcc
