#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "costgcc/types.hpp"

namespace costgcc {

// One propagation call's input: variables 0..n-1 taking values 0..d-1, a
// per-variable domain with one assignment cost per member, a per-value
// occurrence window [lower, upper], and a cap on the summed assignment costs.
// Instances are plain data, immutable by convention once built, and safe to
// share across threads.
struct CostGccInstance {
    int n_variables = 0;
    int n_values = 0;
    std::vector<std::vector<int>> domains;        // per variable, strictly increasing value ids
    std::vector<std::vector<Cost>> domain_costs;  // parallel to domains
    std::vector<int> lower;                       // per value
    std::vector<int> upper;                       // per value
    Cost cost_cap = 0;

    // Position of `value` inside domains[variable], or -1 when absent.
    int domain_slot(int variable, int value) const;
    std::optional<Cost> assignment_cost(int variable, int value) const;

    bool operator==(const CostGccInstance&) const = default;
};

enum class ValidationFault {
    EmptyDomain,
    MissingCost,
    BadBounds,
    BadDomainValue,
    NegativeCost,
    NegativeCap,
    Malformed,
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationFault fault, int variable, int value, const std::string& what)
        : std::runtime_error(what), fault(fault), variable(variable), value(value) {}

    ValidationFault fault;
    int variable;  // -1 when not variable-specific
    int value;     // -1 when not value-specific
};

// Checks every structural invariant of the instance and throws a
// ValidationError naming the first offending element. Note that feasibility
// of the cardinality bounds is deliberately not checked here: an instance
// whose bounds admit no assignment is valid input whose propagation simply
// reports inconsistency.
void validate(const CostGccInstance& instance);

}  // namespace costgcc
