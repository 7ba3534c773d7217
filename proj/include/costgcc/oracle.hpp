#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "costgcc/instance.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

// Exhaustive enumeration refuses instances above this many tuples.
inline constexpr uint64_t kOracleTupleGuard = 10'000'000;

class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Independent brute-force ground truth on small instances. Tuples are
// enumerated lexicographically by variable index then domain order; the
// guard is a hard error, never silent truncation.

// Minimum assignment-cost sum over all cardinality-feasible tuples, ignoring
// the cap. std::nullopt when no tuple satisfies the bounds.
std::optional<Cost> oracle_min_cost(const CostGccInstance& instance);

// Exactly the (variable, value) pairs appearing in at least one
// cardinality-feasible tuple whose cost sum is within the cap. Sorted.
std::vector<std::pair<int, int>> oracle_consistent_pairs(const CostGccInstance& instance);

}  // namespace costgcc
