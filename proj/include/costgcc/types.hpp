#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace costgcc {

using NodeId = int32_t;
using Cost = int64_t;

// Number of single-source shortest-path trees computed so far. This is the
// unit every reported metric is expressed in. Always passed explicitly, never
// global state.
using SearchCounter = int64_t;

// Breach of an internal invariant. Escaping to the CLI maps to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// A residual arc whose cost plus potential difference went negative: the
// potentials are stale or the flow is not at a min-cost state.
class NegativeReducedCost : public InternalError {
public:
    explicit NegativeReducedCost(const std::string& what) : InternalError(what) {}
};

}  // namespace costgcc
