#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "costgcc/instance.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

// Dense-index instance plus the external names it was declared with. Names
// exist only at this boundary; everything below works on indices.
struct NamedInstance {
    CostGccInstance core;
    std::vector<std::string> variable_names;
    std::vector<std::string> value_names;

    bool operator==(const NamedInstance&) const = default;

    int variable_index(std::string_view name) const;  // -1 when unknown
    int value_index(std::string_view name) const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string origin, int line, const std::string& reason);

    std::string origin;
    int line;  // 1-based; 0 when the position is not line-addressable
};

// JSON document format (field names are part of the CLI contract):
//   variables: [name, ...]
//   values:    [name, ...]
//   bounds:    { value-name: [lower, upper], ... }   one entry per value
//   domains:   { variable-name: [{"value": name, "cost": int}, ...], ... }
//   H:         integer cost cap
NamedInstance parse_instance_json(const std::string& text, const std::string& origin);
std::string encode_instance_json(const NamedInstance& instance);

// TSPLIB subset: TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D, or EXPLICIT with
// FULL_MATRIX / UPPER_ROW / LOWER_ROW / UPPER_DIAG_ROW / LOWER_DIAG_ROW.
// Cities become both the variables and the values, each city's domain is
// every other city at the matrix distance, and all bounds are [1, 1]. The
// cost cap is not part of the format and must be supplied.
NamedInstance load_tsp(const std::filesystem::path& path, Cost cost_cap);

// Dispatches on extension: ".tsp" requires tsp_cost_cap, anything else is
// parsed as a JSON document. The returned instance is already validated.
NamedInstance load_instance(const std::filesystem::path& path,
                            std::optional<Cost> tsp_cost_cap = std::nullopt);

void save_instance(const NamedInstance& instance, const std::filesystem::path& path);

}  // namespace costgcc
