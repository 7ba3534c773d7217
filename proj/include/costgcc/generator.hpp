#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "costgcc/io.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

enum class BoundStyle { AlldiffLike, Loose, Tight };

std::string_view to_string(BoundStyle style);
std::optional<BoundStyle> parse_bound_style(std::string_view name);

struct GeneratorSpec {
    int n_variables = 0;
    int n_values = 0;
    double density = 0.5;  // inclusion probability per (variable, value); (0, 1]
    Cost cost_min = 0;
    Cost cost_max = 9;
    BoundStyle bounds = BoundStyle::Loose;
    uint64_t seed = 0;
};

// Deterministic under the seed. Domains are sampled at the given density and
// never left empty. Without fixed_cap the cap is set to the minimum feasible
// flow cost ("regular" cap: the smallest cap with a solution); sampling
// retries with a seed-derived variation when the drawn instance admits no
// feasible flow, so the result always propagates to consistent = true.
NamedInstance generate_instance(const GeneratorSpec& spec,
                                std::optional<Cost> fixed_cap = std::nullopt);

}  // namespace costgcc
