#include "costgcc/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "costgcc/flow.hpp"
#include "costgcc/value_network.hpp"

namespace costgcc {

std::string_view to_string(BoundStyle style) {
    switch (style) {
        case BoundStyle::AlldiffLike: return "alldiff-like";
        case BoundStyle::Loose: return "loose";
        case BoundStyle::Tight: return "tight";
    }
    return "loose";
}

std::optional<BoundStyle> parse_bound_style(std::string_view name) {
    if (name == "alldiff-like") return BoundStyle::AlldiffLike;
    if (name == "loose") return BoundStyle::Loose;
    if (name == "tight") return BoundStyle::Tight;
    return std::nullopt;
}

namespace {

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Cost pick_cost(std::mt19937_64& rng, Cost lo, Cost hi) {
    return lo + static_cast<Cost>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

CostGccInstance sample(const GeneratorSpec& spec, uint64_t seed) {
    std::mt19937_64 rng(seed);
    CostGccInstance inst;
    inst.n_variables = spec.n_variables;
    inst.n_values = spec.n_values;
    inst.domains.resize(static_cast<size_t>(spec.n_variables));
    inst.domain_costs.resize(static_cast<size_t>(spec.n_variables));

    for (int x = 0; x < spec.n_variables; ++x) {
        auto& dom = inst.domains[static_cast<size_t>(x)];
        auto& costs = inst.domain_costs[static_cast<size_t>(x)];
        for (int a = 0; a < spec.n_values; ++a)
            if (unit_real(rng) < spec.density) dom.push_back(a);
        if (dom.empty()) dom.push_back(static_cast<int>(rng() % static_cast<uint64_t>(spec.n_values)));
        for (size_t s = 0; s < dom.size(); ++s)
            costs.push_back(pick_cost(rng, spec.cost_min, spec.cost_max));
    }

    inst.lower.assign(static_cast<size_t>(spec.n_values), 0);
    inst.upper.assign(static_cast<size_t>(spec.n_values), 0);
    switch (spec.bounds) {
        case BoundStyle::AlldiffLike:
            for (int a = 0; a < spec.n_values; ++a) inst.upper[static_cast<size_t>(a)] = 1;
            break;
        case BoundStyle::Loose:
            for (int a = 0; a < spec.n_values; ++a)
                inst.upper[static_cast<size_t>(a)] = spec.n_variables;
            break;
        case BoundStyle::Tight: {
            // Occurrence windows of width two around an even split of n.
            const int base = spec.n_variables / spec.n_values;
            const int remainder = spec.n_variables % spec.n_values;
            for (int a = 0; a < spec.n_values; ++a) {
                const int share = base + (a < remainder ? 1 : 0);
                inst.lower[static_cast<size_t>(a)] = std::max(0, share - 1);
                inst.upper[static_cast<size_t>(a)] = share + 1;
            }
            break;
        }
    }
    return inst;
}

}  // namespace

NamedInstance generate_instance(const GeneratorSpec& spec, std::optional<Cost> fixed_cap) {
    if (spec.n_variables < 1 || spec.n_values < 1)
        throw std::invalid_argument("generator: need at least one variable and one value");
    if (!(spec.density > 0.0) || spec.density > 1.0)
        throw std::invalid_argument("generator: density must be in (0, 1]");
    if (spec.density * spec.n_values < 1.0)
        throw std::invalid_argument("generator: density * nValues must be at least 1");
    if (spec.cost_min < 0 || spec.cost_max < spec.cost_min)
        throw std::invalid_argument("generator: bad cost range");
    if (spec.bounds == BoundStyle::AlldiffLike && spec.n_values < spec.n_variables)
        throw std::invalid_argument(
            "generator: alldiff-like bounds need at least as many values as variables");

    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const uint64_t seed = spec.seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt);
        CostGccInstance core = sample(spec, seed);
        validate(core);
        if (fixed_cap) {
            core.cost_cap = *fixed_cap;
        } else {
            // Regular cap: the smallest cap that still admits a solution.
            const auto flow = min_cost_feasible_flow(build_value_network(core));
            if (!flow) continue;
            core.cost_cap = flow->total_cost;
        }
        NamedInstance named;
        named.core = std::move(core);
        for (int x = 0; x < spec.n_variables; ++x)
            named.variable_names.push_back("x" + std::to_string(x));
        for (int a = 0; a < spec.n_values; ++a)
            named.value_names.push_back("v" + std::to_string(a));
        return named;
    }
    throw std::runtime_error("generator: no feasible instance after " +
                             std::to_string(kMaxAttempts) + " attempts (seed " +
                             std::to_string(spec.seed) + ")");
}

}  // namespace costgcc
