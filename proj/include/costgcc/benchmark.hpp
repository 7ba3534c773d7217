#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costgcc/generator.hpp"
#include "costgcc/landmarks.hpp"
#include "costgcc/propagator.hpp"
#include "costgcc/types.hpp"

namespace costgcc {

enum class Method { Regin, Landmark };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct RunConfig {
    Method method = Method::Regin;
    SelectionPolicy policy{SelectionMethod::MaxDegree, 4, 0};
    std::optional<Cost> cap_override;       // --h
    std::optional<double> cap_multiplier;   // --h-multiplier, >= 1.0
    OutputFormat format = OutputFormat::Json;
};

struct GeneratorBatch {
    GeneratorSpec spec;
    int count = 1;  // instance i uses seed spec.seed + i
};

// One report row. Field names below are the external schema; CSV column
// order matches the listing. Baseline rows carry select "" and k 0.
struct BenchRecord {
    std::string instance;
    Method method = Method::Regin;
    std::string select;
    int k = 0;
    int64_t sp_count = 0;
    int64_t useless_sp_count = 0;
    int64_t removed_arcs = 0;
    int scc_count = 0;
    int cleared_components = 0;
    int64_t wall_time_micros = 0;
    bool consistent = true;
};

// --h replaces the instance cap, then --h-multiplier scales it (floor).
Cost effective_cap(Cost instance_cap, const RunConfig& config);

// Times the propagation call only; cap adjustment, parsing and serialization
// stay outside the clock.
BenchRecord run_one(const std::string& instance_id, const CostGccInstance& instance,
                    const RunConfig& config);

void write_csv_header(std::ostream& out);
void write_record(std::ostream& out, const BenchRecord& record, OutputFormat format);

// Processes files then the generated batch, one flushed record per instance.
// Per-instance load failures are reported to `err` and counted, never abort
// the batch. Returns the failure count.
int run_batch(const std::vector<std::filesystem::path>& files,
              const std::optional<GeneratorBatch>& generated,
              const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace costgcc
