#include "costgcc/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "costgcc/io.hpp"

namespace costgcc {

std::string_view to_string(Method method) {
    return method == Method::Regin ? "regin" : "landmark";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "regin") return Method::Regin;
    if (name == "landmark") return Method::Landmark;
    return std::nullopt;
}

Cost effective_cap(Cost instance_cap, const RunConfig& config) {
    Cost cap = config.cap_override.value_or(instance_cap);
    if (config.cap_multiplier)
        cap = static_cast<Cost>(std::floor(static_cast<double>(cap) * *config.cap_multiplier));
    return cap;
}

BenchRecord run_one(const std::string& instance_id, const CostGccInstance& instance,
                    const RunConfig& config) {
    CostGccInstance prepared = instance;
    prepared.cost_cap = effective_cap(instance.cost_cap, config);

    const auto start = std::chrono::steady_clock::now();
    const FilterReport report = config.method == Method::Regin
                                    ? propagate_regin(prepared)
                                    : propagate_landmarks(prepared, config.policy);
    const auto stop = std::chrono::steady_clock::now();

    BenchRecord record;
    record.instance = instance_id;
    record.method = config.method;
    if (config.method == Method::Landmark) {
        record.select = std::string(to_string(config.policy.method));
        record.k = config.policy.count;
    }
    record.sp_count = report.sp_count;
    record.useless_sp_count = report.useless_sp_count;
    record.removed_arcs = static_cast<int64_t>(report.removed.size());
    record.scc_count = report.scc_count;
    record.cleared_components = static_cast<int>(
        std::count_if(report.scc_outcomes.begin(), report.scc_outcomes.end(),
                      [](const ComponentOutcome& o) { return o.cleared_by_component_bound; }));
    record.wall_time_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    record.consistent = report.consistent;
    return record;
}

namespace {

// Instance ids are file stems or generated names; quoting still keeps any
// odd characters from breaking the column layout.
std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_csv_header(std::ostream& out) {
    out << "instance,method,select,k,sp_count,useless_sp_count,removed_arcs,scc_count,"
           "cleared_components,wall_time_micros,consistent\n";
    out.flush();
}

void write_record(std::ostream& out, const BenchRecord& record, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << csv_quote(record.instance) << ',' << to_string(record.method) << ','
            << record.select << ',' << record.k << ',' << record.sp_count << ','
            << record.useless_sp_count << ',' << record.removed_arcs << ',' << record.scc_count
            << ',' << record.cleared_components << ',' << record.wall_time_micros << ','
            << (record.consistent ? "true" : "false") << '\n';
    } else {
        nlohmann::ordered_json row;
        row["instance"] = record.instance;
        row["method"] = to_string(record.method);
        row["select"] = record.select;
        row["k"] = record.k;
        row["sp_count"] = record.sp_count;
        row["useless_sp_count"] = record.useless_sp_count;
        row["removed_arcs"] = record.removed_arcs;
        row["scc_count"] = record.scc_count;
        row["cleared_components"] = record.cleared_components;
        row["wall_time_micros"] = record.wall_time_micros;
        row["consistent"] = record.consistent;
        out << row.dump() << '\n';
    }
    out.flush();
}

int run_batch(const std::vector<std::filesystem::path>& files,
              const std::optional<GeneratorBatch>& generated, const RunConfig& config,
              std::ostream& out, std::ostream& err) {
    int failures = 0;
    if (config.format == OutputFormat::Csv) write_csv_header(out);

    for (const auto& path : files) {
        try {
            const NamedInstance named = load_instance(path, config.cap_override);
            write_record(out, run_one(path.stem().string(), named.core, config), config.format);
        } catch (const ParseError& e) {
            err << e.what() << '\n';
            ++failures;
        } catch (const ValidationError& e) {
            err << path.string() << ": " << e.what() << '\n';
            ++failures;
        }
    }

    if (generated) {
        for (int i = 0; i < generated->count; ++i) {
            GeneratorSpec spec = generated->spec;
            spec.seed = generated->spec.seed + static_cast<uint64_t>(i);
            const std::string id =
                "gen-" + std::to_string(generated->spec.seed) + "-" + std::to_string(i);
            const NamedInstance named = generate_instance(spec);
            write_record(out, run_one(id, named.core, config), config.format);
        }
    }
    return failures;
}

}  // namespace costgcc
