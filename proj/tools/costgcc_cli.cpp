#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "costgcc/benchmark.hpp"
#include "costgcc/generator.hpp"
#include "costgcc/io.hpp"
#include "costgcc/types.hpp"

namespace {

namespace fs = std::filesystem;
using namespace costgcc;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;     // parse or validation failure
constexpr int kExitInternal = 3;  // internal invariant breach

// "vars=6,vals=5,density=0.6,cmin=0,cmax=9,bounds=loose,seed=3,count=100"
GeneratorBatch parse_generator_spec(const std::string& text) {
    GeneratorBatch batch;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--gen", "expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "vars") {
            batch.spec.n_variables = std::stoi(value);
        } else if (key == "vals") {
            batch.spec.n_values = std::stoi(value);
        } else if (key == "density") {
            batch.spec.density = std::stod(value);
        } else if (key == "cmin") {
            batch.spec.cost_min = std::stoll(value);
        } else if (key == "cmax") {
            batch.spec.cost_max = std::stoll(value);
        } else if (key == "bounds") {
            const auto style = parse_bound_style(value);
            if (!style) throw CLI::ValidationError("--gen", "unknown bound style '" + value + "'");
            batch.spec.bounds = *style;
        } else if (key == "seed") {
            batch.spec.seed = std::stoull(value);
        } else if (key == "count") {
            batch.count = std::stoi(value);
        } else {
            throw CLI::ValidationError("--gen", "unknown key '" + key + "'");
        }
    }
    if (batch.spec.n_variables <= 0 || batch.spec.n_values <= 0)
        throw CLI::ValidationError("--gen", "vars and vals are required and positive");
    if (batch.count <= 0) throw CLI::ValidationError("--gen", "count must be positive");
    return batch;
}

int run_generate(const GeneratorSpec& spec, int count, const std::optional<Cost>& fixed_cap,
                 const std::string& out_dir) {
    if (count > 1 && out_dir.empty()) {
        std::cerr << "generate: --out DIR is required when count > 1\n";
        return kExitParse;
    }
    if (out_dir.empty()) {
        std::cout << encode_instance_json(generate_instance(spec, fixed_cap));
        return kExitOk;
    }
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        GeneratorSpec one = spec;
        one.seed = spec.seed + static_cast<uint64_t>(i);
        const fs::path target = fs::path(out_dir) / ("gen-" + std::to_string(spec.seed) + "-" +
                                                     std::to_string(i) + ".json");
        save_instance(generate_instance(one, fixed_cap), target);
        std::cout << target.string() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc consistency filtering for the cardinality constraint with costs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help");

    // generate
    auto* generate = app.add_subcommand("generate", "Write random instances as JSON");
    generate->set_help_flag("--help", "Print help");
    GeneratorSpec gen_spec;
    int gen_count = 1;
    std::string gen_out;
    std::string gen_bounds = "loose";
    std::optional<Cost> gen_cap;
    generate->add_option("--vars", gen_spec.n_variables, "Number of variables")->required();
    generate->add_option("--vals", gen_spec.n_values, "Number of values")->required();
    generate->add_option("--density", gen_spec.density, "Domain density in (0,1]")
        ->default_val(0.5);
    generate->add_option("--cmin", gen_spec.cost_min, "Minimum assignment cost")->default_val(0);
    generate->add_option("--cmax", gen_spec.cost_max, "Maximum assignment cost")->default_val(9);
    generate->add_option("--bounds", gen_bounds, "Cardinality style")
        ->check(CLI::IsMember({"alldiff-like", "loose", "tight"}))
        ->default_val("loose");
    generate->add_option("--seed", gen_spec.seed, "Base seed")->default_val(1);
    generate->add_option("--count", gen_count, "Instances to emit (seeds seed..seed+count-1)")
        ->default_val(1);
    generate->add_option("--h", gen_cap,
                         "Fixed cost cap; default is the minimum feasible flow cost");
    generate->add_option("--out", gen_out, "Output directory");

    // run
    auto* run = app.add_subcommand("run", "Propagate instances and report metrics");
    run->set_help_flag("--help", "Print help");
    std::vector<std::string> run_files;
    std::string run_method = "regin";
    std::string run_select = "degree";
    int run_k = 4;
    uint64_t run_seed = 0;
    std::optional<Cost> run_cap;
    std::optional<double> run_multiplier;
    std::string run_format = "json";
    std::string run_out;
    std::string run_gen;
    run->add_option("instances", run_files, "Instance files (.json or .tsp)");
    run->add_option("--method", run_method, "Propagation method")
        ->check(CLI::IsMember({"regin", "landmark"}))
        ->default_val("regin");
    run->add_option("--select", run_select, "Landmark selection method")
        ->check(CLI::IsMember({"random", "outline", "center", "outline-center", "degree"}))
        ->default_val("degree");
    run->add_option("--landmarks", run_k, "Landmarks per component (k)")
        ->check(CLI::PositiveNumber)
        ->default_val(4);
    run->add_option("--seed", run_seed, "Seed for seeded selection methods")->default_val(0);
    run->add_option("--h", run_cap, "Replace the instance cost cap (required for .tsp)");
    run->add_option("--h-multiplier", run_multiplier, "Scale the cost cap (>= 1.0)")
        ->check(CLI::Range(1.0, 1e9));
    run->add_option("--format", run_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
    run->add_option("--out", run_out, "Report file; stdout when omitted");
    run->add_option("--gen", run_gen,
                    "Generate an ephemeral batch, e.g. "
                    "\"vars=6,vals=5,density=0.6,cmin=0,cmax=9,bounds=loose,seed=3,count=100\"");

    try {
        app.parse(argc, argv);

        if (generate->parsed()) {
            const auto style = parse_bound_style(gen_bounds);
            gen_spec.bounds = *style;  // membership already checked
            return run_generate(gen_spec, gen_count, gen_cap, gen_out);
        }

        RunConfig config;
        config.method = *parse_method(run_method);
        config.policy.method = *parse_selection_method(run_select);
        config.policy.count = run_k;
        config.policy.seed = run_seed;
        config.cap_override = run_cap;
        config.cap_multiplier = run_multiplier;
        config.format = run_format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

        std::vector<fs::path> files(run_files.begin(), run_files.end());
        std::optional<GeneratorBatch> batch;
        if (!run_gen.empty()) {
            batch = parse_generator_spec(run_gen);
            if (batch->spec.seed == 0) batch->spec.seed = run_seed;
        }
        if (files.empty() && !batch) {
            std::cerr << "run: no instances given (pass files or --gen)\n";
            return kExitParse;
        }

        std::ofstream out_file;
        if (!run_out.empty()) {
            out_file.open(run_out, std::ios::binary);
            if (!out_file) {
                std::cerr << "run: cannot open " << run_out << " for writing\n";
                return kExitParse;
            }
        }
        std::ostream& out = run_out.empty() ? std::cout : out_file;
        const int failures = run_batch(files, batch, config, out, std::cerr);
        return failures == 0 ? kExitOk : kExitParse;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitInternal;
    }
}
