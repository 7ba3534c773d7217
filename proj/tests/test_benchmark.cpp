#include "doctest.h"

#include <regex>
#include <sstream>

#include "costgcc/benchmark.hpp"
#include "test_support.hpp"

using namespace costgcc;
using namespace costgcc::testing;

namespace {

std::filesystem::path figure1_path() {
    return std::filesystem::path(COSTGCC_DATA_DIR) / "figure1.json";
}

std::string strip_timing(const std::string& report) {
    // json: "wall_time_micros":123,  csv: the dedicated column.
    std::string masked = std::regex_replace(
        report, std::regex(R"("wall_time_micros":\d+)"), "\"wall_time_micros\":0");
    return std::regex_replace(masked, std::regex(R"(,\d+,(true|false)\n)"), ",0,$1\n");
}

}  // namespace

TEST_CASE("cap override and multiplier compose") {
    RunConfig config;
    CHECK(effective_cap(10, config) == 10);
    config.cap_multiplier = 2.0;
    CHECK(effective_cap(10, config) == 20);
    config.cap_override = 7;
    CHECK(effective_cap(10, config) == 14);
    config.cap_multiplier = 1.5;
    CHECK(effective_cap(10, config) == 10);  // floor(7 * 1.5)
}

TEST_CASE("baseline record for the bundled fixture") {
    const auto named = load_figure1();
    RunConfig config;
    config.method = Method::Regin;
    const auto record = run_one("figure1", named.core, config);
    CHECK(record.instance == "figure1");
    CHECK(record.method == Method::Regin);
    CHECK(record.select.empty());
    CHECK(record.k == 0);
    CHECK(record.sp_count == 4);
    CHECK(record.removed_arcs == 4);
    CHECK(record.scc_count == 0);
    CHECK(record.consistent);
}

TEST_CASE("landmark record for the bundled fixture") {
    const auto named = load_figure1();
    RunConfig config;
    config.method = Method::Landmark;
    config.policy = {SelectionMethod::MaxDegree, 4, 0};
    const auto record = run_one("figure1", named.core, config);
    CHECK(record.select == "degree");
    CHECK(record.k == 4);
    CHECK(record.removed_arcs == 4);
    CHECK(record.scc_count == 6);
    CHECK(record.cleared_components == 1);
}

TEST_CASE("csv header matches the documented column order") {
    std::ostringstream out;
    write_csv_header(out);
    CHECK(out.str() ==
          "instance,method,select,k,sp_count,useless_sp_count,removed_arcs,scc_count,"
          "cleared_components,wall_time_micros,consistent\n");
}

TEST_CASE("reports are reproducible modulo timing") {
    for (const auto format : {OutputFormat::Json, OutputFormat::Csv}) {
        RunConfig config;
        config.method = Method::Landmark;
        config.policy = {SelectionMethod::Random, 2, 7};
        config.cap_multiplier = 2.0;
        config.format = format;

        GeneratorBatch batch;
        batch.spec.n_variables = 6;
        batch.spec.n_values = 5;
        batch.spec.density = 0.6;
        batch.spec.seed = 5;
        batch.count = 5;

        std::ostringstream first, second, err;
        CHECK(run_batch({figure1_path()}, batch, config, first, err) == 0);
        CHECK(run_batch({figure1_path()}, batch, config, second, err) == 0);
        CHECK(strip_timing(first.str()) == strip_timing(second.str()));
        CHECK(first.str().find("gen-5-4") != std::string::npos);
    }
}

TEST_CASE("a broken file is reported and does not abort the batch") {
    const auto missing = std::filesystem::temp_directory_path() / "costgcc_does_not_exist.json";
    RunConfig config;
    config.format = OutputFormat::Csv;
    std::ostringstream out, err;
    const int failures = run_batch({missing, figure1_path()}, std::nullopt, config, out, err);
    CHECK(failures == 1);
    CHECK(err.str().find("costgcc_does_not_exist") != std::string::npos);
    CHECK(out.str().find("figure1,regin") != std::string::npos);
}

TEST_CASE("json records keep one object per line with fixed keys") {
    const auto named = load_figure1();
    RunConfig config;
    std::ostringstream out;
    write_record(out, run_one("figure1", named.core, config), OutputFormat::Json);
    const std::string line = out.str();
    CHECK(line.rfind("{\"instance\":\"figure1\",\"method\":\"regin\",\"select\":\"\",\"k\":0,"
                     "\"sp_count\":4,\"useless_sp_count\":2,\"removed_arcs\":4,",
                     0) == 0);
    CHECK(line.back() == '\n');
}
