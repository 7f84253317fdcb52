#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "olx/errors.hpp"
#include "olx/reports.hpp"

using namespace olx;
using json = nlohmann::ordered_json;

namespace {

const char* kS3 = R"({
  "space": {"domain": "integers", "weights": {"kind": "sym_geometric", "ratio": 0.5}},
  "phi": {"kind": "power", "p": 1},
  "weight": {"kind": "constant", "c": 1},
  "tau": {"kind": "shift_z", "offset": 1},
  "sets": {"A0": [0]},
  "vectors": {"blocks1": {"peaks": [
    {"position": 4, "coefficient": 1},
    {"position": 16, "coefficient": 1},
    {"position": 64, "coefficient": 1},
    {"position": 256, "coefficient": 1}
  ]}},
  "family": {"sets": {"kind": "singletons", "from": 0, "to": 20},
             "gamma": {"kind": "arithmetic", "first": 1, "step": 1, "count": 300}},
  "defaults": {"horizon": 300, "threshold": 1e6}
})";

long count_lines(const std::string& text) {
    long lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("norm command reports the indicator norm") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    const RunReport report = run_command(Command::norm, s, flags);
    const json out = json::parse(report.artifact);
    CHECK(out["norm"].get<double>() == 1.0);
    CHECK(out["modular_at_norm"].get<double>() <= 1.0);
    CHECK(out["bracket_width"].get<double>() < 1e-9);
    CHECK(report.scenario_digest.size() == 16);
}

TEST_CASE("orbit command emits horizon+1 CSV rows") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.vector_name = "blocks1";
    flags.horizon = 300;
    const RunReport report = run_command(Command::orbit, s, flags);
    CHECK(report.format == ArtifactFormat::csv);
    CHECK(count_lines(report.artifact) == 302);  // header + n = 0..300
    std::istringstream lines(report.artifact);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,norm,sup_norm,intersection_norm");
}

TEST_CASE("criteria command matches the module verdict") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    flags.check = "T23c";
    flags.horizon = 40;
    const RunReport report = run_command(Command::criteria, s, flags);
    const json out = json::parse(report.artifact);
    CHECK(out["criterion"] == "T23c");
    CHECK(out["status"] == "WitnessedDivergence");
    CHECK(out["witness"]["n"].get<long>() == 20);
    CHECK(out["witness"]["value"].get<double>() == 1048576.0);
}

TEST_CASE("criteria 'all' runs every applicable check") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    flags.check = "all";
    flags.horizon = 60;
    const RunReport report = run_command(Command::criteria, s, flags);
    const json out = json::parse(report.artifact);
    REQUIRE(out.is_array());
    // T23c, T23d, T23e, T23f, T21, T22i, T22ii
    CHECK(out.size() == 7);
}

TEST_CASE("crosscheck artifact is byte-identical across runs") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    const RunReport first = run_command(Command::crosscheck, s, flags);
    const RunReport second = run_command(Command::crosscheck, s, flags);
    CHECK(first.artifact == second.artifact);
    const json out = json::parse(first.artifact);
    CHECK(out["agreement"].get<bool>());
}

TEST_CASE("artifacts land in --out") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    flags.out_path = "test_reports_out.json";
    const RunReport report = run_command(Command::norm, s, flags);
    std::ifstream in(*flags.out_path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == report.artifact);
    in.close();
    std::remove(flags.out_path->c_str());
}

TEST_CASE("flag validation and exit-code classification") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    CHECK_THROWS_AS(run_command(Command::norm, s, flags), schema_error);  // no target
    flags.set_name = "A0";
    flags.vector_name = "blocks1";
    CHECK_THROWS_AS(run_command(Command::norm, s, flags), schema_error);  // both targets

    CHECK(classify_exception(schema_error("x")) == ExitCode::schema_error);
    CHECK(classify_exception(precondition_error("x")) == ExitCode::precondition_error);
    CHECK(classify_exception(std::domain_error("x")) == ExitCode::precondition_error);
    CHECK(classify_exception(internal_error("x")) == ExitCode::internal_error);
    CHECK(parse_command_name("orbit") == Command::orbit);
    CHECK_THROWS_AS(parse_command_name("bogus"), schema_error);
}

TEST_CASE("orbit command accepts json format") {
    const Scenario s = parse_scenario_text(kS3);
    CommandFlags flags;
    flags.set_name = "A0";
    flags.horizon = 10;
    flags.format = ArtifactFormat::json;
    const RunReport report = run_command(Command::orbit, s, flags);
    const json out = json::parse(report.artifact);
    CHECK(out["norms"].size() == 11);
    CHECK(out["norms"][3].get<double>() == 0.125);
    CHECK(out["classification"] == "NoWitness");
}
