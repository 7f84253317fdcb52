// olx: Orlicz-Lorentz composition-operator explorer.
//
// Subcommands: norm, orbit, criteria, crosscheck. Scenarios are JSON files;
// artifacts are JSON verdicts or CSV orbit traces, written to --out or
// stdout. Exit codes: 0 success, 2 schema error, 3 precondition error,
// 4 internal invariant breach.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "olx/errors.hpp"
#include "olx/reports.hpp"

namespace {

struct CliOptions {
    std::string scenario_path;
    olx::CommandFlags flags;
    std::string format;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--scenario", opt.scenario_path, "scenario JSON file")->required();
    cmd->add_option("--out", [&opt](const std::vector<std::string>& v) {
        opt.flags.out_path = v.front();
        return true;
    }, "write the artifact to this file (summary goes to stdout)");
}

void add_horizon_threshold(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--horizon", [&opt](const std::vector<std::string>& v) {
        opt.flags.horizon = std::stol(v.front());
        return true;
    }, "finite horizon N (T22 uses it as the window radius Q)");
    cmd->add_option("--threshold", [&opt](const std::vector<std::string>& v) {
        opt.flags.threshold = std::stod(v.front());
        return true;
    }, "divergence threshold T");
    cmd->add_option("--eps-low", [&opt](const std::vector<std::string>& v) {
        opt.flags.eps_low = std::stod(v.front());
        return true;
    }, "liminf threshold for orbit witnesses");
    cmd->add_option("--delta", [&opt](const std::vector<std::string>& v) {
        opt.flags.delta = std::stod(v.front());
        return true;
    }, "liminf separation for T23f");
}

void add_target(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--set", [&opt](const std::vector<std::string>& v) {
        opt.flags.set_name = v.front();
        return true;
    }, "named set (used as an indicator vector where one is needed)");
    cmd->add_option("--vector", [&opt](const std::vector<std::string>& v) {
        opt.flags.vector_name = v.front();
        return true;
    }, "named block vector");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orlicz-Lorentz composition-operator explorer"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* norm = app.add_subcommand("norm", "Luxemburg norm of a set or vector");
    add_common(norm, opt);
    add_target(norm, opt);

    CLI::App* orbit = app.add_subcommand("orbit", "orbit norm trace (CSV by default)");
    add_common(orbit, opt);
    add_target(orbit, opt);
    add_horizon_threshold(orbit, opt);
    orbit->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* criteria = app.add_subcommand("criteria", "finite-horizon criterion verdicts");
    add_common(criteria, opt);
    add_target(criteria, opt);
    add_horizon_threshold(criteria, opt);
    criteria->add_option("--check", [&opt](const std::vector<std::string>& v) {
        opt.flags.check = v.front();
        return true;
    }, "T23c|T23d|T23e|T23f|T21|T22|L1|all");
    criteria->add_option("--trials", opt.flags.trials, "L1 trial count");

    CLI::App* crosscheck = app.add_subcommand("crosscheck", "criteria vs orbit agreement matrix");
    add_common(crosscheck, opt);
    add_target(crosscheck, opt);
    add_horizon_threshold(crosscheck, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!opt.format.empty())
            opt.flags.format = opt.format == "json" ? olx::ArtifactFormat::json
                                                    : olx::ArtifactFormat::csv;
        if (const char* seed = std::getenv("OLX_SEED"))
            opt.flags.seed = std::strtoull(seed, nullptr, 10);

        const olx::Scenario scenario = olx::parse_scenario(opt.scenario_path);
        olx::Command cmd = olx::Command::norm;
        if (norm->parsed()) cmd = olx::Command::norm;
        else if (orbit->parsed()) cmd = olx::Command::orbit;
        else if (criteria->parsed()) cmd = olx::Command::criteria;
        else if (crosscheck->parsed()) cmd = olx::Command::crosscheck;

        const olx::RunReport report = olx::run_command(cmd, scenario, opt.flags);
        if (opt.flags.out_path) {
            std::cout << "olx " << olx::kToolVersion
                      << " scenario " << report.scenario_digest
                      << ": " << report.summary
                      << " -> " << *opt.flags.out_path
                      << " (" << report.wall_ms << " ms)\n";
        } else {
            std::cout << report.artifact;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(olx::classify_exception(e));
    }
}
