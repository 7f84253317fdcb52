#pragma once

#include <optional>
#include <string>

#include "olx/scenario.hpp"

namespace olx {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { norm, orbit, criteria, crosscheck };

enum class ArtifactFormat { json, csv };

struct CommandFlags {
    std::optional<std::string> set_name;
    std::optional<std::string> vector_name;
    std::optional<long> horizon;
    std::optional<double> threshold;
    std::optional<double> eps_low;
    std::optional<double> delta;
    std::optional<std::string> check;     // T23c|T23d|T23e|T23f|T21|T22|L1|all
    std::optional<std::string> out_path;  // artifact destination; stdout if absent
    std::optional<ArtifactFormat> format;
    int trials = 64;                      // L1 only
    std::uint64_t seed = 0;               // L1 only
};

// Outcome of one subcommand run. The artifact text is deterministic for a
// fixed scenario and flags; the summary carries wall-clock and is meant for
// humans only.
struct RunReport {
    std::string scenario_digest;  // FNV-1a of the canonical scenario JSON
    std::string artifact;         // JSON or CSV payload
    ArtifactFormat format = ArtifactFormat::json;
    std::string summary;
    double wall_ms = 0.0;
};

// Dispatches to the library, writes the artifact to flags.out_path when set,
// and returns the report. Throws schema/precondition/internal errors; the
// CLI maps them to exit codes 2/3/4.
RunReport run_command(Command cmd, const Scenario& scenario, const CommandFlags& flags);

Command parse_command_name(const std::string& name);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace olx
