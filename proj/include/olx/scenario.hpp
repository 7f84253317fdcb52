#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olx/criteria.hpp"
#include "olx/dynamics.hpp"
#include "olx/norms.hpp"
#include "olx/transform.hpp"

namespace olx {

struct ScenarioDefaults {
    long horizon = 10000;
    double threshold = 1e6;
    double eps_low = 1e-6;
    double delta = 1e-9;
};

// A fully validated scenario: the space, gauge, weight and transformation,
// plus named sets, named block vectors, an optional family for the
// two-condition criterion, and default horizons/thresholds.
struct Scenario {
    NormContext ctx;
    Transformation tau;
    std::map<std::string, MeasurableSet> sets;
    std::map<std::string, SimpleFunction> vectors;
    std::optional<SetFamily> family;
    ScenarioDefaults defaults;

    Scenario(NormContext ctx_, Transformation tau_) : ctx(std::move(ctx_)), tau(std::move(tau_)) {}

    const MeasurableSet& set_named(const std::string& name) const;
    const SimpleFunction& vector_named(const std::string& name) const;

    std::vector<MeasurableSet> all_sets() const;
    std::vector<SimpleFunction> all_vectors() const;
};

// Parses and validates the JSON scenario text. Throws schema_error with the
// offending field's path on any violation.
Scenario parse_scenario_text(const std::string& json_text);

// Reads the file and delegates to parse_scenario_text.
Scenario parse_scenario(const std::string& path);

// Canonical serialization of the parsed scenario (deterministic field
// order); feeds the run digest.
std::string scenario_canonical_json(const Scenario& s);

}  // namespace olx
