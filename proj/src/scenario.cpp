#include "olx/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "olx/errors.hpp"

namespace olx {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw schema_error("scenario field '" + path + "': " + what);
}

const json& require(const json& node, const std::string& path, const char* key) {
    if (!node.is_object()) fail(path, "expected an object");
    auto it = node.find(key);
    if (it == node.end()) fail(path + "." + key, "missing");
    return *it;
}

std::string require_string(const json& node, const std::string& path, const char* key) {
    const json& v = require(node, path, key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

double require_number(const json& node, const std::string& path, const char* key) {
    const json& v = require(node, path, key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

double number_or(const json& node, const char* key, double fallback) {
    if (!node.is_object()) return fallback;
    auto it = node.find(key);
    if (it == node.end()) return fallback;
    if (!it->is_number()) fail(std::string(key), "expected a number");
    return it->get<double>();
}

AtomIndex require_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<AtomIndex>();
}

SpaceWeightSpec parse_space_weights(const json& node, const std::string& path, bool allow_table) {
    SpaceWeightSpec spec;
    const std::string kind = require_string(node, path, "kind");
    if (kind == "explicit") {
        spec.kind = SpaceWeightKind::explicit_list;
        const json& w = require(node, path, "weights");
        if (!w.is_array()) fail(path + ".weights", "expected an array");
        for (const auto& x : w) spec.weights.push_back(x.get<double>());
    } else if (kind == "geometric") {
        spec.kind = SpaceWeightKind::geometric;
        spec.ratio = require_number(node, path, "ratio");
    } else if (kind == "sym_geometric") {
        spec.kind = SpaceWeightKind::sym_geometric;
        spec.ratio = require_number(node, path, "ratio");
    } else if (kind == "constant") {
        spec.kind = SpaceWeightKind::constant;
        spec.value = number_or(node, "value", 1.0);
    } else if (kind == "table") {
        if (!allow_table) fail(path + ".kind", "table weights cannot nest");
        spec.kind = SpaceWeightKind::table;
        spec.tail = std::make_shared<SpaceWeightSpec>(
            parse_space_weights(require(node, path, "tail"), path + ".tail", false));
        const json& overrides = require(node, path, "overrides");
        if (!overrides.is_object()) fail(path + ".overrides", "expected an object");
        for (const auto& [key, value] : overrides.items()) {
            try {
                spec.overrides[std::stoll(key)] = value.get<double>();
            } catch (const std::exception&) {
                fail(path + ".overrides." + key, "keys must be integer atom indices");
            }
        }
    } else {
        fail(path + ".kind", "unknown space weight kind '" + kind + "'");
    }
    return spec;
}

SpacePtr parse_space(const json& node, const std::string& path) {
    const std::string domain = require_string(node, path, "domain");
    IndexDomain d;
    if (domain == "finite")
        d = IndexDomain::finite;
    else if (domain == "naturals")
        d = IndexDomain::naturals;
    else if (domain == "integers")
        d = IndexDomain::integers;
    else
        fail(path + ".domain", "unknown domain '" + domain + "'");
    return AtomicMeasureSpace::make(
        d, parse_space_weights(require(node, path, "weights"), path + ".weights", true));
}

OrliczFunction parse_phi(const json& node, const std::string& path) {
    const std::string kind = require_string(node, path, "kind");
    if (kind == "power") return OrliczFunction::power(require_number(node, path, "p"));
    if (kind == "power_log") return OrliczFunction::power_log();
    if (kind == "exp_minus_one") return OrliczFunction::exp_minus_one();
    if (kind == "neg_log") return OrliczFunction::neg_log();
    if (kind == "flat_start") return OrliczFunction::flat_start(require_number(node, path, "c"));
    fail(path + ".kind", "unknown Orlicz kind '" + kind + "'");
}

WeightFunction parse_weight(const json& node, const std::string& path) {
    const std::string kind = require_string(node, path, "kind");
    if (kind == "constant") return WeightFunction::constant(number_or(node, "c", 1.0));
    if (kind == "power") return WeightFunction::power(require_number(node, path, "alpha"));
    if (kind == "exponential") return WeightFunction::exponential(require_number(node, path, "beta"));
    if (kind == "piecewise_constant") {
        std::vector<double> breaks, values;
        const json& b = require(node, path, "breakpoints");
        const json& v = require(node, path, "values");
        if (!b.is_array() || !v.is_array()) fail(path, "breakpoints/values must be arrays");
        for (const auto& x : b) breaks.push_back(x.get<double>());
        for (const auto& x : v) values.push_back(x.get<double>());
        return WeightFunction::piecewise_constant(std::move(breaks), std::move(values));
    }
    fail(path + ".kind", "unknown weight kind '" + kind + "'");
}

Transformation parse_tau(const json& node, const std::string& path, const SpacePtr& space) {
    const std::string kind = require_string(node, path, "kind");
    if (kind == "shift_z") {
        const json& off = require(node, path, "offset");
        return Transformation::shift_z(space, require_integer(off, path + ".offset"));
    }
    if (kind == "shift_n") return Transformation::shift_n(space);
    if (kind == "identity") return Transformation::identity(space);
    if (kind == "finite_map") {
        const json& table = require(node, path, "table");
        if (!table.is_object()) fail(path + ".table", "expected an object");
        std::map<AtomIndex, AtomIndex> map;
        for (const auto& [key, value] : table.items()) {
            try {
                // atom indices arrive as JSON integers or as strings
                const AtomIndex image = value.is_string()
                                            ? std::stoll(value.get<std::string>())
                                            : require_integer(value, path + ".table." + key);
                map[std::stoll(key)] = image;
            } catch (const schema_error&) {
                throw;
            } catch (const std::exception&) {
                fail(path + ".table." + key, "entries must be integer atom indices");
            }
        }
        return Transformation::finite_map(space, std::move(map));
    }
    fail(path + ".kind", "unknown transformation kind '" + kind + "'");
}

MeasurableSet parse_set(const json& node, const std::string& path, const SpacePtr& space) {
    if (!node.is_array()) fail(path, "expected an array of atom indices");
    std::vector<AtomIndex> atoms;
    for (std::size_t k = 0; k < node.size(); ++k)
        atoms.push_back(require_integer(node[k], path + "[" + std::to_string(k) + "]"));
    return MeasurableSet(space, std::move(atoms));
}

SimpleFunction parse_vector(const json& node, const std::string& path, const SpacePtr& space) {
    const json& peaks = require(node, path, "peaks");
    if (!peaks.is_array()) fail(path + ".peaks", "expected an array");
    std::vector<BlockPeak> parsed;
    for (std::size_t k = 0; k < peaks.size(); ++k) {
        const std::string ppath = path + ".peaks[" + std::to_string(k) + "]";
        const json& p = peaks[k];
        parsed.push_back({require_integer(require(p, ppath, "position"), ppath + ".position"),
                          require_number(p, ppath, "coefficient")});
    }
    return construct_block_vector(space, parsed);
}

SetFamily parse_family(const json& node, const std::string& path, const Scenario& scenario) {
    SetFamily family;
    const json& sets = require(node, path, "sets");
    if (sets.is_array()) {
        for (const auto& name : sets) {
            if (!name.is_string()) fail(path + ".sets", "expected set names");
            family.sets.push_back(scenario.set_named(name.get<std::string>()));
        }
    } else if (sets.is_object()) {
        const std::string kind = require_string(sets, path + ".sets", "kind");
        if (kind != "singletons") fail(path + ".sets.kind", "unknown generator '" + kind + "'");
        const auto from = static_cast<AtomIndex>(require_number(sets, path + ".sets", "from"));
        const auto to = static_cast<AtomIndex>(require_number(sets, path + ".sets", "to"));
        if (to < from) fail(path + ".sets", "'to' must be >= 'from'");
        for (AtomIndex i = from; i <= to; ++i)
            family.sets.emplace_back(scenario.ctx.space, std::vector<AtomIndex>{i});
    } else {
        fail(path + ".sets", "expected an array of names or a generator");
    }

    const json& gamma = require(node, path, "gamma");
    if (gamma.is_array()) {
        for (const auto& g : gamma) family.gamma.push_back(require_integer(g, path + ".gamma"));
    } else if (gamma.is_object()) {
        const std::string kind = require_string(gamma, path + ".gamma", "kind");
        const long first = static_cast<long>(require_number(gamma, path + ".gamma", "first"));
        const long count = static_cast<long>(number_or(gamma, "count", 64));
        if (kind == "arithmetic") {
            const long step = static_cast<long>(require_number(gamma, path + ".gamma", "step"));
            long g = first;
            for (long k = 0; k < count; ++k, g += step) family.gamma.push_back(g);
        } else if (kind == "geometric") {
            const long ratio = static_cast<long>(require_number(gamma, path + ".gamma", "ratio"));
            long g = first;
            for (long k = 0; k < count && g > 0; ++k, g *= ratio) family.gamma.push_back(g);
        } else {
            fail(path + ".gamma.kind", "unknown generator '" + kind + "'");
        }
    } else {
        fail(path + ".gamma", "expected an array or a generator");
    }

    try {
        family.validate();
    } catch (const precondition_error& e) {
        fail(path, e.what());
    }
    return family;
}

}  // namespace

const MeasurableSet& Scenario::set_named(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) throw schema_error("scenario has no set named '" + name + "'");
    return it->second;
}

const SimpleFunction& Scenario::vector_named(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) throw schema_error("scenario has no vector named '" + name + "'");
    return it->second;
}

std::vector<MeasurableSet> Scenario::all_sets() const {
    std::vector<MeasurableSet> out;
    for (const auto& [name, s] : sets) out.push_back(s);
    return out;
}

std::vector<SimpleFunction> Scenario::all_vectors() const {
    std::vector<SimpleFunction> out;
    for (const auto& [name, v] : vectors) out.push_back(v);
    return out;
}

namespace {

Scenario build_scenario(const json& root) {
    const SpacePtr space = parse_space(require(root, "", "space"), "space");
    NormContext ctx{parse_phi(require(root, "", "phi"), "phi"),
                    parse_weight(require(root, "", "weight"), "weight"), space};
    Transformation tau = parse_tau(require(root, "", "tau"), "tau", space);
    Scenario scenario(std::move(ctx), std::move(tau));

    if (auto it = root.find("sets"); it != root.end()) {
        if (!it->is_object()) throw schema_error("scenario field 'sets': expected an object");
        for (const auto& [name, node] : it->items())
            scenario.sets.emplace(name, parse_set(node, "sets." + name, space));
    }
    if (auto it = root.find("vectors"); it != root.end()) {
        if (!it->is_object()) throw schema_error("scenario field 'vectors': expected an object");
        for (const auto& [name, node] : it->items())
            scenario.vectors.emplace(name, parse_vector(node, "vectors." + name, space));
    }
    if (auto it = root.find("family"); it != root.end())
        scenario.family = parse_family(*it, "family", scenario);
    if (auto it = root.find("defaults"); it != root.end()) {
        const json& d = *it;
        scenario.defaults.horizon = static_cast<long>(number_or(d, "horizon", 10000));
        scenario.defaults.threshold = number_or(d, "threshold", 1e6);
        scenario.defaults.eps_low = number_or(d, "eps_low", 1e-6);
        scenario.defaults.delta = number_or(d, "delta", 1e-9);
        if (scenario.defaults.horizon < 0)
            throw schema_error("scenario field 'defaults.horizon': must be >= 0");
        if (!(scenario.defaults.threshold > 0))
            throw schema_error("scenario field 'defaults.threshold': must be > 0");
    }
    return scenario;
}

}  // namespace

Scenario parse_scenario_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw schema_error("scenario root must be an object");

    try {
        return build_scenario(root);
    } catch (const json::exception& e) {
        throw schema_error(std::string("scenario has a mistyped field: ") + e.what());
    }
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str());
}

namespace {

json weights_to_json(const SpaceWeightSpec& spec) {
    json out;
    switch (spec.kind) {
        case SpaceWeightKind::explicit_list:
            out["kind"] = "explicit";
            out["weights"] = spec.weights;
            break;
        case SpaceWeightKind::geometric:
            out["kind"] = "geometric";
            out["ratio"] = spec.ratio;
            break;
        case SpaceWeightKind::sym_geometric:
            out["kind"] = "sym_geometric";
            out["ratio"] = spec.ratio;
            break;
        case SpaceWeightKind::constant:
            out["kind"] = "constant";
            out["value"] = spec.value;
            break;
        case SpaceWeightKind::table: {
            out["kind"] = "table";
            json overrides = json::object();
            for (const auto& [i, w] : spec.overrides) overrides[std::to_string(i)] = w;
            out["overrides"] = overrides;
            out["tail"] = weights_to_json(*spec.tail);
            break;
        }
    }
    return out;
}

}  // namespace

std::string scenario_canonical_json(const Scenario& s) {
    json out;
    out["space"] = {{"domain", domain_name(s.ctx.space->domain())},
                    {"weights", weights_to_json(s.ctx.space->weight_spec())}};
    out["phi"] = s.ctx.phi.describe();
    out["weight"] = s.ctx.weight.describe();
    out["tau"] = s.tau.describe();
    json sets = json::object();
    for (const auto& [name, a] : s.sets) sets[name] = a.atoms();
    out["sets"] = sets;
    json vectors = json::object();
    for (const auto& [name, v] : s.vectors) {
        json peaks = json::array();
        for (const auto& [atom, value] : v.support())
            peaks.push_back({{"position", atom}, {"coefficient", value}});
        vectors[name] = peaks;
    }
    out["vectors"] = vectors;
    out["defaults"] = {{"horizon", s.defaults.horizon},
                       {"threshold", s.defaults.threshold},
                       {"eps_low", s.defaults.eps_low},
                       {"delta", s.defaults.delta}};
    return out.dump();
}

}  // namespace olx
