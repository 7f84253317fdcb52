#include "olx/reports.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "olx/errors.hpp"

namespace olx {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json witness_to_json(const std::optional<CriterionWitness>& w) {
    if (!w) return nullptr;
    return json{{"n", w->n}, {"value", w->value}};
}

json verdict_to_json(const CriterionVerdict& v) {
    json out;
    out["criterion"] = criterion_id_name(v.criterion);
    out["status"] = criterion_status_name(v.status);
    out["witness"] = witness_to_json(v.witness);
    out["horizon"] = v.horizon;
    out["threshold"] = v.threshold;
    return out;
}

struct ResolvedParams {
    long horizon;
    double threshold;
    double eps_low;
    double delta;
};

ResolvedParams resolve(const Scenario& scenario, const CommandFlags& flags) {
    ResolvedParams p{};
    p.horizon = flags.horizon.value_or(scenario.defaults.horizon);
    p.threshold = flags.threshold.value_or(scenario.defaults.threshold);
    p.eps_low = flags.eps_low.value_or(scenario.defaults.eps_low);
    p.delta = flags.delta.value_or(scenario.defaults.delta);
    if (p.horizon < 0) throw schema_error("horizon must be >= 0");
    if (!(p.threshold > 0)) throw schema_error("threshold must be > 0");
    return p;
}

SimpleFunction resolve_vector(const Scenario& scenario, const CommandFlags& flags,
                              const char* command) {
    const bool has_set = flags.set_name.has_value();
    const bool has_vec = flags.vector_name.has_value();
    if (has_set == has_vec)
        throw schema_error(std::string(command) + " needs exactly one of --set or --vector");
    if (has_vec) return scenario.vector_named(*flags.vector_name);
    return SimpleFunction::indicator(scenario.set_named(*flags.set_name));
}

OrbitThresholds orbit_thresholds(const ResolvedParams& p) {
    OrbitThresholds t;
    t.eps_low = p.eps_low;
    return t;
}

std::string run_norm(const Scenario& scenario, const CommandFlags& flags, std::string& summary) {
    const SimpleFunction g = resolve_vector(scenario, flags, "norm");
    const LuxemburgResult r = luxemburg_norm_detail(scenario.ctx, g);
    json out;
    out["command"] = "norm";
    out["target"] = flags.vector_name ? *flags.vector_name : *flags.set_name;
    out["norm"] = r.norm;
    out["modular_at_norm"] = r.modular_at_norm;
    out["bracket_width"] = r.bracket_width;
    out["sup_norm"] = sup_norm(g);
    if (scenario.ctx.weight.kind() == WeightKind::constant)
        out["intersection_norm"] = intersection_norm(scenario.ctx, g);
    summary = "norm = " + csv_double(r.norm) +
              " (modular at norm " + csv_double(r.modular_at_norm) +
              ", bracket width " + csv_double(r.bracket_width) + ")";
    return out.dump(2) + "\n";
}

std::string run_orbit(const Scenario& scenario, const CommandFlags& flags,
                      const ResolvedParams& p, ArtifactFormat format, std::string& summary) {
    const SimpleFunction g = resolve_vector(scenario, flags, "orbit");
    const OrbitThresholds thresholds = orbit_thresholds(p);
    const OrbitReport report = orbit_norms(scenario.ctx, scenario.tau, g, p.horizon, thresholds);
    const bool orlicz_case = scenario.ctx.weight.kind() == WeightKind::constant;

    // sup and intersection columns track the same orbit step by step
    std::vector<double> sups;
    sups.reserve(report.norms.size());
    SimpleFunction current = g;
    for (long n = 0; n <= p.horizon; ++n) {
        if (n > 0) current = apply_power(scenario.tau, current, 1);
        sups.push_back(sup_norm(current));
    }

    summary = "orbit classification " + orbit_class_name(report.classification) +
              "; min " + csv_double(report.min_value) + " at n=" + std::to_string(report.min_index) +
              ", max " + csv_double(report.max_value) + " at n=" + std::to_string(report.max_index);

    if (format == ArtifactFormat::csv) {
        std::ostringstream csv;
        csv << "n,norm,sup_norm";
        if (orlicz_case) csv << ",intersection_norm";
        csv << "\n";
        for (std::size_t n = 0; n < report.norms.size(); ++n) {
            csv << n << ',' << csv_double(report.norms[n]) << ',' << csv_double(sups[n]);
            if (orlicz_case) csv << ',' << csv_double(std::max(report.norms[n], sups[n]));
            csv << "\n";
        }
        return csv.str();
    }

    json out;
    out["command"] = "orbit";
    out["norms"] = report.norms;
    out["sup_norms"] = sups;
    if (orlicz_case) {
        std::vector<double> inter;
        inter.reserve(sups.size());
        for (std::size_t n = 0; n < sups.size(); ++n)
            inter.push_back(std::max(report.norms[n], sups[n]));
        out["intersection_norms"] = inter;
    }
    out["classification"] = orbit_class_name(report.classification);
    out["min"] = {{"n", report.min_index}, {"value", report.min_value}};
    out["max"] = {{"n", report.max_index}, {"value", report.max_value}};
    if (report.first_dip_index) {
        out["first_dip_n"] = *report.first_dip_index;
        out["post_dip_max"] = {{"n", report.post_dip_max_index},
                               {"value", report.post_dip_max_value}};
    }
    out["thresholds"] = {{"eps_low", report.eps_low},
                         {"m_high_semi", report.m_high_semi},
                         {"m_high_irr", report.m_high_irr}};
    return out.dump(2) + "\n";
}

const MeasurableSet& primary_set(const Scenario& scenario, const CommandFlags& flags) {
    if (flags.set_name) return scenario.set_named(*flags.set_name);
    if (scenario.sets.empty())
        throw schema_error("scenario defines no sets; pass --set");
    return scenario.sets.begin()->second;
}

std::string run_criteria(const Scenario& scenario, const CommandFlags& flags,
                         const ResolvedParams& p, std::string& summary) {
    const std::string check = flags.check.value_or("all");
    const auto& ctx = scenario.ctx;
    const auto& tau = scenario.tau;

    std::vector<json> verdicts;
    auto append_t23 = [&](char which) {
        const MeasurableSet& a = primary_set(scenario, flags);
        switch (which) {
            case 'c': verdicts.push_back(verdict_to_json(thm23_c(ctx, tau, a, p.horizon, p.threshold))); break;
            case 'd': verdicts.push_back(verdict_to_json(thm23_d(ctx, tau, a, p.horizon, p.threshold))); break;
            case 'e': verdicts.push_back(verdict_to_json(thm23_e(ctx, tau, a, p.horizon, p.threshold))); break;
            case 'f': verdicts.push_back(verdict_to_json(thm23_f(ctx, tau, a, p.horizon, p.threshold, p.delta))); break;
        }
    };
    auto append_t21 = [&] {
        if (!scenario.family)
            throw schema_error("criterion T21 needs a 'family' entry in the scenario");
        const Thm21Report r = thm21_check(ctx, tau, *scenario.family, p.horizon, p.threshold);
        json per_set = json::array();
        for (const auto& v : r.per_set) per_set.push_back(verdict_to_json(v));
        json out;
        out["criterion"] = "T21";
        out["per_set"] = per_set;
        out["ratio"] = verdict_to_json(r.ratio);
        verdicts.push_back(out);
    };
    auto append_t22 = [&] {
        const MeasurableSet& a = primary_set(scenario, flags);
        // (i) is the preimage divergence scan; (ii) the pair-ratio scan
        CriterionVerdict i_verdict = thm23_c(ctx, tau, a, p.horizon, p.threshold);
        i_verdict.criterion = CriterionId::T22i;
        verdicts.push_back(verdict_to_json(i_verdict));
        verdicts.push_back(verdict_to_json(thm22_check(ctx, tau, a, p.horizon, p.threshold)));
    };
    auto append_l1 = [&] {
        const Lemma1Report r = lemma1_equivalence_check(ctx, tau, flags.trials, flags.seed);
        json entries = json::array();
        for (const auto& e : r.entries)
            entries.push_back({{"n", e.n}, {"k", e.k}, {"k_prime", e.k_prime}});
        json out;
        out["criterion"] = "L1";
        out["entries"] = entries;
        out["directions_consistent"] = r.directions_consistent;
        verdicts.push_back(out);
    };

    if (check == "T23c") append_t23('c');
    else if (check == "T23d") append_t23('d');
    else if (check == "T23e") append_t23('e');
    else if (check == "T23f") append_t23('f');
    else if (check == "T21") append_t21();
    else if (check == "T22") append_t22();
    else if (check == "L1") append_l1();
    else if (check == "all") {
        append_t23('c');
        if (injectivity_probe(tau).injective) { append_t23('d'); append_t23('e'); }
        append_t23('f');
        if (scenario.family) append_t21();
        if (injectivity_probe(tau).injective) append_t22();
    } else {
        throw schema_error("unknown criterion '" + check + "'");
    }

    summary = std::to_string(verdicts.size()) + " verdict(s) for check '" + check + "'";
    if (verdicts.size() == 1) return verdicts.front().dump(2) + "\n";
    return json(verdicts).dump(2) + "\n";
}

std::string run_crosscheck(const Scenario& scenario, const CommandFlags& flags,
                           const ResolvedParams& p, std::string& summary) {
    const MeasurableSet& a = primary_set(scenario, flags);
    OrbitThresholds thresholds = orbit_thresholds(p);
    const ConsistencyMatrix m =
        consistency_matrix(scenario.ctx, scenario.tau, a, p.horizon, p.threshold, p.delta,
                           scenario.all_vectors(), scenario.all_sets(), thresholds);
    json rows = json::array();
    for (const auto& row : m.rows) {
        json r;
        r["id"] = row.id;
        r["status"] = row.status;
        r["witnessed"] = row.witnessed;
        r["degenerate"] = row.degenerate;
        r["witness"] = witness_to_json(row.witness);
        rows.push_back(r);
    }
    json out;
    out["command"] = "crosscheck";
    out["rows"] = rows;
    out["flags"] = {{"finite_total_measure", m.finite_total_measure},
                    {"injective", m.injective},
                    {"delta2_all_s", m.delta2_all_s},
                    {"any_degenerate", m.any_degenerate}};
    out["agreement"] = m.agreement;
    out["disagreement_rows"] = m.disagreement_rows;
    out["horizon"] = p.horizon;
    out["threshold"] = p.threshold;
    summary = m.agreement ? "all rows agree" : "disagreement rows flagged";
    return out.dump(2) + "\n";
}

}  // namespace

Command parse_command_name(const std::string& name) {
    if (name == "norm") return Command::norm;
    if (name == "orbit") return Command::orbit;
    if (name == "criteria") return Command::criteria;
    if (name == "crosscheck") return Command::crosscheck;
    throw schema_error("unknown command '" + name + "'");
}

RunReport run_command(Command cmd, const Scenario& scenario, const CommandFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016" PRIx64,
                  fnv1a64(scenario_canonical_json(scenario)));
    report.scenario_digest = digest;

    const ResolvedParams p = resolve(scenario, flags);
    switch (cmd) {
        case Command::norm:
            if (flags.format && *flags.format == ArtifactFormat::csv)
                throw schema_error("norm emits JSON only");
            report.artifact = run_norm(scenario, flags, report.summary);
            report.format = ArtifactFormat::json;
            break;
        case Command::orbit:
            report.format = flags.format.value_or(ArtifactFormat::csv);
            report.artifact = run_orbit(scenario, flags, p, report.format, report.summary);
            break;
        case Command::criteria:
            if (flags.format && *flags.format == ArtifactFormat::csv)
                throw schema_error("criteria emits JSON only");
            report.artifact = run_criteria(scenario, flags, p, report.summary);
            report.format = ArtifactFormat::json;
            break;
        case Command::crosscheck:
            if (flags.format && *flags.format == ArtifactFormat::csv)
                throw schema_error("crosscheck emits JSON only");
            report.artifact = run_crosscheck(scenario, flags, p, report.summary);
            report.format = ArtifactFormat::json;
            break;
    }

    if (flags.out_path) {
        std::ofstream out(*flags.out_path, std::ios::binary);
        if (!out) throw schema_error("cannot open output file '" + *flags.out_path + "'");
        out << report.artifact;
    }

    const auto end = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

}  // namespace olx
