#include "olx/dynamics.hpp"

#include "olx/errors.hpp"

namespace olx {

SimpleFunction apply_power(const Transformation& t, const SimpleFunction& g, long n) {
    if (n < 0) throw precondition_error("apply_power requires n >= 0");
    if (n == 0 || g.is_zero()) return g;
    std::map<AtomIndex, double> out;
    for (const auto& [atom, value] : g.support()) {
        const MeasurableSet pre = preimage_set(t, MeasurableSet(g.space(), {atom}), n);
        for (AtomIndex i : pre.atoms()) out.emplace(i, value);
    }
    return SimpleFunction(g.space(), std::move(out));
}

namespace {

template <typename NormFn>
OrbitReport trace_orbit(const Transformation& t, const SimpleFunction& g, long horizon,
                        const OrbitThresholds& thresholds, NormFn&& norm_of) {
    if (g.is_zero()) throw precondition_error("orbit probes require a nonzero vector");
    if (horizon < 0) throw precondition_error("orbit horizon must be >= 0");

    OrbitReport report;
    report.norms.reserve(static_cast<std::size_t>(horizon) + 1);
    SimpleFunction current = g;
    for (long n = 0; n <= horizon; ++n) {
        if (n > 0) current = apply_power(t, current, 1);
        report.norms.push_back(norm_of(current));
    }

    report.eps_low = thresholds.eps_low;
    report.m_high_semi = thresholds.m_high_semi_factor * report.norms[0];
    report.m_high_irr = thresholds.m_high_irr;

    report.min_value = report.norms[0];
    report.max_value = report.norms[0];
    for (long n = 0; n <= horizon; ++n) {
        const double v = report.norms[static_cast<std::size_t>(n)];
        if (v < report.min_value) { report.min_value = v; report.min_index = n; }
        if (v > report.max_value) { report.max_value = v; report.max_index = n; }
        if (!report.first_dip_index && v < report.eps_low) report.first_dip_index = n;
    }

    if (report.first_dip_index) {
        report.post_dip_max_index = *report.first_dip_index;
        for (long n = *report.first_dip_index + 1; n <= horizon; ++n) {
            const double v = report.norms[static_cast<std::size_t>(n)];
            if (v > report.post_dip_max_value) {
                report.post_dip_max_value = v;
                report.post_dip_max_index = n;
            }
        }
        if (report.post_dip_max_value > report.m_high_irr)
            report.classification = OrbitClass::IrregularWitness;
        else if (report.post_dip_max_value > report.m_high_semi)
            report.classification = OrbitClass::SemiIrregularWitness;
    }
    return report;
}

}  // namespace

OrbitReport orbit_norms(const NormContext& ctx, const Transformation& t,
                        const SimpleFunction& g, long horizon,
                        const OrbitThresholds& thresholds) {
    return trace_orbit(t, g, horizon, thresholds,
                       [&](const SimpleFunction& f) { return luxemburg_norm(ctx, f); });
}

OrbitReport intersection_orbit_probe(const NormContext& ctx, const Transformation& t,
                                     const SimpleFunction& g, long horizon,
                                     const OrbitThresholds& thresholds) {
    if (ctx.weight.kind() != WeightKind::constant)
        throw precondition_error(
            "intersection orbit probe requires the constant-weight (Orlicz) case");
    return trace_orbit(t, g, horizon, thresholds,
                       [&](const SimpleFunction& f) { return intersection_norm(ctx, f); });
}

LiYorkePairReport li_yorke_pair_probe(const NormContext& ctx, const Transformation& t,
                                      const SimpleFunction& g1, const SimpleFunction& g2,
                                      long horizon, const OrbitThresholds& thresholds) {
    const SimpleFunction diff = g1.minus(g2);
    if (diff.is_zero()) throw precondition_error("Li-Yorke pair probe requires g1 != g2");
    const OrbitReport orbit = orbit_norms(ctx, t, diff, horizon, thresholds);
    LiYorkePairReport report;
    report.inf_gap = orbit.min_value;
    report.sup_gap = orbit.max_value;
    report.first_dip_index = orbit.first_dip_index;
    report.post_dip_sup_gap = orbit.post_dip_max_value;
    report.eps_low = thresholds.eps_low;
    report.m_pair = thresholds.m_high_semi_factor * orbit.norms[0];
    report.verdict = report.first_dip_index.has_value() &&
                     report.post_dip_sup_gap > report.m_pair;
    return report;
}

SimpleFunction construct_block_vector(const SpacePtr& space, const std::vector<BlockPeak>& peaks) {
    std::map<AtomIndex, double> values;
    for (const auto& peak : peaks) {
        if (!space->contains(peak.position))
            throw schema_error("block position " + std::to_string(peak.position) +
                               " outside the space domain");
        auto [it, inserted] = values.emplace(peak.position, peak.coefficient);
        if (!inserted) throw precondition_error("duplicate block position " +
                                                std::to_string(peak.position));
    }
    return SimpleFunction(space, std::move(values));
}

std::vector<SimpleFunction> semi_irregular_candidates(
    const SpacePtr& space, long horizon,
    const std::vector<SimpleFunction>& extra_vectors,
    const std::vector<MeasurableSet>& extra_sets) {
    std::vector<SimpleFunction> candidates;

    // geometrically spaced peaks at 4^j that fit the horizon and the domain
    std::vector<AtomIndex> positions;
    for (AtomIndex p = 4; p <= horizon && space->contains(p); p *= 4) positions.push_back(p);
    if (!positions.empty()) {
        std::vector<BlockPeak> flat, scaled;
        double coeff = 2.0;
        for (AtomIndex p : positions) {
            flat.push_back({p, 1.0});
            scaled.push_back({p, coeff});
            coeff *= 2.0;
        }
        candidates.push_back(construct_block_vector(space, flat));
        candidates.push_back(construct_block_vector(space, scaled));
    }

    for (const auto& v : extra_vectors)
        if (!v.is_zero()) candidates.push_back(v);
    for (const auto& s : extra_sets)
        if (!s.empty()) candidates.push_back(SimpleFunction::indicator(s));
    return candidates;
}

std::optional<SemiIrregularWitness> search_semi_irregular(
    const NormContext& ctx, const Transformation& t, long horizon,
    const std::vector<SimpleFunction>& extra_vectors,
    const std::vector<MeasurableSet>& extra_sets,
    const OrbitThresholds& thresholds) {
    for (const auto& candidate :
         semi_irregular_candidates(ctx.space, horizon, extra_vectors, extra_sets)) {
        OrbitReport report = orbit_norms(ctx, t, candidate, horizon, thresholds);
        if (report.classification != OrbitClass::NoWitness)
            return SemiIrregularWitness{candidate, std::move(report)};
    }
    return std::nullopt;
}

std::string orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::NoWitness: return "NoWitness";
        case OrbitClass::SemiIrregularWitness: return "SemiIrregularWitness";
        case OrbitClass::IrregularWitness: return "IrregularWitness";
    }
    return "?";
}

}  // namespace olx
