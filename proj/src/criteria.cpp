#include "olx/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "olx/errors.hpp"

namespace olx {

namespace {

double divergence_term(const NormContext& ctx, double mu) {
    // mu = 0 makes H = 0 and 1/H = +inf; phi^{-1}(+inf) is b_phi or +inf.
    return ctx.phi.inverse(1.0 / ctx.weight.cumulative(mu));
}

struct Scan {
    std::vector<double> terms;        // s_n, n = 0..N
    std::optional<long> first_null;   // first n with mu = 0
    std::optional<long> first_hit;    // first n with mu > 0 and s_n >= T
    double min_term = kInf;           // over positive-measure entries
};

Scan scan_sequence(const NormContext& ctx, const std::vector<double>& measures,
                   double threshold) {
    Scan scan;
    scan.terms.reserve(measures.size());
    for (std::size_t n = 0; n < measures.size(); ++n) {
        const double mu = measures[n];
        const double s = divergence_term(ctx, mu);
        scan.terms.push_back(s);
        if (mu == 0.0) {
            if (!scan.first_null) scan.first_null = static_cast<long>(n);
            continue;
        }
        scan.min_term = std::min(scan.min_term, s);
        if (!scan.first_hit && s >= threshold) scan.first_hit = static_cast<long>(n);
    }
    return scan;
}

CriterionVerdict verdict_from_scan(CriterionId id, const Scan& scan, long horizon,
                                   double threshold) {
    CriterionVerdict v{id, CriterionStatus::BoundedAtHorizon, std::nullopt, horizon, threshold};
    // first event wins: a genuine hit before the first null preimage counts
    if (scan.first_hit && (!scan.first_null || *scan.first_hit < *scan.first_null)) {
        v.status = CriterionStatus::WitnessedDivergence;
        v.witness = CriterionWitness{*scan.first_hit,
                                     scan.terms[static_cast<std::size_t>(*scan.first_hit)]};
    } else if (scan.first_null) {
        v.status = CriterionStatus::DegenerateNullPreimage;
        v.witness = CriterionWitness{*scan.first_null,
                                     scan.terms[static_cast<std::size_t>(*scan.first_null)]};
    }
    return v;
}

void require_finite_positive(const MeasurableSet& a) {
    const double mu = measure_of(a);
    if (!(mu > 0.0) || std::isinf(mu))
        throw precondition_error("criterion requires 0 < mu(A) < inf");
}

}  // namespace

CriterionVerdict thm23_c(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold) {
    require_finite_positive(a);
    const auto seq = measure_sequence(t, a, Direction::preimage, horizon);
    return verdict_from_scan(CriterionId::T23c, scan_sequence(ctx, seq.values, threshold),
                             horizon, threshold);
}

CriterionVerdict thm23_d(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold) {
    require_finite_positive(a);
    const auto seq = measure_sequence(t, a, Direction::forward, horizon);
    auto v = verdict_from_scan(CriterionId::T23d, scan_sequence(ctx, seq.values, threshold),
                               horizon, threshold);
    return v;
}

CriterionVerdict thm23_e(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold) {
    const CriterionVerdict pre = thm23_c(ctx, t, a, horizon, threshold);
    const CriterionVerdict fwd = thm23_d(ctx, t, a, horizon, threshold);
    CriterionVerdict v{CriterionId::T23e, CriterionStatus::BoundedAtHorizon, std::nullopt,
                       horizon, threshold};
    if (pre.status == CriterionStatus::DegenerateNullPreimage ||
        fwd.status == CriterionStatus::DegenerateNullPreimage) {
        const CriterionVerdict& deg =
            pre.status == CriterionStatus::DegenerateNullPreimage ? pre : fwd;
        v.status = CriterionStatus::DegenerateNullPreimage;
        v.witness = deg.witness;
    } else if (pre.status == CriterionStatus::WitnessedDivergence &&
               fwd.status == CriterionStatus::WitnessedDivergence) {
        v.status = CriterionStatus::WitnessedDivergence;
        // both directions have diverged once the later of the two hits
        const bool pre_later = pre.witness->n >= fwd.witness->n;
        v.witness = CriterionWitness{pre_later ? pre.witness->n : fwd.witness->n,
                                     std::min(pre.witness->value, fwd.witness->value)};
    }
    return v;
}

CriterionVerdict thm23_f(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold,
                         double delta) {
    require_finite_positive(a);
    const auto seq = measure_sequence(t, a, Direction::preimage, horizon);
    const Scan scan = scan_sequence(ctx, seq.values, threshold);
    CriterionVerdict v{CriterionId::T23f, CriterionStatus::BoundedAtHorizon, std::nullopt,
                       horizon, threshold};
    if (scan.first_null) {
        v.status = CriterionStatus::DegenerateNullPreimage;
        v.witness = CriterionWitness{*scan.first_null,
                                     scan.terms[static_cast<std::size_t>(*scan.first_null)]};
        return v;
    }
    if (scan.first_hit) {
        v.witness = CriterionWitness{*scan.first_hit,
                                     scan.terms[static_cast<std::size_t>(*scan.first_hit)]};
        v.status = scan.min_term >= delta ? CriterionStatus::PositiveLiminfWitnessed
                                          : CriterionStatus::LiminfNotSeparated;
    }
    return v;
}

void SetFamily::validate() const {
    if (sets.empty()) throw precondition_error("set family must contain at least one set");
    for (const auto& a : sets) require_finite_positive(a);
    if (gamma.empty()) throw precondition_error("subsequence gamma must be non-empty");
    long prev = 0;
    for (long g : gamma) {
        if (g <= prev) throw precondition_error("gamma must be strictly increasing and positive");
        prev = g;
    }
}

Thm21Report thm21_check(const NormContext& ctx, const Transformation& t,
                        const SetFamily& family, long horizon, double threshold) {
    family.validate();
    Thm21Report report;
    report.ratio = CriterionVerdict{CriterionId::T21b, CriterionStatus::BoundedAtHorizon,
                                    std::nullopt, horizon, threshold};

    constexpr long kPairCap = 1'000'000;
    long pairs = 0;
    for (const auto& a : family.sets) {
        const auto seq = measure_sequence(t, a, Direction::preimage, horizon);

        // (a): divergence contract along gamma, witnesses reported as gamma_k
        CriterionVerdict per_set{CriterionId::T21a, CriterionStatus::BoundedAtHorizon,
                                 std::nullopt, horizon, threshold};
        for (long g : family.gamma) {
            if (g > horizon) break;
            const double mu = seq.values[static_cast<std::size_t>(g)];
            const double s = divergence_term(ctx, mu);
            if (mu == 0.0) {
                per_set.status = CriterionStatus::DegenerateNullPreimage;
                per_set.witness = CriterionWitness{g, s};
                break;
            }
            if (s >= threshold) {
                per_set.status = CriterionStatus::WitnessedDivergence;
                per_set.witness = CriterionWitness{g, s};
                break;
            }
        }
        report.per_set.push_back(per_set);

        // (b): ratio scan over all n <= N, early exit on the first witness
        if (report.ratio.status != CriterionStatus::BoundedAtHorizon) continue;
        const double numerator = divergence_term(ctx, seq.values[0]);
        for (std::size_t n = 1; n < seq.values.size(); ++n) {
            if (seq.values[n] == 0.0) continue;
            if (++pairs > kPairCap) break;
            const double ratio = numerator / divergence_term(ctx, seq.values[n]);
            if (ratio >= threshold) {
                report.ratio.status = CriterionStatus::WitnessedDivergence;
                report.ratio.witness = CriterionWitness{static_cast<long>(n), ratio};
                break;
            }
        }
    }
    return report;
}

CriterionVerdict thm22_check(const NormContext& ctx, const Transformation& t,
                             const MeasurableSet& a, long window, double threshold) {
    require_finite_positive(a);
    const auto inj = injectivity_probe(t);
    if (!inj.injective)
        throw precondition_error("T22 ratio scan requires an injective transformation");
    if (window < 0) throw precondition_error("window must be >= 0");

    // u_r = phi^{-1}(1/H(mu(tau^r A))) for r in I cap [-Q, Q]
    std::vector<std::pair<long, double>> u;  // (r, u_r), r ascending
    MeasurableSet current = a;
    std::vector<std::pair<long, double>> backward;
    for (long r = -1; r >= -window; --r) {
        current = preimage_set(t, current, 1);
        const double mu = measure_of(current);
        if (mu > 0.0 && !std::isinf(mu)) backward.emplace_back(r, divergence_term(ctx, mu));
    }
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) u.push_back(*it);
    u.emplace_back(0, divergence_term(ctx, measure_of(a)));
    current = a;
    for (long r = 1; r <= window; ++r) {
        current = forward_image_set(t, current, 1);
        const double mu = measure_of(current);
        if (mu > 0.0 && !std::isinf(mu)) u.emplace_back(r, divergence_term(ctx, mu));
    }

    CriterionVerdict v{CriterionId::T22ii, CriterionStatus::BoundedAtHorizon, std::nullopt,
                       window, threshold};
    constexpr long kPairCap = 1'000'000;
    long pairs = 0;
    for (std::size_t qi = 1; qi < u.size() && !v.witness; ++qi) {
        for (std::size_t pi = 0; pi < qi; ++pi) {
            if (++pairs > kPairCap) return v;
            const double ratio = u[qi].second / u[pi].second;
            if (ratio >= threshold) {
                v.status = CriterionStatus::WitnessedDivergence;
                v.witness = CriterionWitness{u[qi].first, ratio};
                break;
            }
        }
    }
    return v;
}

Lemma1Report lemma1_equivalence_check(const NormContext& ctx, const Transformation& t,
                                      int trials, std::uint64_t seed) {
    if (!ctx.phi.delta2_all_s())
        throw precondition_error("L1 constant transport requires a Delta2 (all s) gauge: " +
                                 ctx.phi.describe());
    if (trials <= 0) throw precondition_error("lemma1_equivalence_check requires trials > 0");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> n_dist(1, 20);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::uniform_int_distribution<AtomIndex> atom_dist(-30, 30);

    Lemma1Report report;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<AtomIndex> atoms;
        const int size = size_dist(rng);
        for (int k = 0; k < size; ++k) {
            AtomIndex i = atom_dist(rng);
            if (!ctx.space->contains(i)) i = std::llabs(i);
            atoms.push_back(i);
        }
        const MeasurableSet a(ctx.space, std::move(atoms));
        const long n = n_dist(rng);
        const MeasurableSet pre = preimage_set(t, a, n);
        const double h_a = ctx.weight.cumulative(measure_of(a));
        const double h_pre = ctx.weight.cumulative(measure_of(pre));
        if (h_pre == 0.0) continue;  // null preimage carries no constant

        Lemma1Entry entry;
        entry.n = n;
        entry.k = h_pre / h_a;
        entry.k_prime = indicator_norm(ctx, pre) / indicator_norm(ctx, a);
        if ((entry.k <= 1.0) != (entry.k_prime <= 1.0 + 1e-12))
            report.directions_consistent = false;
        report.entries.push_back(entry);
    }
    return report;
}

std::vector<MeasurableSet> level_set_family(const SimpleFunction& g, double base) {
    if (!(base > 1.0)) throw precondition_error("level_set_family requires base > 1");
    std::map<long, std::vector<AtomIndex>> levels;
    for (const auto& [atom, value] : g.support()) {
        const double v = std::fabs(value);
        long i = static_cast<long>(std::floor(std::log(v) / std::log(base))) + 1;
        // settle boundary cases exactly: base^(i-1) <= v < base^i
        while (v >= std::pow(base, static_cast<double>(i))) ++i;
        while (v < std::pow(base, static_cast<double>(i - 1))) --i;
        levels[i].push_back(atom);
    }
    std::vector<MeasurableSet> family;
    for (auto& [i, atoms] : levels) family.emplace_back(g.space(), std::move(atoms));
    return family;
}

namespace {

MatrixRow row_from_verdict(const std::string& id, const CriterionVerdict& v) {
    MatrixRow row;
    row.id = id;
    row.status = criterion_status_name(v.status);
    row.witnessed = v.status == CriterionStatus::WitnessedDivergence ||
                    v.status == CriterionStatus::PositiveLiminfWitnessed;
    row.degenerate = v.status == CriterionStatus::DegenerateNullPreimage;
    row.witness = v.witness;
    return row;
}

}  // namespace

ConsistencyMatrix consistency_matrix(const NormContext& ctx, const Transformation& t,
                                     const MeasurableSet& a, long horizon, double threshold,
                                     double delta,
                                     const std::vector<SimpleFunction>& extra_vectors,
                                     const std::vector<MeasurableSet>& extra_sets,
                                     const OrbitThresholds& orbit_thresholds) {
    ConsistencyMatrix matrix;
    matrix.injective = injectivity_probe(t).injective;
    matrix.delta2_all_s = ctx.phi.delta2_all_s();
    matrix.finite_total_measure = !std::isinf(ctx.space->total_measure());

    matrix.rows.push_back(row_from_verdict("T23c", thm23_c(ctx, t, a, horizon, threshold)));
    if (matrix.injective) {
        matrix.rows.push_back(row_from_verdict("T23d", thm23_d(ctx, t, a, horizon, threshold)));
        matrix.rows.push_back(row_from_verdict("T23e", thm23_e(ctx, t, a, horizon, threshold)));
    }
    matrix.rows.push_back(row_from_verdict("T23f", thm23_f(ctx, t, a, horizon, threshold, delta)));

    // B: a semi-irregular vector exists (full candidate search)
    std::vector<MeasurableSet> sets = extra_sets;
    sets.push_back(a);
    const auto full = search_semi_irregular(ctx, t, horizon, extra_vectors, sets,
                                            orbit_thresholds);
    MatrixRow row_b;
    row_b.id = "B";
    row_b.witnessed = full.has_value();
    row_b.status = full ? orbit_class_name(full->report.classification) : "NoWitness";
    matrix.rows.push_back(row_b);

    // G: some characteristic function is a semi-irregular vector
    // (indicator-only candidates: every candidate value equals 1)
    MatrixRow row_g;
    row_g.id = "G";
    row_g.witnessed = false;
    row_g.status = "NoWitness";
    for (const auto& candidate : semi_irregular_candidates(ctx.space, horizon, {}, sets)) {
        bool indicator = true;
        for (const auto& [atom, value] : candidate.support())
            if (value != 1.0) { indicator = false; break; }
        if (!indicator) continue;
        const OrbitReport report = orbit_norms(ctx, t, candidate, horizon, orbit_thresholds);
        if (report.classification != OrbitClass::NoWitness) {
            row_g.witnessed = true;
            row_g.status = orbit_class_name(report.classification);
            break;
        }
    }
    matrix.rows.push_back(row_g);

    bool all_witnessed = true, none_witnessed = true;
    for (const auto& row : matrix.rows) {
        if (row.degenerate) {
            matrix.any_degenerate = true;
            matrix.disagreement_rows.push_back(row.id);
            continue;
        }
        all_witnessed = all_witnessed && row.witnessed;
        none_witnessed = none_witnessed && !row.witnessed;
    }
    const bool split = !(all_witnessed || none_witnessed);
    if (split) {
        // on a split, the rows holding a witness are the ones to inspect
        for (const auto& row : matrix.rows)
            if (!row.degenerate && row.witnessed)
                matrix.disagreement_rows.push_back(row.id);
    }
    matrix.agreement = !matrix.any_degenerate && !split;
    return matrix;
}

std::string criterion_id_name(CriterionId id) {
    switch (id) {
        case CriterionId::L1a: return "L1a";
        case CriterionId::L1b: return "L1b";
        case CriterionId::T21a: return "T21a";
        case CriterionId::T21b: return "T21b";
        case CriterionId::T22i: return "T22i";
        case CriterionId::T22ii: return "T22ii";
        case CriterionId::T23c: return "T23c";
        case CriterionId::T23d: return "T23d";
        case CriterionId::T23e: return "T23e";
        case CriterionId::T23f: return "T23f";
    }
    return "?";
}

std::string criterion_status_name(CriterionStatus s) {
    switch (s) {
        case CriterionStatus::WitnessedDivergence: return "WitnessedDivergence";
        case CriterionStatus::BoundedAtHorizon: return "BoundedAtHorizon";
        case CriterionStatus::DegenerateNullPreimage: return "DegenerateNullPreimage";
        case CriterionStatus::PositiveLiminfWitnessed: return "PositiveLiminfWitnessed";
        case CriterionStatus::LiminfNotSeparated: return "LiminfNotSeparated";
    }
    return "?";
}

}  // namespace olx
