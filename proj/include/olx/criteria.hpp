#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olx/dynamics.hpp"
#include "olx/norms.hpp"
#include "olx/transform.hpp"

namespace olx {

enum class CriterionId { L1a, L1b, T21a, T21b, T22i, T22ii, T23c, T23d, T23e, T23f };

enum class CriterionStatus {
    WitnessedDivergence,      // some s_n >= T with positive finite measure
    BoundedAtHorizon,         // the scan stayed below T
    DegenerateNullPreimage,   // divergence only through mu = 0
    PositiveLiminfWitnessed,  // (f): divergence witnessed AND min s_n >= delta
    LiminfNotSeparated,       // (f): divergence witnessed but min s_n < delta
};

struct CriterionWitness {
    long n = 0;
    double value = 0.0;
};

struct CriterionVerdict {
    CriterionId criterion;
    CriterionStatus status;
    std::optional<CriterionWitness> witness;
    long horizon = 0;
    double threshold = 0.0;
};

// A truncated countable family of finite-positive-measure sets together with
// the strictly increasing subsequence gamma the per-set scans follow.
struct SetFamily {
    std::vector<MeasurableSet> sets;
    std::vector<long> gamma;

    void validate() const;  // throws on empty family/gamma or bad gamma
};

// All checkers share one divergence contract: s_n = phi^{-1}(1/H(mu(...)))
// is scanned for n <= N; the first n with mu = 0 yields
// DegenerateNullPreimage, the first s_n >= T with mu > 0 yields
// WitnessedDivergence, otherwise BoundedAtHorizon.

// limsup phi^{-1}(1/H(mu(tau^{-n} A))) = inf, scanned on the preimage
// measures. Requires 0 < mu(A) < inf.
CriterionVerdict thm23_c(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold);

// Forward-image variant; requires an injective transformation.
CriterionVerdict thm23_d(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold);

// Both directions must witness; a degenerate scan dominates.
CriterionVerdict thm23_e(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold);

// Preimage scan with the extra liminf separation min s_n >= delta.
CriterionVerdict thm23_f(const NormContext& ctx, const Transformation& t,
                         const MeasurableSet& a, long horizon, double threshold,
                         double delta = 1e-9);

struct Thm21Report {
    std::vector<CriterionVerdict> per_set;  // T21a along gamma, one per family set
    CriterionVerdict ratio;                 // T21b
};

// (a) divergence contract along gamma_k for each family set; (b) scan of
// phi^{-1}(1/H(mu(A_i))) / phi^{-1}(1/H(mu(tau^{-n} A_i))) over i and
// n <= N against the threshold.
Thm21Report thm21_check(const NormContext& ctx, const Transformation& t,
                        const SetFamily& family, long horizon, double threshold);

// Ratio scan of u_q / u_p over pairs p < q in I cap [-Q, Q], where
// u_r = phi^{-1}(1/H(mu(tau^r A))) and I = {r : 0 < mu(tau^r A) < inf}.
// The reported witness index is q. Requires an injective transformation.
CriterionVerdict thm22_check(const NormContext& ctx, const Transformation& t,
                             const MeasurableSet& a, long window, double threshold);

struct Lemma1Entry {
    long n = 0;
    double k = 0.0;        // H(mu(tau^{-n} A)) / H(mu(A)), minimal constant in (b)
    double k_prime = 0.0;  // indicator-norm ratio, minimal constant in (a)
};

struct Lemma1Report {
    std::vector<Lemma1Entry> entries;
    bool directions_consistent = true;  // k <= 1 iff k' <= 1 across all trials
};

// Empirical transport of the modular-side constant k into the norm-side
// constant k'. Rejects gauges without the analytic all-s Delta2 flag.
Lemma1Report lemma1_equivalence_check(const NormContext& ctx, const Transformation& t,
                                      int trials, std::uint64_t seed = 0);

// Level sets A_i = {x : base^{i-1} <= |g(x)| < base^i} over the support of a
// candidate vector, indexed by the exponents that are non-empty.
std::vector<MeasurableSet> level_set_family(const SimpleFunction& g, double base = 3.0);

struct MatrixRow {
    std::string id;
    std::string status;
    bool witnessed = false;           // genuine witness (never via mu = 0)
    bool degenerate = false;          // divergence reached only through mu = 0
    std::optional<CriterionWitness> witness;
};

struct ConsistencyMatrix {
    std::vector<MatrixRow> rows;
    bool finite_total_measure = false;
    bool injective = false;
    bool delta2_all_s = false;
    bool any_degenerate = false;
    bool agreement = false;                  // all rows share one witnessed verdict
    std::vector<std::string> disagreement_rows;  // degenerate or out-of-step rows
};

// Cross-validates the formula criteria (T23c..T23f) against orbit dynamics:
// row B runs the full semi-irregular search, row G the indicator-only search.
ConsistencyMatrix consistency_matrix(const NormContext& ctx, const Transformation& t,
                                     const MeasurableSet& a, long horizon, double threshold,
                                     double delta = 1e-9,
                                     const std::vector<SimpleFunction>& extra_vectors = {},
                                     const std::vector<MeasurableSet>& extra_sets = {},
                                     const OrbitThresholds& orbit_thresholds = {});

std::string criterion_id_name(CriterionId id);
std::string criterion_status_name(CriterionStatus s);

}  // namespace olx
