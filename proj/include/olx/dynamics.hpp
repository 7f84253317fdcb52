#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olx/norms.hpp"
#include "olx/transform.hpp"

namespace olx {

enum class OrbitClass { NoWitness, SemiIrregularWitness, IrregularWitness };

struct OrbitThresholds {
    double eps_low = 1e-6;        // finite-horizon stand-in for liminf = 0
    double m_high_semi_factor = 1e-1;  // semi witness needs late max > factor * |g|
    double m_high_irr = 1e6;      // irregular witness needs late max above this
};

// Finite-horizon orbit trace ||C_tau^n g|| for n = 0..N with extrema and a
// witness classification. A witness needs recurrence, not just range: the
// orbit must dip below eps_low and come back above the high threshold at
// some LATER index. An orbit that merely starts high and decays (or dies
// and stays dead) is never a witness.
struct OrbitReport {
    std::vector<double> norms;
    double min_value = 0.0;
    long min_index = 0;
    double max_value = 0.0;
    long max_index = 0;
    std::optional<long> first_dip_index;  // first n with norms[n] < eps_low
    double post_dip_max_value = 0.0;      // max over n > first_dip_index
    long post_dip_max_index = 0;
    OrbitClass classification = OrbitClass::NoWitness;
    double eps_low = 0.0;
    double m_high_semi = 0.0;  // resolved absolute threshold
    double m_high_irr = 0.0;
};

struct LiYorkePairReport {
    double inf_gap = 0.0;
    double sup_gap = 0.0;
    std::optional<long> first_dip_index;
    double post_dip_sup_gap = 0.0;  // drives the verdict
    double eps_low = 0.0;
    double m_pair = 0.0;
    bool verdict = false;
};

// (g o tau^n)(x) = g(tau^n(x)), exact; the support of the result is the
// n-fold preimage of the support of g.
SimpleFunction apply_power(const Transformation& t, const SimpleFunction& g, long n);

// Luxemburg norms along the orbit of g under C_tau, with witness
// classification. Requires g != 0.
OrbitReport orbit_norms(const NormContext& ctx, const Transformation& t,
                        const SimpleFunction& g, long horizon,
                        const OrbitThresholds& thresholds = {});

// Orbit gap ||C_tau^n (g1 - g2)||; verdict true when the gap dips below
// eps_low and later climbs back above m_pair (default 0.1 * ||g1 - g2||).
// Requires g1 != g2.
LiYorkePairReport li_yorke_pair_probe(const NormContext& ctx, const Transformation& t,
                                      const SimpleFunction& g1, const SimpleFunction& g2,
                                      long horizon,
                                      const OrbitThresholds& thresholds = {});

struct BlockPeak {
    AtomIndex position;
    double coefficient;
};

// sum_j c_j * chi_{{k_j}}. Positions must be distinct atoms of the space.
SimpleFunction construct_block_vector(const SpacePtr& space, const std::vector<BlockPeak>& peaks);

struct SemiIrregularWitness {
    SimpleFunction vector;
    OrbitReport report;
};

// Greedy search for a semi-irregular witness at the given horizon: block
// vectors with geometrically spaced peaks (positions 4^j, coefficients 1 and
// 2^j), any extra candidate vectors, then indicators of the candidate sets.
// Returns the first vector whose orbit is classified as a witness.
std::optional<SemiIrregularWitness> search_semi_irregular(
    const NormContext& ctx, const Transformation& t, long horizon,
    const std::vector<SimpleFunction>& extra_vectors = {},
    const std::vector<MeasurableSet>& extra_sets = {},
    const OrbitThresholds& thresholds = {});

// The deterministic candidate list the search walks, exposed so callers can
// re-examine every candidate (indicator-only candidates first carry
// coefficient 1).
std::vector<SimpleFunction> semi_irregular_candidates(
    const SpacePtr& space, long horizon,
    const std::vector<SimpleFunction>& extra_vectors = {},
    const std::vector<MeasurableSet>& extra_sets = {});

// Orbit trace in the max(Orlicz, sup) norm of the constant-weight space;
// classification as in orbit_norms. Requires a constant weight and g != 0.
OrbitReport intersection_orbit_probe(const NormContext& ctx, const Transformation& t,
                                     const SimpleFunction& g, long horizon,
                                     const OrbitThresholds& thresholds = {});

std::string orbit_class_name(OrbitClass c);

}  // namespace olx
