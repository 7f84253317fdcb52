#pragma once

#include "olx/measure.hpp"
#include "olx/orlicz.hpp"

namespace olx {

// Everything needed to evaluate the Orlicz-Lorentz functional: the gauge phi,
// the weight h, and the underlying atomic space.
struct NormContext {
    OrliczFunction phi;
    WeightFunction weight;
    SpacePtr space;
};

// I(g) = sum_j phi(value_j) * (H(M_j) - H(M_{j-1})) over the rearrangement
// profile; +inf as soon as some value reaches b_phi with phi infinite there.
double modular(const NormContext& ctx, const SimpleFunction& g);

// Convenience: modular of g scaled by 1/lambda.
double modular_scaled(const NormContext& ctx, const SimpleFunction& g, double lambda);

struct LuxemburgResult {
    double norm = 0.0;             // outer bracket endpoint, modular(g/norm) <= 1
    double modular_at_norm = 0.0;
    double bracket_width = 0.0;    // hi - lo at termination
    int iterations = 0;
};

// inf{lambda > 0 : modular(g/lambda) <= 1}, computed by bisection on the
// monotone map lambda -> modular(g/lambda). The bracket grows/shrinks
// geometrically from max|g| until the modular straddles 1, then collapses
// until the midpoint degenerates, so dyadic norms come out bit-exact.
// Returns 0 for the zero function.
double luxemburg_norm(const NormContext& ctx, const SimpleFunction& g);
LuxemburgResult luxemburg_norm_detail(const NormContext& ctx, const SimpleFunction& g);

// Closed form 1 / phi^{-1}(1 / H(mu(A))). The reciprocal sits inside the
// inverse; dropping it flips the norm's monotonicity in mu(A). Returns 0
// when mu(A) = 0 by convention.
double indicator_norm(const NormContext& ctx, const MeasurableSet& a);

// max |value| over the support; 0 for the zero function.
double sup_norm(const SimpleFunction& g);

// max(luxemburg_norm, sup_norm) on the Orlicz (constant-weight) space.
// Rejects contexts with a non-constant weight.
double intersection_norm(const NormContext& ctx, const SimpleFunction& g);

}  // namespace olx
