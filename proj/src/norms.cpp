#include "olx/norms.hpp"

#include <algorithm>
#include <cmath>

#include "olx/errors.hpp"

namespace olx {

double modular(const NormContext& ctx, const SimpleFunction& g) {
    return modular_scaled(ctx, g, 1.0);
}

double modular_scaled(const NormContext& ctx, const SimpleFunction& g, double lambda) {
    if (!(lambda > 0.0)) throw precondition_error("modular scaling requires lambda > 0");
    const RearrangementProfile profile = rearrangement(g);
    double total = 0.0;
    double h_prev = 0.0;
    for (const auto& step : profile.steps) {
        const double phi_v = ctx.phi.eval(step.value / lambda);
        if (std::isinf(phi_v)) return kInf;
        const double h_cur = ctx.weight.cumulative(step.right_endpoint);
        total += phi_v * (h_cur - h_prev);
        h_prev = h_cur;
    }
    return total;
}

LuxemburgResult luxemburg_norm_detail(const NormContext& ctx, const SimpleFunction& g) {
    LuxemburgResult result;
    if (g.is_zero()) return result;

    double hi = sup_norm(g);
    double lo;
    int iters = 0;
    if (modular_scaled(ctx, g, hi) <= 1.0) {
        // shrink until the modular exceeds 1; guaranteed since phi(s) -> inf
        lo = hi / 2;
        while (modular_scaled(ctx, g, lo) <= 1.0) {
            hi = lo;
            lo /= 2;
            if (++iters > 2400 || lo == 0.0)
                throw internal_error("Luxemburg bracket underflow");
        }
    } else {
        // grow until the modular drops to 1 or below
        do {
            hi *= 2;
            if (++iters > 2400 || std::isinf(hi))
                throw internal_error("Luxemburg bracket overflow");
        } while (modular_scaled(ctx, g, hi) > 1.0);
        lo = hi / 2;
    }

    // invariant: modular(g/hi) <= 1 < modular(g/lo)
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        ++result.iterations;
        if (modular_scaled(ctx, g, mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    result.norm = hi;
    result.modular_at_norm = modular_scaled(ctx, g, hi);
    result.bracket_width = hi - lo;
    return result;
}

double luxemburg_norm(const NormContext& ctx, const SimpleFunction& g) {
    return luxemburg_norm_detail(ctx, g).norm;
}

double indicator_norm(const NormContext& ctx, const MeasurableSet& a) {
    const double mu = measure_of(a);
    if (mu == 0.0) return 0.0;
    if (std::isinf(mu)) throw precondition_error("indicator_norm requires mu(A) < inf");
    return 1.0 / ctx.phi.inverse(1.0 / ctx.weight.cumulative(mu));
}

double sup_norm(const SimpleFunction& g) {
    double m = 0.0;
    for (const auto& [i, v] : g.support()) m = std::max(m, std::fabs(v));
    return m;
}

double intersection_norm(const NormContext& ctx, const SimpleFunction& g) {
    if (ctx.weight.kind() != WeightKind::constant)
        throw precondition_error(
            "intersection norm lives on the Orlicz space; the weight must be constant");
    return std::max(luxemburg_norm(ctx, g), sup_norm(g));
}

}  // namespace olx
