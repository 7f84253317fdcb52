#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "olx/measure.hpp"
#include "olx/norms.hpp"

namespace testutil {

// One RNG per binary, seeded from OLX_SEED when set so failures replay.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine = [] {
        std::uint64_t seed = 0x01e5'11ce'5eedULL;
        if (const char* env = std::getenv("OLX_SEED")) seed = std::strtoull(env, nullptr, 10);
        return std::mt19937_64(seed);
    }();
    return engine;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline long uniform_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// Adaptive Simpson quadrature; the independent integration oracle.
inline double quad(const std::function<double(double)>& f, double a, double b,
                   double tol = 1e-12, int depth = 40) {
    const double m = (a + b) / 2;
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double x0, double x1, double f0, double f1, double fmid, double approx,
            double eps, int d) -> double {
        const double mid = (x0 + x1) / 2;
        const double lm = (x0 + mid) / 2, rm = (mid + x1) / 2;
        const double flm = f(lm), frm = f(rm);
        const double left = (mid - x0) / 6 * (f0 + 4 * flm + fmid);
        const double right = (x1 - mid) / 6 * (fmid + 4 * frm + f1);
        const double err = left + right - approx;
        if (d <= 0 || std::fabs(err) <= 15 * eps) return left + right + err / 15;
        return rec(x0, mid, f0, fmid, flm, left, eps / 2, d - 1) +
               rec(mid, x1, fmid, f1, frm, right, eps / 2, d - 1);
    };
    return rec(a, b, fa, fb, fm, whole, tol, depth);
}

// Pointwise rearrangement oracle: g*(t) = inf{lam > 0 : mu_g(lam) <= t},
// evaluated by scanning the candidate levels (0 and the distinct |values|).
inline double g_star_brute(const olx::SimpleFunction& g, double t) {
    std::vector<double> levels{0.0};
    for (const auto& [i, v] : g.support()) levels.push_back(std::fabs(v));
    std::sort(levels.begin(), levels.end());
    for (double lam : levels)
        if (olx::distribution_function(g, lam) <= t) return lam;
    return levels.back();
}

// Closed-form weighted p-norm, the L^p coincidence oracle.
inline double weighted_p_norm(const olx::SimpleFunction& g, double p) {
    double sum = 0.0;
    for (const auto& [i, v] : g.support())
        sum += std::pow(std::fabs(v), p) * g.space()->weight(i);
    return std::pow(sum, 1.0 / p);
}

// Direct atomwise modular, valid for h == 1.
inline double atomwise_modular(const olx::NormContext& ctx, const olx::SimpleFunction& g) {
    double sum = 0.0;
    for (const auto& [i, v] : g.support())
        sum += ctx.phi.eval(std::fabs(v)) * g.space()->weight(i);
    return sum;
}

inline olx::SimpleFunction random_function(const olx::SpacePtr& space, int max_atoms,
                                           long lo_atom, long hi_atom,
                                           double lo_val = -8.0, double hi_val = 8.0) {
    std::map<olx::AtomIndex, double> values;
    const int atoms = static_cast<int>(uniform_int(1, max_atoms));
    for (int k = 0; k < atoms; ++k) {
        double v = uniform(lo_val, hi_val);
        if (std::fabs(v) < 1e-3) v = 1e-3;  // keep support honest
        values[uniform_int(lo_atom, hi_atom)] = v;
    }
    return olx::SimpleFunction(space, std::move(values));
}

inline std::vector<olx::OrliczFunction> phi_catalog() {
    return {olx::OrliczFunction::power(1.0), olx::OrliczFunction::power(1.5),
            olx::OrliczFunction::power(2.0), olx::OrliczFunction::power(3.0),
            olx::OrliczFunction::power_log(), olx::OrliczFunction::exp_minus_one(),
            olx::OrliczFunction::neg_log(), olx::OrliczFunction::flat_start(0.5),
            olx::OrliczFunction::flat_start(1.0)};
}

inline std::vector<olx::WeightFunction> weight_catalog() {
    return {olx::WeightFunction::constant(1.0), olx::WeightFunction::constant(2.5),
            olx::WeightFunction::power(-0.5), olx::WeightFunction::power(0.0),
            olx::WeightFunction::exponential(1.0), olx::WeightFunction::exponential(0.25),
            olx::WeightFunction::piecewise_constant({1.0, 3.0}, {2.0, 1.0, 0.5})};
}

}  // namespace testutil
