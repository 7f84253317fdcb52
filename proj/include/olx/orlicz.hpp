#pragma once

#include <limits>
#include <string>
#include <vector>

namespace olx {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact integer power by binary exponentiation. For dyadic bases every
// intermediate product is exact, which the dyadic-weight spaces rely on.
double pow_int(double base, unsigned long exp);

// ---------------------------------------------------------------------------
// Orlicz functions
// ---------------------------------------------------------------------------

enum class PhiKind {
    power,          // phi(s) = s^p, p >= 1
    power_log,      // phi(s) = s * ln(1+s)
    exp_minus_one,  // phi(s) = e^s - 1
    neg_log,        // phi(s) = -ln(1-s) for s < 1, +inf for s >= 1
    flat_start,     // phi(s) = max(0, s-c)^2, c > 0
};

struct Delta2Report {
    bool satisfies_all_s = false;  // analytic flag from the catalog
    double numeric_sup_ratio = 0;  // max of phi(2s)/phi(s) over the probe grid
    double grid_max = 0;
};

// A convex gauge from a fixed catalog. phi(0) = 0, phi non-decreasing,
// phi(s) -> inf. Immutable; all operations are pure.
class OrliczFunction {
public:
    static OrliczFunction power(double p);
    static OrliczFunction power_log();
    static OrliczFunction exp_minus_one();
    static OrliczFunction neg_log();
    static OrliczFunction flat_start(double c);

    PhiKind kind() const { return kind_; }
    double param() const { return param_; }

    // phi(s). +inf exactly when s >= b_phi and b_phi is finite.
    // Throws std::domain_error for s < 0.
    double eval(double s) const;

    // Generalized inverse inf{s >= 0 : phi(s) >= y}. At y = 0 returns a_phi.
    // At y = +inf returns b_phi (finite) or +inf. Closed form where the kind
    // admits one, otherwise bisection to relative tolerance 1e-12.
    double inverse(double y) const;

    // (a_phi, b_phi): the largest zero of phi and its finiteness threshold.
    double a_phi() const;
    double b_phi() const;

    // Grid estimate of sup phi(2s)/phi(s) over a logarithmic grid in
    // (0, grid_max], plus the catalog's analytic all-s flag. Grid points
    // with phi(s) = 0 or phi(s) = +inf are skipped; phi(2s) = +inf with
    // phi(s) finite contributes an infinite ratio.
    Delta2Report delta2_report(double grid_max) const;

    bool delta2_all_s() const;

    std::string describe() const;

    bool operator==(const OrliczFunction&) const = default;

private:
    OrliczFunction(PhiKind kind, double param) : kind_(kind), param_(param) {}
    PhiKind kind_;
    double param_;  // p for power, c for flat_start, unused otherwise
};

// ---------------------------------------------------------------------------
// Weight functions
// ---------------------------------------------------------------------------

enum class WeightKind {
    constant,            // h(t) = c
    power,               // h(t) = t^alpha, -1 < alpha <= 0
    exponential,         // h(t) = e^(-beta t)
    piecewise_constant,  // non-increasing step function
};

// Non-increasing, strictly positive weight with an exact cumulative
// integral H(u) = int_0^u h. Immutable.
class WeightFunction {
public:
    static WeightFunction constant(double c);
    static WeightFunction power(double alpha);
    static WeightFunction exponential(double beta);
    // values[j] holds on [breakpoints[j-1], breakpoints[j]) with an implicit
    // leading 0 breakpoint; the last value extends to +inf, so
    // values.size() == breakpoints.size() + 1. Values must be strictly
    // positive and non-increasing, breakpoints strictly increasing positive.
    static WeightFunction piecewise_constant(std::vector<double> breakpoints,
                                             std::vector<double> values);

    WeightKind kind() const { return kind_; }
    double param() const { return param_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

    // h(t), t >= 0. (For the power kind h(0) = +inf when alpha < 0.)
    double eval(double t) const;

    // H(u) = int_0^u h(t) dt in closed form; H(0) = 0, H strictly increasing.
    double cumulative(double u) const;

    std::string describe() const;

    bool operator==(const WeightFunction&) const = default;

private:
    WeightFunction(WeightKind kind, double param) : kind_(kind), param_(param) {}
    WeightKind kind_;
    double param_ = 0;  // c, alpha, or beta
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

}  // namespace olx
