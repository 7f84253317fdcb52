#include "olx/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "olx/errors.hpp"

namespace olx {

double pow_int(double base, unsigned long exp) {
    double result = 1.0;
    double p = base;
    while (exp) {
        if (exp & 1UL) result *= p;
        p *= p;
        exp >>= 1UL;
    }
    return result;
}

// ---------------------------------------------------------------------------
// OrliczFunction
// ---------------------------------------------------------------------------

OrliczFunction OrliczFunction::power(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw schema_error("power Orlicz function requires p >= 1");
    return OrliczFunction(PhiKind::power, p);
}

OrliczFunction OrliczFunction::power_log() {
    return OrliczFunction(PhiKind::power_log, 0.0);
}

OrliczFunction OrliczFunction::exp_minus_one() {
    return OrliczFunction(PhiKind::exp_minus_one, 0.0);
}

OrliczFunction OrliczFunction::neg_log() {
    return OrliczFunction(PhiKind::neg_log, 0.0);
}

OrliczFunction OrliczFunction::flat_start(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw schema_error("flat_start Orlicz function requires c > 0");
    return OrliczFunction(PhiKind::flat_start, c);
}

double OrliczFunction::eval(double s) const {
    if (s < 0.0 || std::isnan(s))
        throw std::domain_error("Orlicz function argument must be >= 0");
    switch (kind_) {
        case PhiKind::power:
            if (param_ == 1.0) return s;
            if (param_ == 2.0) return s * s;
            return std::pow(s, param_);
        case PhiKind::power_log:
            return s * std::log1p(s);
        case PhiKind::exp_minus_one:
            return std::expm1(s);
        case PhiKind::neg_log:
            return s < 1.0 ? -std::log1p(-s) : kInf;
        case PhiKind::flat_start: {
            const double d = s - param_;
            return d > 0.0 ? d * d : 0.0;
        }
    }
    throw internal_error("unreachable Orlicz kind");
}

double OrliczFunction::a_phi() const {
    return kind_ == PhiKind::flat_start ? param_ : 0.0;
}

double OrliczFunction::b_phi() const {
    return kind_ == PhiKind::neg_log ? 1.0 : kInf;
}

namespace {

// inf{s >= 0 : f(s) >= y} for non-decreasing f, given a bracket with
// f(lo) < y <= f(hi). Converges the bracket to relative width 1e-12.
double bisect_inverse(const OrliczFunction& f, double y, double lo, double hi) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        if (f.eval(mid) >= y)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-12 * hi) break;
    }
    return hi;
}

}  // namespace

double OrliczFunction::inverse(double y) const {
    if (y < 0.0 || std::isnan(y))
        throw std::domain_error("Orlicz inverse argument must be >= 0");
    if (y == 0.0) return a_phi();
    if (std::isinf(y)) return b_phi();
    switch (kind_) {
        case PhiKind::power:
            if (param_ == 1.0) return y;
            if (param_ == 2.0) return std::sqrt(y);
            return std::pow(y, 1.0 / param_);
        case PhiKind::power_log: {
            double hi = 1.0;
            while (eval(hi) < y) hi *= 2.0;
            return bisect_inverse(*this, y, 0.0, hi);
        }
        case PhiKind::exp_minus_one:
            return std::log1p(y);
        case PhiKind::neg_log:
            return -std::expm1(-y);
        case PhiKind::flat_start:
            return param_ + std::sqrt(y);
    }
    throw internal_error("unreachable Orlicz kind");
}

bool OrliczFunction::delta2_all_s() const {
    switch (kind_) {
        case PhiKind::power:      // phi(2s)/phi(s) = 2^p
        case PhiKind::power_log:  // ln(1+2s) <= 2 ln(1+s), ratio <= 4
            return true;
        case PhiKind::exp_minus_one:  // ratio ~ e^s
        case PhiKind::neg_log:        // b_phi finite
        case PhiKind::flat_start:     // ratio unbounded as s -> c+
            return false;
    }
    return false;
}

Delta2Report OrliczFunction::delta2_report(double grid_max) const {
    if (!(grid_max > 0.0))
        throw std::domain_error("delta2_report requires grid_max > 0");
    Delta2Report report;
    report.satisfies_all_s = delta2_all_s();
    report.grid_max = grid_max;
    constexpr int kPoints = 600;
    const double span = 1e-6;  // grid covers (grid_max * span, grid_max]
    double sup = 0.0;
    for (int k = 0; k < kPoints; ++k) {
        const double s = grid_max * std::pow(span, double(k) / (kPoints - 1));
        const double lo = eval(s);
        if (lo == 0.0 || std::isinf(lo)) continue;
        const double hi = eval(2.0 * s);
        sup = std::max(sup, hi / lo);
    }
    report.numeric_sup_ratio = sup;
    return report;
}

std::string OrliczFunction::describe() const {
    switch (kind_) {
        case PhiKind::power: return "power(p=" + std::to_string(param_) + ")";
        case PhiKind::power_log: return "power_log";
        case PhiKind::exp_minus_one: return "exp_minus_one";
        case PhiKind::neg_log: return "neg_log";
        case PhiKind::flat_start: return "flat_start(c=" + std::to_string(param_) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// WeightFunction
// ---------------------------------------------------------------------------

WeightFunction WeightFunction::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw schema_error("constant weight requires c > 0");
    return WeightFunction(WeightKind::constant, c);
}

WeightFunction WeightFunction::power(double alpha) {
    if (!(alpha > -1.0 && alpha <= 0.0))
        throw schema_error("power weight requires -1 < alpha <= 0");
    return WeightFunction(WeightKind::power, alpha);
}

WeightFunction WeightFunction::exponential(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw schema_error("exponential weight requires beta > 0");
    return WeightFunction(WeightKind::exponential, beta);
}

WeightFunction WeightFunction::piecewise_constant(std::vector<double> breakpoints,
                                                  std::vector<double> values) {
    if (values.size() != breakpoints.size() + 1)
        throw schema_error("piecewise weight requires one more value than breakpoints");
    double prev_b = 0.0;
    for (double b : breakpoints) {
        if (!(b > prev_b) || !std::isfinite(b))
            throw schema_error("piecewise weight breakpoints must be strictly increasing and positive");
        prev_b = b;
    }
    double prev_v = kInf;
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw schema_error("piecewise weight values must be strictly positive");
        if (v > prev_v)
            throw schema_error("piecewise weight values must be non-increasing");
        prev_v = v;
    }
    WeightFunction w(WeightKind::piecewise_constant, 0.0);
    w.breakpoints_ = std::move(breakpoints);
    w.values_ = std::move(values);
    return w;
}

double WeightFunction::eval(double t) const {
    if (t < 0.0 || std::isnan(t))
        throw std::domain_error("weight argument must be >= 0");
    switch (kind_) {
        case WeightKind::constant:
            return param_;
        case WeightKind::power:
            return param_ == 0.0 ? 1.0 : std::pow(t, param_);
        case WeightKind::exponential:
            return std::exp(-param_ * t);
        case WeightKind::piecewise_constant: {
            std::size_t j = 0;
            while (j < breakpoints_.size() && t >= breakpoints_[j]) ++j;
            return values_[j];
        }
    }
    throw internal_error("unreachable weight kind");
}

double WeightFunction::cumulative(double u) const {
    if (u < 0.0 || std::isnan(u))
        throw std::domain_error("cumulative weight argument must be >= 0");
    switch (kind_) {
        case WeightKind::constant:
            return param_ * u;
        case WeightKind::power:
            return param_ == 0.0 ? u : std::pow(u, param_ + 1.0) / (param_ + 1.0);
        case WeightKind::exponential:
            return -std::expm1(-param_ * u) / param_;
        case WeightKind::piecewise_constant: {
            double total = 0.0;
            double left = 0.0;
            for (std::size_t j = 0; j < values_.size(); ++j) {
                const double right = j < breakpoints_.size() ? breakpoints_[j] : kInf;
                if (u <= right) return total + values_[j] * (u - left);
                total += values_[j] * (right - left);
                left = right;
            }
            return total;
        }
    }
    throw internal_error("unreachable weight kind");
}

std::string WeightFunction::describe() const {
    switch (kind_) {
        case WeightKind::constant: return "constant(" + std::to_string(param_) + ")";
        case WeightKind::power: return "power(alpha=" + std::to_string(param_) + ")";
        case WeightKind::exponential: return "exponential(beta=" + std::to_string(param_) + ")";
        case WeightKind::piecewise_constant: return "piecewise_constant";
    }
    return "?";
}

ExitCode classify_exception(const std::exception& e) noexcept {
    if (dynamic_cast<const schema_error*>(&e)) return ExitCode::schema_error;
    if (dynamic_cast<const precondition_error*>(&e)) return ExitCode::precondition_error;
    if (dynamic_cast<const std::domain_error*>(&e)) return ExitCode::precondition_error;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return ExitCode::precondition_error;
    return ExitCode::internal_error;
}

}  // namespace olx
