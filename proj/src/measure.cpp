#include "olx/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "olx/errors.hpp"
#include "olx/orlicz.hpp"

namespace olx {

bool SpaceWeightSpec::operator==(const SpaceWeightSpec& other) const {
    if (kind != other.kind || weights != other.weights || ratio != other.ratio ||
        value != other.value || overrides != other.overrides)
        return false;
    if (!tail && !other.tail) return true;
    if (!tail || !other.tail) return false;
    return *tail == *other.tail;
}

namespace {

void validate_spec(IndexDomain domain, const SpaceWeightSpec& spec, bool is_tail) {
    switch (spec.kind) {
        case SpaceWeightKind::explicit_list:
            if (domain != IndexDomain::finite)
                throw schema_error("explicit weights require a finite domain");
            if (spec.weights.empty())
                throw schema_error("explicit weights must be non-empty");
            for (double w : spec.weights)
                if (!(w > 0.0) || !std::isfinite(w))
                    throw schema_error("atom weights must be strictly positive");
            break;
        case SpaceWeightKind::geometric:
            if (domain != IndexDomain::naturals)
                throw schema_error("geometric weights require the naturals domain");
            if (!(spec.ratio > 0.0 && spec.ratio < 1.0))
                throw schema_error("geometric weights require ratio in (0,1)");
            break;
        case SpaceWeightKind::sym_geometric:
            if (domain != IndexDomain::integers)
                throw schema_error("sym_geometric weights require the integers domain");
            if (!(spec.ratio > 0.0 && spec.ratio < 1.0))
                throw schema_error("sym_geometric weights require ratio in (0,1)");
            break;
        case SpaceWeightKind::constant:
            if (!(spec.value > 0.0) || !std::isfinite(spec.value))
                throw schema_error("constant atom weight must be strictly positive");
            break;
        case SpaceWeightKind::table:
            if (is_tail) throw schema_error("table weights cannot nest");
            if (!spec.tail) throw schema_error("table weights require a tail formula");
            validate_spec(domain, *spec.tail, true);
            for (const auto& [i, w] : spec.overrides)
                if (!(w > 0.0) || !std::isfinite(w))
                    throw schema_error("override weights must be strictly positive");
            break;
    }
}

double spec_weight(const SpaceWeightSpec& spec, AtomIndex i) {
    switch (spec.kind) {
        case SpaceWeightKind::explicit_list:
            return spec.weights[static_cast<std::size_t>(i)];
        case SpaceWeightKind::geometric:
            return pow_int(spec.ratio, static_cast<unsigned long>(i));
        case SpaceWeightKind::sym_geometric:
            return pow_int(spec.ratio, static_cast<unsigned long>(std::llabs(i)));
        case SpaceWeightKind::constant:
            return spec.value;
        case SpaceWeightKind::table: {
            auto it = spec.overrides.find(i);
            return it != spec.overrides.end() ? it->second : spec_weight(*spec.tail, i);
        }
    }
    throw internal_error("unreachable weight spec kind");
}

double spec_total(IndexDomain domain, const SpaceWeightSpec& spec) {
    switch (spec.kind) {
        case SpaceWeightKind::explicit_list: {
            double total = 0.0;
            for (double w : spec.weights) total += w;
            return total;
        }
        case SpaceWeightKind::geometric:
            return 1.0 / (1.0 - spec.ratio);
        case SpaceWeightKind::sym_geometric:
            return (1.0 + spec.ratio) / (1.0 - spec.ratio);
        case SpaceWeightKind::constant:
            return kInf;  // finite domains are handled by explicit_list
        case SpaceWeightKind::table: {
            double total = spec_total(domain, *spec.tail);
            if (std::isinf(total)) return total;
            for (const auto& [i, w] : spec.overrides)
                total += w - spec_weight(*spec.tail, i);
            return total;
        }
    }
    throw internal_error("unreachable weight spec kind");
}

}  // namespace

std::shared_ptr<const AtomicMeasureSpace> AtomicMeasureSpace::finite(std::vector<double> weights) {
    SpaceWeightSpec spec;
    spec.kind = SpaceWeightKind::explicit_list;
    spec.weights = std::move(weights);
    return make(IndexDomain::finite, std::move(spec));
}

std::shared_ptr<const AtomicMeasureSpace> AtomicMeasureSpace::make(IndexDomain domain,
                                                                   SpaceWeightSpec spec) {
    if (domain == IndexDomain::finite && spec.kind != SpaceWeightKind::explicit_list)
        throw schema_error("finite domains take an explicit weight list");
    validate_spec(domain, spec, false);
    return std::shared_ptr<const AtomicMeasureSpace>(
        new AtomicMeasureSpace(domain, std::move(spec)));
}

bool AtomicMeasureSpace::contains(AtomIndex i) const {
    switch (domain_) {
        case IndexDomain::finite:
            return i >= 0 && static_cast<std::size_t>(i) < spec_.weights.size();
        case IndexDomain::naturals:
            return i >= 0;
        case IndexDomain::integers:
            return true;
    }
    return false;
}

double AtomicMeasureSpace::weight(AtomIndex i) const {
    if (!contains(i)) throw precondition_error("atom index outside the space domain");
    const double w = spec_weight(spec_, i);
    if (!(w > 0.0))
        throw internal_error("atom weight underflowed to zero at index " + std::to_string(i));
    return w;
}

std::size_t AtomicMeasureSpace::finite_size() const {
    if (domain_ != IndexDomain::finite)
        throw precondition_error("finite_size requires a finite domain");
    return spec_.weights.size();
}

double AtomicMeasureSpace::total_measure() const {
    return spec_total(domain_, spec_);
}

// ---------------------------------------------------------------------------
// MeasurableSet
// ---------------------------------------------------------------------------

MeasurableSet::MeasurableSet(SpacePtr space, std::vector<AtomIndex> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)) {
    if (!space_) throw precondition_error("measurable set requires a space");
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (AtomIndex i : atoms_)
        if (!space_->contains(i))
            throw schema_error("set atom " + std::to_string(i) + " outside the space domain");
}

bool MeasurableSet::contains(AtomIndex i) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), i);
}

bool MeasurableSet::operator==(const MeasurableSet& other) const {
    return *space_ == *other.space_ && atoms_ == other.atoms_;
}

double measure_of(const MeasurableSet& s) {
    double total = 0.0;
    for (AtomIndex i : s.atoms()) total += s.space()->weight(i);
    return total;
}

// ---------------------------------------------------------------------------
// SimpleFunction
// ---------------------------------------------------------------------------

SimpleFunction::SimpleFunction(SpacePtr space, std::map<AtomIndex, double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw precondition_error("simple function requires a space");
    for (auto it = values_.begin(); it != values_.end();) {
        if (!space_->contains(it->first))
            throw schema_error("function atom " + std::to_string(it->first) +
                               " outside the space domain");
        if (!std::isfinite(it->second))
            throw schema_error("function values must be finite");
        if (it->second == 0.0)
            it = values_.erase(it);
        else
            ++it;
    }
}

double SimpleFunction::at(AtomIndex i) const {
    auto it = values_.find(i);
    return it != values_.end() ? it->second : 0.0;
}

MeasurableSet SimpleFunction::support_set() const {
    std::vector<AtomIndex> atoms;
    atoms.reserve(values_.size());
    for (const auto& [i, v] : values_) atoms.push_back(i);
    return MeasurableSet(space_, std::move(atoms));
}

SimpleFunction SimpleFunction::scaled(double c) const {
    std::map<AtomIndex, double> out;
    if (c != 0.0)
        for (const auto& [i, v] : values_) out.emplace(i, c * v);
    return SimpleFunction(space_, std::move(out));
}

SimpleFunction SimpleFunction::plus(const SimpleFunction& other) const {
    if (!(*space_ == *other.space_))
        throw precondition_error("cannot combine functions over different spaces");
    std::map<AtomIndex, double> out = values_;
    for (const auto& [i, v] : other.values_) out[i] += v;
    return SimpleFunction(space_, std::move(out));
}

SimpleFunction SimpleFunction::minus(const SimpleFunction& other) const {
    return plus(other.scaled(-1.0));
}

bool SimpleFunction::operator==(const SimpleFunction& other) const {
    return *space_ == *other.space_ && values_ == other.values_;
}

SimpleFunction SimpleFunction::indicator(const MeasurableSet& a) {
    std::map<AtomIndex, double> values;
    for (AtomIndex i : a.atoms()) values.emplace(i, 1.0);
    return SimpleFunction(a.space(), std::move(values));
}

// ---------------------------------------------------------------------------
// Distribution and rearrangement
// ---------------------------------------------------------------------------

namespace {

// Atoms of |g| grouped by distinct |value| in descending order; group weights
// are summed in ascending atom order. Both the distribution function and the
// rearrangement take their sums from here, so partial sums agree exactly.
struct LevelGroups {
    std::vector<double> values;        // distinct |v|, descending
    std::vector<double> group_weight;  // weight of each level set
};

LevelGroups level_groups(const SimpleFunction& g) {
    std::map<double, double> by_value;  // |value| -> summed weight, ascending
    for (const auto& [i, v] : g.support()) by_value[std::fabs(v)] += g.space()->weight(i);
    LevelGroups out;
    for (auto it = by_value.rbegin(); it != by_value.rend(); ++it) {
        out.values.push_back(it->first);
        out.group_weight.push_back(it->second);
    }
    return out;
}

}  // namespace

double distribution_function(const SimpleFunction& g, double lam) {
    if (lam < 0.0 || std::isnan(lam))
        throw std::domain_error("distribution function level must be >= 0");
    const LevelGroups groups = level_groups(g);
    double total = 0.0;
    for (std::size_t j = 0; j < groups.values.size(); ++j) {
        if (groups.values[j] <= lam) break;
        total += groups.group_weight[j];
    }
    return total;
}

RearrangementProfile rearrangement(const SimpleFunction& g) {
    const LevelGroups groups = level_groups(g);
    RearrangementProfile profile;
    double cumulative = 0.0;
    for (std::size_t j = 0; j < groups.values.size(); ++j) {
        cumulative += groups.group_weight[j];
        profile.steps.push_back({groups.values[j], cumulative});
    }
    return profile;
}

double RearrangementProfile::value_at(double t) const {
    if (t < 0.0) throw std::domain_error("rearrangement argument must be >= 0");
    for (const auto& step : steps)
        if (t < step.right_endpoint) return step.value;
    return 0.0;
}

double RearrangementProfile::measure_above(double lam) const {
    double result = 0.0;
    for (const auto& step : steps) {
        if (step.value <= lam) break;
        result = step.right_endpoint;
    }
    return result;
}

std::string domain_name(IndexDomain d) {
    switch (d) {
        case IndexDomain::finite: return "finite";
        case IndexDomain::naturals: return "naturals";
        case IndexDomain::integers: return "integers";
    }
    return "?";
}

}  // namespace olx
