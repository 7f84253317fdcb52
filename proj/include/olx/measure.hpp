#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace olx {

using AtomIndex = std::int64_t;

enum class IndexDomain { finite, naturals, integers };

enum class SpaceWeightKind {
    explicit_list,   // finite domain, one weight per atom
    geometric,       // ratio^i on the naturals
    sym_geometric,   // ratio^|i| on the integers
    constant,        // c on every atom (counting measure for c = 1)
    table,           // finite overrides on top of a tail formula
};

struct SpaceWeightSpec {
    SpaceWeightKind kind;
    std::vector<double> weights;              // explicit_list
    double ratio = 0.5;                       // geometric / sym_geometric
    double value = 1.0;                       // constant
    std::map<AtomIndex, double> overrides;    // table
    std::shared_ptr<SpaceWeightSpec> tail;    // table

    bool operator==(const SpaceWeightSpec&) const;
};

// A sigma-finite purely atomic measure space over a catalog index domain.
// Every atom carries a strictly positive weight, so the only null set is
// the empty set. Immutable and freely shareable.
class AtomicMeasureSpace {
public:
    static std::shared_ptr<const AtomicMeasureSpace> finite(std::vector<double> weights);
    static std::shared_ptr<const AtomicMeasureSpace> make(IndexDomain domain, SpaceWeightSpec spec);

    IndexDomain domain() const { return domain_; }
    const SpaceWeightSpec& weight_spec() const { return spec_; }

    bool contains(AtomIndex i) const;
    // mu_i > 0. Throws internal_error if the weight formula underflows to 0
    // (geometric tails run out of double range around |i| ~ 1074).
    double weight(AtomIndex i) const;

    std::size_t finite_size() const;  // only for finite domains

    // mu(X); +inf for non-summable families (e.g. counting measure on N).
    double total_measure() const;

    bool operator==(const AtomicMeasureSpace& other) const {
        return domain_ == other.domain_ && spec_ == other.spec_;
    }

private:
    AtomicMeasureSpace(IndexDomain domain, SpaceWeightSpec spec)
        : domain_(domain), spec_(std::move(spec)) {}
    IndexDomain domain_;
    SpaceWeightSpec spec_;
};

using SpacePtr = std::shared_ptr<const AtomicMeasureSpace>;

// A finite set of atoms of one space, kept sorted and unique.
class MeasurableSet {
public:
    MeasurableSet(SpacePtr space, std::vector<AtomIndex> atoms);

    const SpacePtr& space() const { return space_; }
    const std::vector<AtomIndex>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    bool contains(AtomIndex i) const;

    bool operator==(const MeasurableSet& other) const;

private:
    SpacePtr space_;
    std::vector<AtomIndex> atoms_;
};

// Sum of atom weights, taken in ascending atom order.
double measure_of(const MeasurableSet& s);

// A finitely supported measurable function, stored as atom -> nonzero value.
// Zero values are dropped on construction, so support is canonical.
class SimpleFunction {
public:
    explicit SimpleFunction(SpacePtr space, std::map<AtomIndex, double> values = {});

    const SpacePtr& space() const { return space_; }
    const std::map<AtomIndex, double>& support() const { return values_; }
    bool is_zero() const { return values_.empty(); }
    double at(AtomIndex i) const;

    MeasurableSet support_set() const;

    SimpleFunction scaled(double c) const;
    SimpleFunction plus(const SimpleFunction& other) const;
    SimpleFunction minus(const SimpleFunction& other) const;

    bool operator==(const SimpleFunction& other) const;

    static SimpleFunction indicator(const MeasurableSet& a);

private:
    SpacePtr space_;
    std::map<AtomIndex, double> values_;
};

// The non-increasing rearrangement g* of a simple function as an exact step
// profile: g* = value[j] on [endpoint[j-1], endpoint[j]) with endpoint[-1]=0,
// and 0 beyond the last endpoint. Values strictly decrease, endpoints
// strictly increase.
struct RearrangementStep {
    double value;
    double right_endpoint;
};

struct RearrangementProfile {
    std::vector<RearrangementStep> steps;

    bool empty() const { return steps.empty(); }
    // g*(t) for t >= 0.
    double value_at(double t) const;
    // Lebesgue measure of {t : g*(t) > lam}, exact from the step sums.
    double measure_above(double lam) const;
    double total_length() const { return steps.empty() ? 0.0 : steps.back().right_endpoint; }
};

// mu{|g| > lam}. Summed grouped by descending |value| so the partial sums
// match the rearrangement profile's endpoints bit for bit.
double distribution_function(const SimpleFunction& g, double lam);

RearrangementProfile rearrangement(const SimpleFunction& g);

std::string domain_name(IndexDomain d);

}  // namespace olx
