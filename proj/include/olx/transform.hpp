#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olx/measure.hpp"

namespace olx {

enum class TransformKind {
    finite_map,  // total table on a finite domain
    shift_z,     // i -> i + offset on the integers
    shift_n,     // n -> n + 1 on the naturals
    identity,
};

enum class Direction { preimage, forward };

struct InjectivityReport {
    bool injective = true;
    std::optional<std::pair<AtomIndex, AtomIndex>> counterexample;
};

// A non-singular measurable self-map of the atom index set. Preimages and
// forward images of finite sets are computed exactly. Since every atom has
// positive weight, the only null set is empty and every total map is
// automatically non-singular.
class Transformation {
public:
    static Transformation finite_map(SpacePtr space, std::map<AtomIndex, AtomIndex> table);
    static Transformation shift_z(SpacePtr space, AtomIndex offset);
    static Transformation shift_n(SpacePtr space);
    static Transformation identity(SpacePtr space);

    TransformKind kind() const { return kind_; }
    AtomIndex offset() const { return offset_; }
    const SpacePtr& space() const { return space_; }
    const std::map<AtomIndex, AtomIndex>& table() const { return table_; }

    AtomIndex apply(AtomIndex i) const;  // tau(i)

    std::string describe() const;

private:
    Transformation(TransformKind kind, SpacePtr space) : kind_(kind), space_(std::move(space)) {}
    TransformKind kind_;
    SpacePtr space_;
    AtomIndex offset_ = 0;
    std::map<AtomIndex, AtomIndex> table_;
};

// {i : tau^n(i) in A}, exact. Shifts translate; finite maps invert the table
// one step at a time.
MeasurableSet preimage_set(const Transformation& t, const MeasurableSet& a, long n);

// tau^n(A) for n >= 0 (requires injectivity when n > 0); preimage for n < 0.
MeasurableSet forward_image_set(const Transformation& t, const MeasurableSet& a, long n);

struct MeasureSequence {
    Direction direction;
    MeasurableSet base_set;
    std::vector<double> values;  // values[n] = mu(tau^{-+n}(A)), n = 0..N
};

// Exact measures of the stepped images; requires 0 < mu(A) < inf.
MeasureSequence measure_sequence(const Transformation& t, const MeasurableSet& a,
                                 Direction dir, long horizon);

// Shifts and the identity are injective analytically; finite tables are
// checked exactly, optionally restricted to a window of atoms.
InjectivityReport injectivity_probe(const Transformation& t,
                                    const std::vector<AtomIndex>& window = {});

// True for every catalog transformation: all atom weights are positive, so
// the only null set is the empty set and its preimage under a total map is
// empty again.
bool nonsingularity_probe(const Transformation& t);

}  // namespace olx
