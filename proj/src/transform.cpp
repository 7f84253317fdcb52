#include "olx/transform.hpp"

#include <algorithm>
#include <cmath>

#include "olx/errors.hpp"

namespace olx {

Transformation Transformation::finite_map(SpacePtr space, std::map<AtomIndex, AtomIndex> table) {
    if (!space) throw precondition_error("transformation requires a space");
    if (space->domain() != IndexDomain::finite)
        throw schema_error("finite_map requires a finite domain");
    const auto n = static_cast<AtomIndex>(space->finite_size());
    if (table.size() != static_cast<std::size_t>(n))
        throw schema_error("finite_map table must be total on the domain");
    for (const auto& [from, to] : table) {
        if (from < 0 || from >= n)
            throw schema_error("finite_map table key outside the domain");
        if (to < 0 || to >= n)
            throw schema_error("finite_map table image outside the domain");
    }
    Transformation t(TransformKind::finite_map, std::move(space));
    t.table_ = std::move(table);
    return t;
}

Transformation Transformation::shift_z(SpacePtr space, AtomIndex offset) {
    if (!space) throw precondition_error("transformation requires a space");
    if (space->domain() != IndexDomain::integers)
        throw schema_error("shift_z requires the integers domain");
    Transformation t(TransformKind::shift_z, std::move(space));
    t.offset_ = offset;
    return t;
}

Transformation Transformation::shift_n(SpacePtr space) {
    if (!space) throw precondition_error("transformation requires a space");
    if (space->domain() != IndexDomain::naturals)
        throw schema_error("shift_n requires the naturals domain");
    return Transformation(TransformKind::shift_n, std::move(space));
}

Transformation Transformation::identity(SpacePtr space) {
    if (!space) throw precondition_error("transformation requires a space");
    return Transformation(TransformKind::identity, std::move(space));
}

AtomIndex Transformation::apply(AtomIndex i) const {
    switch (kind_) {
        case TransformKind::finite_map: {
            auto it = table_.find(i);
            if (it == table_.end()) throw precondition_error("atom outside the finite_map domain");
            return it->second;
        }
        case TransformKind::shift_z:
            return i + offset_;
        case TransformKind::shift_n:
            return i + 1;
        case TransformKind::identity:
            return i;
    }
    throw internal_error("unreachable transformation kind");
}

std::string Transformation::describe() const {
    switch (kind_) {
        case TransformKind::finite_map: return "finite_map";
        case TransformKind::shift_z: return "shift_z(" + std::to_string(offset_) + ")";
        case TransformKind::shift_n: return "shift_n";
        case TransformKind::identity: return "identity";
    }
    return "?";
}

namespace {

MeasurableSet translate(const MeasurableSet& a, AtomIndex delta, bool clip_to_naturals) {
    std::vector<AtomIndex> out;
    out.reserve(a.size());
    for (AtomIndex i : a.atoms()) {
        const AtomIndex j = i + delta;
        if (!clip_to_naturals || j >= 0) out.push_back(j);
    }
    return MeasurableSet(a.space(), std::move(out));
}

MeasurableSet finite_map_preimage_step(const Transformation& t, const MeasurableSet& a) {
    std::vector<AtomIndex> out;
    for (const auto& [from, to] : t.table())
        if (a.contains(to)) out.push_back(from);
    return MeasurableSet(a.space(), std::move(out));
}

MeasurableSet finite_map_forward_step(const Transformation& t, const MeasurableSet& a) {
    std::vector<AtomIndex> out;
    out.reserve(a.size());
    for (AtomIndex i : a.atoms()) out.push_back(t.apply(i));
    return MeasurableSet(a.space(), std::move(out));
}

void require_same_space(const Transformation& t, const MeasurableSet& a) {
    if (!(*t.space() == *a.space()))
        throw precondition_error("set and transformation live on different spaces");
}

}  // namespace

MeasurableSet preimage_set(const Transformation& t, const MeasurableSet& a, long n) {
    require_same_space(t, a);
    if (n < 0) throw precondition_error("preimage_set requires n >= 0");
    switch (t.kind()) {
        case TransformKind::identity:
            return a;
        case TransformKind::shift_z:
            return translate(a, -n * t.offset(), false);
        case TransformKind::shift_n:
            return translate(a, -n, true);
        case TransformKind::finite_map: {
            MeasurableSet current = a;
            for (long step = 0; step < n && !current.empty(); ++step)
                current = finite_map_preimage_step(t, current);
            return current;
        }
    }
    throw internal_error("unreachable transformation kind");
}

MeasurableSet forward_image_set(const Transformation& t, const MeasurableSet& a, long n) {
    require_same_space(t, a);
    if (n < 0) return preimage_set(t, a, -n);
    if (n == 0) return a;
    const auto inj = injectivity_probe(t);
    if (!inj.injective)
        throw precondition_error("forward images require an injective transformation");
    switch (t.kind()) {
        case TransformKind::identity:
            return a;
        case TransformKind::shift_z:
            return translate(a, n * t.offset(), false);
        case TransformKind::shift_n:
            return translate(a, n, true);
        case TransformKind::finite_map: {
            MeasurableSet current = a;
            for (long step = 0; step < n; ++step)
                current = finite_map_forward_step(t, current);
            return current;
        }
    }
    throw internal_error("unreachable transformation kind");
}

MeasureSequence measure_sequence(const Transformation& t, const MeasurableSet& a,
                                 Direction dir, long horizon) {
    require_same_space(t, a);
    if (horizon < 0) throw precondition_error("measure_sequence requires horizon >= 0");
    const double mu0 = measure_of(a);
    if (!(mu0 > 0.0) || std::isinf(mu0))
        throw precondition_error("measure_sequence requires 0 < mu(A) < inf");
    if (dir == Direction::forward) {
        const auto inj = injectivity_probe(t);
        if (!inj.injective)
            throw precondition_error("forward measure sequences require an injective transformation");
    }
    MeasureSequence seq{dir, a, {}};
    seq.values.reserve(static_cast<std::size_t>(horizon) + 1);
    MeasurableSet current = a;
    seq.values.push_back(mu0);
    for (long n = 1; n <= horizon; ++n) {
        current = dir == Direction::preimage ? preimage_set(t, current, 1)
                                             : forward_image_set(t, current, 1);
        seq.values.push_back(measure_of(current));
    }
    return seq;
}

InjectivityReport injectivity_probe(const Transformation& t,
                                    const std::vector<AtomIndex>& window) {
    InjectivityReport report;
    if (t.kind() != TransformKind::finite_map) return report;  // shifts, identity
    std::map<AtomIndex, AtomIndex> seen;  // image -> first source
    for (const auto& [from, to] : t.table()) {
        if (!window.empty() &&
            std::find(window.begin(), window.end(), from) == window.end())
            continue;
        auto [it, inserted] = seen.emplace(to, from);
        if (!inserted) {
            report.injective = false;
            report.counterexample = {it->second, from};
            return report;
        }
    }
    return report;
}

bool nonsingularity_probe(const Transformation&) {
    // Atom weights are strictly positive by construction, so the only null
    // set is empty; total maps pull the empty set back to itself.
    return true;
}

}  // namespace olx
