#include "doctest.h"
#include "olx/errors.hpp"
#include "olx/transform.hpp"
#include "test_support.hpp"

using namespace olx;

namespace {

SpacePtr sym_space() {
    SpaceWeightSpec spec;
    spec.kind = SpaceWeightKind::sym_geometric;
    spec.ratio = 0.5;
    return AtomicMeasureSpace::make(IndexDomain::integers, spec);
}

SpacePtr counting_naturals() {
    SpaceWeightSpec spec;
    spec.kind = SpaceWeightKind::constant;
    spec.value = 1.0;
    return AtomicMeasureSpace::make(IndexDomain::naturals, spec);
}

}  // namespace

TEST_CASE("preimages of catalog transformations") {
    const auto zspace = sym_space();
    const auto shift = Transformation::shift_z(zspace, 1);
    CHECK(preimage_set(shift, MeasurableSet(zspace, {0}), 3) == MeasurableSet(zspace, {-3}));

    const auto id = Transformation::identity(zspace);
    CHECK(preimage_set(id, MeasurableSet(zspace, {2, 5}), 7) == MeasurableSet(zspace, {2, 5}));

    const auto nspace = counting_naturals();
    const auto succ = Transformation::shift_n(nspace);
    CHECK(preimage_set(succ, MeasurableSet(nspace, {2}), 5).empty());
    CHECK(preimage_set(succ, MeasurableSet(nspace, {7}), 5) == MeasurableSet(nspace, {2}));
}

TEST_CASE("forward images and the injectivity guard") {
    const auto zspace = sym_space();
    const auto shift = Transformation::shift_z(zspace, 1);
    CHECK(forward_image_set(shift, MeasurableSet(zspace, {0}), 4) == MeasurableSet(zspace, {4}));
    CHECK(forward_image_set(shift, MeasurableSet(zspace, {0}), 0) == MeasurableSet(zspace, {0}));
    CHECK(forward_image_set(shift, MeasurableSet(zspace, {0}), -2) == MeasurableSet(zspace, {-2}));

    const auto fspace = AtomicMeasureSpace::finite({1.0, 1.0, 1.0});
    const auto collide = Transformation::finite_map(fspace, {{0, 2}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(forward_image_set(collide, MeasurableSet(fspace, {0}), 1),
                    precondition_error);
}

TEST_CASE("finite_map preimages by table inversion") {
    const auto fspace = AtomicMeasureSpace::finite({1.0, 2.0, 4.0});
    const auto cycle = Transformation::finite_map(fspace, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(preimage_set(cycle, MeasurableSet(fspace, {1}), 1) == MeasurableSet(fspace, {0}));
    CHECK(preimage_set(cycle, MeasurableSet(fspace, {1}), 3) == MeasurableSet(fspace, {1}));
    CHECK(forward_image_set(cycle, MeasurableSet(fspace, {0, 1}), 2) ==
          MeasurableSet(fspace, {0, 2}));
}

TEST_CASE("measure sequences on the flagship shift") {
    const auto zspace = sym_space();
    const auto shift = Transformation::shift_z(zspace, 1);
    const MeasurableSet a(zspace, {0});

    const auto pre = measure_sequence(shift, a, Direction::preimage, 3);
    CHECK(pre.values == std::vector<double>{1.0, 0.5, 0.25, 0.125});
    const auto fwd = measure_sequence(shift, a, Direction::forward, 3);
    CHECK(fwd.values == std::vector<double>{1.0, 0.5, 0.25, 0.125});

    const auto id = Transformation::identity(zspace);
    const auto constant = measure_sequence(id, MeasurableSet(zspace, {0, 1}), Direction::preimage, 5);
    for (double v : constant.values) CHECK(v == 1.5);
}

TEST_CASE("measure sequence rejects null or infinite bases") {
    const auto zspace = sym_space();
    const auto shift = Transformation::shift_z(zspace, 1);
    CHECK_THROWS_AS(measure_sequence(shift, MeasurableSet(zspace, {}), Direction::preimage, 3),
                    precondition_error);
}

TEST_CASE("injectivity probe") {
    const auto zspace = sym_space();
    CHECK(injectivity_probe(Transformation::shift_z(zspace, 2)).injective);
    CHECK(injectivity_probe(Transformation::identity(zspace)).injective);

    const auto fspace = AtomicMeasureSpace::finite({1.0, 1.0, 1.0});
    const auto collide = Transformation::finite_map(fspace, {{0, 2}, {1, 2}, {2, 0}});
    const auto report = injectivity_probe(collide);
    CHECK_FALSE(report.injective);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->first == 0);
    CHECK(report.counterexample->second == 1);

    CHECK(nonsingularity_probe(collide));
}

TEST_CASE("semigroup law for preimages") {
    const auto zspace = sym_space();
    const auto nspace = counting_naturals();
    const std::vector<Transformation> taus = {
        Transformation::shift_z(zspace, 1), Transformation::shift_z(zspace, -2),
        Transformation::identity(zspace)};
    for (const auto& tau : taus) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<AtomIndex> atoms;
            for (int k = 0; k < 4; ++k) atoms.push_back(testutil::uniform_int(-12, 12));
            const MeasurableSet a(zspace, std::move(atoms));
            const long m = testutil::uniform_int(0, 8);
            const long n = testutil::uniform_int(0, 8);
            CHECK(preimage_set(tau, a, m + n) ==
                  preimage_set(tau, preimage_set(tau, a, n), m));
        }
    }
    const auto succ = Transformation::shift_n(nspace);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<AtomIndex> atoms;
        for (int k = 0; k < 4; ++k) atoms.push_back(testutil::uniform_int(0, 20));
        const MeasurableSet a(nspace, std::move(atoms));
        const long m = testutil::uniform_int(0, 8);
        const long n = testutil::uniform_int(0, 8);
        CHECK(preimage_set(succ, a, m + n) == preimage_set(succ, preimage_set(succ, a, n), m));
    }
}

TEST_CASE("forward image measure agrees with the inverse-shift preimage") {
    const auto zspace = sym_space();
    const auto shift = Transformation::shift_z(zspace, 3);
    const auto inverse_shift = Transformation::shift_z(zspace, -3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<AtomIndex> atoms;
        for (int k = 0; k < 5; ++k) atoms.push_back(testutil::uniform_int(-10, 10));
        const MeasurableSet a(zspace, std::move(atoms));
        const long n = testutil::uniform_int(0, 6);
        CHECK(measure_of(forward_image_set(shift, a, n)) ==
              measure_of(preimage_set(inverse_shift, a, n)));
    }
}

TEST_CASE("shift preimage equals the translated set exactly") {
    const auto zspace = sym_space();
    for (AtomIndex k : {-3L, -1L, 1L, 2L}) {
        const auto shift = Transformation::shift_z(zspace, k);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<AtomIndex> atoms;
            for (int j = 0; j < 4; ++j) atoms.push_back(testutil::uniform_int(-9, 9));
            const MeasurableSet a(zspace, atoms);
            const long n = testutil::uniform_int(0, 7);
            std::vector<AtomIndex> expected;
            for (AtomIndex i : a.atoms()) expected.push_back(i - n * k);
            CHECK(preimage_set(shift, a, n) == MeasurableSet(zspace, expected));
        }
    }
}

TEST_CASE("transformation domain validation") {
    const auto zspace = sym_space();
    const auto nspace = counting_naturals();
    CHECK_THROWS_AS(Transformation::shift_n(zspace), schema_error);
    CHECK_THROWS_AS(Transformation::shift_z(nspace, 1), schema_error);
    const auto fspace = AtomicMeasureSpace::finite({1.0, 1.0});
    CHECK_THROWS_AS(Transformation::finite_map(fspace, {{0, 1}}), schema_error);
    CHECK_THROWS_AS(Transformation::finite_map(fspace, {{0, 1}, {1, 5}}), schema_error);
}
