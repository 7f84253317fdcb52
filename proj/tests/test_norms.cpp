#include <cmath>

#include "doctest.h"
#include "olx/errors.hpp"
#include "olx/norms.hpp"
#include "test_support.hpp"

using namespace olx;

namespace {

SpacePtr s0() { return AtomicMeasureSpace::finite({1.0, 2.0, 1.0}); }

SimpleFunction g0(const SpacePtr& space) {
    return SimpleFunction(space, {{0, 3.0}, {1, 1.0}, {2, 2.0}});
}

NormContext ctx_of(const SpacePtr& space, OrliczFunction phi, WeightFunction w) {
    return NormContext{std::move(phi), std::move(w), space};
}

}  // namespace

TEST_CASE("modular of the S0 example") {
    const auto space = s0();
    const auto g = g0(space);

    const auto flat = ctx_of(space, OrliczFunction::power(2), WeightFunction::constant(1));
    // oracle for h == 1: direct atomwise sum of phi(|g|) mu
    CHECK(modular(flat, g) == 15.0);
    CHECK(modular(flat, g) == doctest::Approx(testutil::atomwise_modular(flat, g)).epsilon(1e-14));

    const auto lorentz = ctx_of(space, OrliczFunction::power(2), WeightFunction::exponential(1));
    // frozen from 9(1-e^-1) + 4(e^-1 - e^-2) + (e^-2 - e^-4)
    CHECK(modular(lorentz, g) == doctest::Approx(6.736281305).epsilon(1e-9));
    // oracle: quadrature of phi(g*(t)) e^{-t}
    const auto profile = rearrangement(g);
    const double oracle = testutil::quad(
        [&](double t) { return lorentz.phi.eval(profile.value_at(t)) * std::exp(-t); }, 0.0, 4.0);
    CHECK(modular(lorentz, g) == doctest::Approx(oracle).epsilon(1e-9));

    CHECK(modular(flat, SimpleFunction(space)) == 0.0);
}

TEST_CASE("modular hits +inf past b_phi") {
    const auto space = s0();
    const auto ctx = ctx_of(space, OrliczFunction::neg_log(), WeightFunction::constant(1));
    CHECK(std::isinf(modular(ctx, SimpleFunction(space, {{0, 1.5}}))));
    CHECK(modular(ctx, SimpleFunction(space, {{0, 0.5}})) ==
          doctest::Approx(-std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("Luxemburg norm of the S0 example") {
    const auto space = s0();
    const auto ctx = ctx_of(space, OrliczFunction::power(2), WeightFunction::constant(1));
    CHECK(luxemburg_norm(ctx, g0(space)) ==
          doctest::Approx(3.872983346207417).epsilon(1e-12));
    CHECK(luxemburg_norm(ctx, SimpleFunction(space)) == 0.0);
}

TEST_CASE("Luxemburg norm coincides with the weighted p-norm for h == 1") {
    const auto space = s0();
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const auto ctx = ctx_of(space, OrliczFunction::power(p), WeightFunction::constant(1));
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = testutil::random_function(space, 3, 0, 2);
            const double oracle = testutil::weighted_p_norm(g, p);
            CHECK(luxemburg_norm(ctx, g) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }
}

TEST_CASE("unit-modular consistency at the norm") {
    const auto space = s0();
    for (const auto& phi : testutil::phi_catalog()) {
        if (phi.a_phi() > 0.0) continue;  // flat segments never reach modular 1 sharply
        for (const auto& w : testutil::weight_catalog()) {
            const auto ctx = ctx_of(space, phi, w);
            for (int trial = 0; trial < 10; ++trial) {
                const auto g = testutil::random_function(space, 3, 0, 2, -2.0, 2.0);
                const auto detail = luxemburg_norm_detail(ctx, g);
                CHECK(detail.modular_at_norm <= 1.0);
                CHECK(modular_scaled(ctx, g, detail.norm * (1 - 1e-6)) > 1.0);
            }
        }
    }
}

TEST_CASE("indicator norm closed form matches the bisection oracle") {
    struct Case {
        OrliczFunction phi;
        WeightFunction w;
        double mu;
        double expected;
    };
    const Case cases[] = {
        {OrliczFunction::power(1), WeightFunction::constant(1), 0.25, 0.25},
        {OrliczFunction::power(2), WeightFunction::constant(1), 4.0, 2.0},
        {OrliczFunction::power(1), WeightFunction::exponential(1), std::log(2.0), 0.5},
    };
    for (const auto& c : cases) {
        const auto space = AtomicMeasureSpace::finite({c.mu});
        const auto ctx = ctx_of(space, c.phi, c.w);
        const MeasurableSet a(space, {0});
        CHECK(indicator_norm(ctx, a) == doctest::Approx(c.expected).epsilon(1e-12));
        CHECK(indicator_norm(ctx, a) ==
              doctest::Approx(luxemburg_norm(ctx, SimpleFunction::indicator(a))).epsilon(1e-10));
    }
    // mu(A) = 0 convention
    const auto space = s0();
    const auto ctx = ctx_of(space, OrliczFunction::power(2), WeightFunction::constant(1));
    CHECK(indicator_norm(ctx, MeasurableSet(space, {})) == 0.0);
}

TEST_CASE("randomized indicator norm agreement across catalogs") {
    for (int trial = 0; trial < 150; ++trial) {
        const double mu = std::pow(10.0, testutil::uniform(-3.0, 3.0));
        const auto space = AtomicMeasureSpace::finite({mu});
        const auto& phis = testutil::phi_catalog();
        const auto& weights = testutil::weight_catalog();
        const auto phi = phis[static_cast<std::size_t>(testutil::uniform_int(0, long(phis.size()) - 1))];
        const auto w = weights[static_cast<std::size_t>(testutil::uniform_int(0, long(weights.size()) - 1))];
        const auto ctx = ctx_of(space, phi, w);
        const MeasurableSet a(space, {0});
        const double closed = indicator_norm(ctx, a);
        const double bisected = luxemburg_norm(ctx, SimpleFunction::indicator(a));
        CHECK(std::fabs(closed - bisected) <= 1e-8 * std::max(1.0, std::fabs(closed)));
    }
}

TEST_CASE("sup norm") {
    const auto space = s0();
    CHECK(sup_norm(g0(space)) == 3.0);
    CHECK(sup_norm(SimpleFunction(space)) == 0.0);
    CHECK(sup_norm(g0(space).scaled(-2.5)) == 7.5);
}

TEST_CASE("intersection norm") {
    const auto space = s0();
    const auto ctx = ctx_of(space, OrliczFunction::power(2), WeightFunction::constant(1));
    CHECK(intersection_norm(ctx, g0(space)) ==
          doctest::Approx(std::sqrt(15.0)).epsilon(1e-12));
    CHECK(intersection_norm(ctx, SimpleFunction(space)) == 0.0);

    // a large flat indicator is dominated by its Orlicz part for power(1)
    const auto big = AtomicMeasureSpace::finite({40.0});
    const auto ctx1 = ctx_of(big, OrliczFunction::power(1), WeightFunction::constant(1));
    CHECK(intersection_norm(ctx1, SimpleFunction::indicator(MeasurableSet(big, {0}))) ==
          doctest::Approx(40.0).epsilon(1e-10));

    const auto lorentz = ctx_of(space, OrliczFunction::power(2), WeightFunction::exponential(1));
    CHECK_THROWS_AS(intersection_norm(lorentz, g0(space)), precondition_error);
}

TEST_CASE("norm axioms on random inputs") {
    const auto space = AtomicMeasureSpace::finite({1.0, 2.0, 1.0, 0.5, 4.0});
    for (const auto& phi : testutil::phi_catalog()) {
        for (const auto& w : testutil::weight_catalog()) {
            const auto ctx = ctx_of(space, phi, w);
            for (int trial = 0; trial < 8; ++trial) {
                const auto f = testutil::random_function(space, 5, 0, 4, -3.0, 3.0);
                const auto g = testutil::random_function(space, 5, 0, 4, -3.0, 3.0);
                const double nf = luxemburg_norm(ctx, f);
                const double ng = luxemburg_norm(ctx, g);
                CHECK(nf > 0.0);

                const double c = testutil::uniform(-3.0, 3.0);
                if (c != 0.0) {
                    const double scaled = luxemburg_norm(ctx, f.scaled(c));
                    CHECK(std::fabs(scaled - std::fabs(c) * nf) <=
                          1e-9 * std::max(1.0, std::fabs(c) * nf));
                }
                const double sum = luxemburg_norm(ctx, f.plus(g));
                CHECK(sum <= nf + ng + 1e-9 * std::max(1.0, nf + ng));
            }
        }
    }
}

TEST_CASE("norm monotone under pointwise domination") {
    const auto space = AtomicMeasureSpace::finite({1.0, 2.0, 1.0, 0.5});
    for (const auto& phi : testutil::phi_catalog()) {
        const auto ctx = ctx_of(space, phi, WeightFunction::exponential(0.5));
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = testutil::random_function(space, 4, 0, 3, -2.0, 2.0);
            std::map<AtomIndex, double> bigger;
            for (const auto& [i, v] : g.support()) bigger[i] = v * testutil::uniform(1.0, 2.5);
            const SimpleFunction f(space, std::move(bigger));
            CHECK(luxemburg_norm(ctx, g) <= luxemburg_norm(ctx, f) + 1e-9);
        }
    }
}

TEST_CASE("indicator homogeneity") {
    const auto space = s0();
    const auto ctx = ctx_of(space, OrliczFunction::power_log(), WeightFunction::constant(1));
    const MeasurableSet a(space, {0, 1});
    const auto chi = SimpleFunction::indicator(a);
    const double base = luxemburg_norm(ctx, chi);
    for (double c : {0.5, 2.0, -3.0})
        CHECK(luxemburg_norm(ctx, chi.scaled(c)) ==
              doctest::Approx(std::fabs(c) * base).epsilon(1e-10));
}
