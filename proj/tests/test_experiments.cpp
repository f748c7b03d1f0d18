#include <doctest.h>

#include <cmath>
#include <string>

#include "liftedmc/errors.hpp"
#include "liftedmc/experiments.hpp"

using namespace liftedmc;

TEST_CASE("theta spec") {
    const ThetaSpec sym = ThetaSpec::parse("1/n");
    CHECK(sym.resolve(5) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(sym.resolve(100) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(sym.str() == "1/n");

    const ThetaSpec lit = ThetaSpec::parse("0.25");
    CHECK(lit.resolve(5) == 0.25);
    CHECK(lit.resolve(999) == 0.25);

    CHECK_THROWS_AS(ThetaSpec::parse("2"), ThetaOutOfRangeError);
    CHECK_THROWS_AS(ThetaSpec::parse("-0.1"), ThetaOutOfRangeError);
    CHECK_THROWS_AS(ThetaSpec::parse("abc"), ThetaOutOfRangeError);
    CHECK_THROWS_AS(ThetaSpec::parse("0.5x"), ThetaOutOfRangeError);
}

TEST_CASE("fit_exponent on synthetic points") {
    const FitResult quad = fit_exponent({{10, 100}, {100, 10000}});
    CHECK(quad.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(quad.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::pair<Real, Real>> linear;
    for (Real n : {11, 21, 31, 41, 81}) linear.push_back({n, 7 * n});
    const FitResult lin = fit_exponent(linear);
    CHECK(lin.slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lin.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-9));

    const FitResult flat = fit_exponent({{10, 5}, {100, 5}, {1000, 5}});
    CHECK(flat.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(flat.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    // n ln n grows slightly faster than n on a finite grid.
    std::vector<std::pair<Real, Real>> nlogn;
    for (Real n = 11; n <= 201; n += 2) nlogn.push_back({n, n * std::log(n)});
    const FitResult nl = fit_exponent(nlogn);
    CHECK(nl.slope > 1.0);
    CHECK(nl.slope < 1.3);

    CHECK_THROWS_AS(fit_exponent({{10, 100}}), DegenerateFitError);
    CHECK_THROWS_AS(fit_exponent({{10, 100}, {10, 200}}), DegenerateFitError);
    CHECK_THROWS_AS(fit_exponent({{10, 0.5}, {20, 3}}), DegenerateFitError);
}

TEST_CASE("scaling smoke studies") {
    const std::vector<Index> grid{9, 11, 13, 15, 17};

    const ScalingResult metro =
        scaling_study("uniform", "metropolis", grid, 0.25);
    CHECK(metro.points.size() == grid.size());
    CHECK(metro.slope > 1.5);
    CHECK(metro.slope < 2.5);
    CHECK(metro.r_squared > 0.99);

    const ScalingResult dhn = scaling_study("uniform", "dhn", grid, 0.25);
    CHECK(dhn.slope < 1.5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(dhn.points[i].second < metro.points[i].second);
    }

    CHECK_THROWS_AS(scaling_study("uniform", "dhn", {10}, 0.25), EvenNError);
    CHECK_THROWS_AS(scaling_study("uniform", "simulated-annealing", grid, 0.25),
                    UnknownFamilyError);
}

TEST_CASE("cap exceedance carries the offending n") {
    try {
        // delta far below what 200n steps can reach at n = 9
        scaling_study("uniform", "dhn", {9}, 1e-200);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(std::string(e.what()).find("n = 9") != std::string::npos);
    }
}
