#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "isoprod/bounds.hpp"

using namespace isoprod;

namespace {

StripConfig s2xs2(double lam, int samples = 1025) {
    Profile p = sphere_profile(2, samples);
    Profile q = sphere_profile(2, samples);
    return make_strip_config(2, 2, std::move(p), std::move(q), lam);
}

}  // namespace

TEST_CASE("f_upper closed-form examples") {
    const StripConfig cfg = s2xs2(10.0);
    const double vn = cfg.vn;

    // hemisphere candidate at lam = 10: 1e-2 * 4pi * 2pi = 0.08 pi^2
    CHECK(f_upper(cfg, 2.0 * M_PI * vn) ==
          doctest::Approx(0.08 * M_PI * M_PI).epsilon(1e-12));

    // half total volume is the profile peak
    const double peak = f_upper(cfg, cfg.total_area() / 2);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int k = 0; k < 50; ++k)
        CHECK(f_upper(cfg, u(rng) * cfg.total_area()) <= peak * (1 + 1e-12));

    // lam = 1 reduces to the unscaled product candidate V_N I_M(v/V_N)
    const StripConfig flat = s2xs2(1.0);
    CHECK(f_upper(flat, M_PI * flat.vn) ==
          doctest::Approx(flat.vn * M_PI * std::sqrt(3.0)).epsilon(1e-12));

    // exact lambda^{-n} scaling
    const StripConfig c5 = s2xs2(5.0);
    CHECK(f_upper(cfg, 3.0) * std::pow(10.0, 2) ==
          doctest::Approx(f_upper(c5, 3.0) * std::pow(5.0, 2)).epsilon(1e-14));

    CHECK_THROWS_AS(f_upper(cfg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(f_upper(cfg, cfg.total_area()), std::invalid_argument);
}

TEST_CASE("lambda0_threshold derived example") {
    const StripConfig cfg = s2xs2(10.0);
    const double vn = cfg.vn;
    const double v0 = 2.0 * M_PI * vn;  // t0 = 2pi

    // Case 1: kappa = psi(0.8 V_N)/(0.8 V_N) = 0.5 so lambda^4 <= 50;
    // Case 2b: kappa = 2 gives 6.25; threshold = 50^(1/4)
    const double expected = std::pow(50.0, 0.25);
    CHECK(lambda0_threshold(cfg, v0, 0.8) ==
          doctest::Approx(expected).epsilon(1e-9));

    // alpha -> 1 diverges
    CHECK(lambda0_threshold(cfg, v0, 0.999) > 50.0);

    // v0 above half total is reduced by symmetry first
    CHECK(lambda0_threshold(cfg, cfg.total_area() - v0, 0.8) ==
          doctest::Approx(lambda0_threshold(cfg, v0, 0.8)).epsilon(1e-13));

    // alpha -> lambda0 nondecreasing on (3/4, 1)
    double prev = 0.0;
    for (const double a : {0.76, 0.8, 0.85, 0.9, 0.95, 0.99}) {
        const double l0 = lambda0_threshold(cfg, v0, a);
        CHECK(l0 >= prev - 1e-12);
        prev = l0;
    }

    CHECK_THROWS_AS(lambda0_threshold(cfg, v0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(lambda0_threshold(cfg, v0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lambda0_threshold(cfg, 0.0, 0.8), std::invalid_argument);
}

TEST_CASE("sandwich_check verdicts at a coarse grid") {
    const double v0 = 2.0 * M_PI * 4.0 * M_PI;
    const GridSize grid{48, 48};

    SUBCASE("lambda above threshold holds") {
        const SandwichResult r = sandwich_check(s2xs2(10.0), v0, 0.8, grid);
        CHECK(r.verdict == SandwichVerdict::holds);
        CHECK(r.lower_floor ==
              doctest::Approx(std::pow(0.8, 4) * r.f_upper).epsilon(1e-15));
        CHECK(r.model_value <= r.f_upper + r.grid_slack);
        CHECK(r.certified_lower >= r.lower_floor - r.grid_slack);
        CHECK(r.model_value / r.f_upper > 0.9);  // near the cylinder value
        CHECK(r.model_value / r.f_upper < 1.0 + 1e-9);
    }

    SUBCASE("lambda below threshold makes no claim") {
        const SandwichResult r = sandwich_check(s2xs2(1.0), v0, 0.8, grid);
        CHECK(r.verdict == SandwichVerdict::lambda_below_threshold);
    }

    SUBCASE("smaller alpha holds with its own threshold") {
        const SandwichResult r = sandwich_check(s2xs2(10.0), v0, 0.76, grid);
        CHECK(r.verdict == SandwichVerdict::holds);
        CHECK(r.lambda0 < std::pow(50.0, 0.25));
    }

    SUBCASE("model stays in the sandwich for lambda in {5, 10, 20}") {
        for (const double lam : {5.0, 10.0, 20.0}) {
            const SandwichResult r = sandwich_check(s2xs2(lam), v0, 0.8, grid);
            CHECK(r.verdict == SandwichVerdict::holds);
            const double ratio = r.model_value / r.f_upper;
            CHECK(ratio >= std::pow(0.8, 4) - 0.05);
            CHECK(ratio <= 1.0 + 0.05);
        }
    }
}

TEST_CASE("model value never exceeds the cylinder candidate by more than slack") {
    const StripConfig cfg = s2xs2(5.0);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int k = 0; k < 6; ++k) {
        const double v = u(rng) * cfg.total_area();
        const ModelMinimum mm = minimize_perimeter(cfg, v, {32, 32}, false);
        const double slack = (mm.value - mm.certified_lower) +
                             0.05 * f_upper(cfg, v);
        CHECK(mm.value <= f_upper(cfg, v) + slack);
    }
}
