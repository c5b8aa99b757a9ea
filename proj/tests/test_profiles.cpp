#include <doctest.h>

#include <cmath>
#include <random>

#include "isoprod/profile.hpp"
#include "isoprod/sphere_cap.hpp"

using namespace isoprod;

namespace {

// independent closed form for the unit S^2 profile, I(v) = sqrt(v(4pi - v)),
// obtained by eliminating r from v = 2pi(1-cos r), a = 2pi sin r
double s2_closed(double v) { return std::sqrt(v * (4.0 * M_PI - v)); }

// independent S^3 cap primitive: v(r) = 2pi (r - sin r cos r), a = 4pi sin^2 r
double s3_cap_volume(double r) { return 2.0 * M_PI * (r - std::sin(r) * std::cos(r)); }
double s3_cap_area(double r) { return 4.0 * M_PI * std::sin(r) * std::sin(r); }

}  // namespace

TEST_CASE("sphere_profile S2 matches the closed form") {
    const Profile p = sphere_profile(2, 513);
    CHECK(p.dim == 2);
    CHECK(p.total_volume == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
    // hemisphere: I(2pi) = 2pi
    CHECK(p.interp(2.0 * M_PI) == doctest::Approx(2.0 * M_PI).epsilon(1e-9));
    // quarter volume: I(pi) = pi*sqrt(3)
    CHECK(p.interp(M_PI) == doctest::Approx(M_PI * std::sqrt(3.0)).epsilon(1e-5));
    // vanishing volume
    CHECK(p.interp(1e-14) < 1e-5);
    CHECK(p.interp(0.0) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int k = 0; k < 200; ++k) {
        const double v = u(rng) * p.total_volume;
        CHECK(p.interp(v) == doctest::Approx(s2_closed(v)).epsilon(2e-4));
        // linear interpolation of a concave profile underestimates it
        CHECK(p.interp(v) <= s2_closed(v) + 1e-12);
    }
    // the tagged evaluator is exact
    CHECK(p.eval(M_PI) == doctest::Approx(M_PI * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("sphere_profile quadrature accuracy and S3 closed form") {
    const Profile p = sphere_profile(3, 601);
    CHECK(p.total_volume ==
          doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-10));
    for (const double r : {0.3, 0.9, 1.4, 2.0, 2.8}) {
        const double v = s3_cap_volume(r);
        CHECK(p.interp(v) == doctest::Approx(s3_cap_area(r)).epsilon(1e-3));
        CHECK(p.eval(v) == doctest::Approx(s3_cap_area(r)).epsilon(1e-10));
    }
    // samples lie on the closed-form cap curve: invert the independent
    // primitive for the radius and compare the stored boundary area
    for (const std::size_t idx : {p.size() / 5, p.size() / 3, p.size() / 2}) {
        double lo = 0.0, hi = M_PI;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (s3_cap_volume(mid) < p.volume[idx] ? lo : hi) = mid;
        }
        CHECK(p.area[idx] ==
              doctest::Approx(s3_cap_area(0.5 * (lo + hi))).epsilon(1e-9));
    }
}

TEST_CASE("sphere_profile rejects bad arguments") {
    CHECK_THROWS_AS(sphere_profile(1, 100), std::invalid_argument);
    CHECK_THROWS_AS(sphere_profile(2, 2), std::invalid_argument);
}

TEST_CASE("scale_profile satisfies the homogeneity identity") {
    const Profile p = sphere_profile(2, 1025);
    const Profile q = scale_profile(p, 2.0);
    CHECK(q.total_volume == doctest::Approx(16.0 * M_PI).epsilon(1e-12));
    // I_new(8pi) = 2 I(2pi) = 4pi and I_new(4pi) = 2 I(pi) = 2 pi sqrt(3)
    CHECK(q.interp(8.0 * M_PI) == doctest::Approx(4.0 * M_PI).epsilon(1e-9));
    CHECK(q.interp(4.0 * M_PI) ==
          doctest::Approx(2.0 * M_PI * std::sqrt(3.0)).epsilon(1e-5));

    // identity scaling returns the same samples
    const Profile id = scale_profile(p, 1.0);
    CHECK(id.volume == p.volume);
    CHECK(id.area == p.area);

    // exact identity at interpolation nodes for random lam
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ul(0.3, 3.0);
    for (int k = 0; k < 100; ++k) {
        const double lam = ul(rng);
        const Profile s = scale_profile(p, lam);
        const double vf = std::pow(lam, p.dim);
        const double af = std::pow(lam, p.dim - 1);
        const std::size_t i = rng() % (p.size() - 2) + 1;
        CHECK(s.interp(vf * p.volume[i]) == af * p.area[i]);
    }

    // scaling round-trip reproduces the samples to 1e-12 relative
    const Profile rt = scale_profile(scale_profile(p, 1.7), 1.0 / 1.7);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(rt.volume[i] == doctest::Approx(p.volume[i]).epsilon(1e-12));
        CHECK(rt.area[i] == doctest::Approx(p.area[i]).epsilon(1e-12));
    }

    CHECK_THROWS_AS(scale_profile(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scale_profile(p, -2.0), std::invalid_argument);
}

TEST_CASE("check_symmetry") {
    CHECK(check_symmetry(sphere_profile(2, 513), 1e-10));
    CHECK(check_symmetry(sphere_profile(3, 514), 1e-8));

    Profile bad = sphere_profile(2, 65);
    bad.area[20] *= 1.0 + 1e-6;  // one perturbed sample
    CHECK_FALSE(check_symmetry(bad, 1e-10));
    CHECK_THROWS_AS(check_symmetry(bad, -1.0), std::invalid_argument);
}

TEST_CASE("kappa0") {
    const Profile p = sphere_profile(2, 1025);
    // I(v)/sqrt(v) = sqrt(4pi - v) is decreasing, so the infimum over
    // (0, v0] sits at v0; at v0 = 2pi that is sqrt(2pi)
    CHECK(kappa0(p, 2.0 * M_PI) ==
          doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-9));
    // nonincreasing in v0, positive throughout
    double prev = 1e300;
    for (const double f : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double k = kappa0(p, f * p.total_volume);
        CHECK(k > 0.0);
        CHECK(k <= prev + 1e-12);
        prev = k;
    }
    CHECK_THROWS_AS(kappa0(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kappa0(p, p.total_volume), std::invalid_argument);
}

TEST_CASE("cheeger_a0 and ratio monotonicity") {
    const Profile p = sphere_profile(2, 1025);
    CHECK(cheeger_a0(p, 2.0 * M_PI) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(cheeger_a0(p, M_PI) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    // smaller w0 gives a larger constant
    CHECK(cheeger_a0(p, M_PI) > cheeger_a0(p, 2.0 * M_PI));
    // v -> I(v)/v nonincreasing across the sample grid
    for (std::size_t i = 1; i + 2 < p.size(); ++i) {
        const double r0 = p.area[i] / p.volume[i];
        const double r1 = p.area[i + 1] / p.volume[i + 1];
        CHECK(r1 <= r0 * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(cheeger_a0(p, -1.0), std::invalid_argument);
}

TEST_CASE("chord_slope") {
    const Profile p = sphere_profile(2, 1025);
    const double vn = p.total_volume;
    CHECK(chord_slope(p, 0.8 * vn) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(chord_slope(p, 0.2 * vn) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(chord_slope(p, 0.5 * vn) == doctest::Approx(1.0).epsilon(1e-10));
    // I(t) >= kappa t for all sampled t <= y
    const double y = 0.8 * vn;
    const double kappa = chord_slope(p, y);
    for (std::size_t i = 1; i < p.size() && p.volume[i] <= y; ++i)
        CHECK(p.area[i] >= kappa * p.volume[i] - 1e-10);
    CHECK_THROWS_AS(chord_slope(p, vn), std::invalid_argument);
}

TEST_CASE("profile JSON round trip and validation") {
    const Profile p = sphere_profile(2, 129);
    const Profile q = profile_from_json(profile_to_json(p));
    CHECK(q.dim == p.dim);
    CHECK(q.total_volume == p.total_volume);
    CHECK(q.volume == p.volume);
    CHECK(q.area == p.area);
    CHECK(q.closed_form_tag == p.closed_form_tag);

    // non-concave tables are rejected, not repaired
    const char* bad =
        R"({"dim":2,"total_volume":4.0,"samples":[[0,0],[1,1],[2,0.5],[3,1],[4,0]]})";
    CHECK_THROWS_AS(profile_from_json(bad), std::invalid_argument);

    const char* negative =
        R"({"dim":2,"total_volume":4.0,"samples":[[0,0],[2,-1],[4,0]]})";
    CHECK_THROWS_AS(profile_from_json(negative), std::invalid_argument);

    CHECK_THROWS(profile_from_json("not json"));
}
