#include "latdisc/polar_geometry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace latdisc;

TEST_CASE("tac-function of the unit ball is the Euclidean norm") {
    const auto sphere = RotationBody::sphere(1);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d(rng), v = d(rng), w = d(rng);
        const double H = tac_H(sphere, u, v, w);
        const double n = std::sqrt(u * u + v * v + w * w);
        CAPTURE(u, v, w);
        REQUIRE(H == Catch::Approx(n).margin(1e-9 * (1.0 + n)));
    }
}

TEST_CASE("axis support values and positive homogeneity") {
    const auto sp = RotationBody::spheroid(2, 1);
    CHECK(tac_H(sp, 1, 0, 0) == Catch::Approx(2.0));        // a2
    CHECK(tac_H(sp, -1, 0, 0) == Catch::Approx(2.0));       // -a1 = |a1|
    CHECK(tac_H(sp, 0, 0, 0) == 0.0);

    const auto sb = RotationBody::superball(4, 1);
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    std::uniform_real_distribution<double> ld(0.1, 7.0);
    for (int i = 0; i < 300; ++i) {
        const double u = d(rng), v = d(rng), w = d(rng), lam = ld(rng);
        REQUIRE(tac_H(sb, lam * u, lam * v, lam * w) ==
                Catch::Approx(lam * tac_H(sb, u, v, w)).epsilon(1e-10).margin(1e-12));
    }
}

TEST_CASE("tac-function is convex (midpoint inequality)") {
    const auto sb = RotationBody::superball(4, 1);
    std::mt19937_64 rng(28);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const double u1 = d(rng), v1 = d(rng), w1 = d(rng);
        const double u2 = d(rng), v2 = d(rng), w2 = d(rng);
        const double mid = tac_H(sb, 0.5 * (u1 + u2), 0.5 * (v1 + v2), 0.5 * (w1 + w2));
        const double avg = 0.5 * (tac_H(sb, u1, v1, w1) + tac_H(sb, u2, v2, w2));
        REQUIRE(mid <= avg + 1e-9);
    }
}

TEST_CASE("polar reciprocity on the self-dual ball") {
    const auto sphere = RotationBody::sphere(1);
    const auto top = polar_profile(sphere, 0.0);
    CHECK(top.u == 0.0);
    CHECK(top.h == Catch::Approx(1.0));

    const auto p = polar_profile(sphere, 1.0 / std::sqrt(2.0));
    CHECK(p.u == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(p.h == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(p.u * p.u + p.h * p.h == Catch::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(polar_profile(sphere, 1.0), std::domain_error);
    CHECK_THROWS_AS(polar_profile(sphere, -1.0), std::domain_error);
}

TEST_CASE("reciprocity residuals vanish along the curve") {
    for (const auto& body : {RotationBody::sphere(1), RotationBody::spheroid(2, 1),
                             RotationBody::superball(4, 1), RotationBody::superball(6, 1)}) {
        const double a1 = to_double(body.a1());
        const double a2 = to_double(body.a2());
        const double inv_a1 = 1.0 / a1, inv_a2 = 1.0 / a2;
        for (int i = 1; i < 1000; ++i) {
            const double x = a1 + (a2 - a1) * i / 1000.0;
            const auto p   = polar_profile(body, x);
            CAPTURE(body.describe(), x);
            REQUIRE(std::abs(p.u * x + p.h * body.f(x) - 1.0) <= 1e-10);
            REQUIRE(std::abs(p.u + p.h * body.df(x)) <= 1e-10 * (1.0 + std::abs(p.u)));
            REQUIRE(p.u > inv_a1);
            REQUIRE(p.u < inv_a2);
            REQUIRE(p.h >= 0.0);
        }
    }
}

TEST_CASE("x -> u is strictly monotone and |h h'| stays bounded") {
    for (const auto& body : {RotationBody::sphere(1), RotationBody::superball(4, 1)}) {
        double prev_u = -1e300;
        // grid pushed geometrically into the flat points
        std::vector<double> xs;
        const double a1 = to_double(body.a1());
        const double a2 = to_double(body.a2());
        for (double s = 1e-2; s >= 1e-6; s /= 10.0) {
            xs.push_back(a1 + s);
            xs.push_back(a2 - s);
        }
        for (int i = 1; i < 200; ++i) xs.push_back(a1 + (a2 - a1) * i / 200.0);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        double worst = 0.0;
        for (double x : xs) {
            const auto p = polar_profile(body, x);
            REQUIRE(p.u > prev_u);
            prev_u = p.u;
            // h'(u) by centered differences on the parametric curve
            const double dx = 1e-7 * (a2 - a1);
            if (x - dx <= a1 || x + dx >= a2) continue;
            const auto pl = polar_profile(body, x - dx);
            const auto pr = polar_profile(body, x + dx);
            if (pr.u == pl.u) continue;
            const double hp = (pr.h - pl.h) / (pr.u - pl.u);
            worst = std::max(worst, std::abs(p.h * hp));
        }
        CAPTURE(body.describe(), worst);
        CHECK(worst < 10.0);
    }
}

TEST_CASE("N(X) matches the closed summation for the ball") {
    const auto sphere = RotationBody::sphere(1);
    // N(X) = sum_{|m|<=X} (floor(X^2 - m^2) + 1)
    auto closed = [](double X) {
        std::int64_t total = 0;
        const auto mmax    = static_cast<std::int64_t>(std::floor(X));
        for (std::int64_t m = -mmax; m <= mmax; ++m)
            total += static_cast<std::int64_t>(std::floor(X * X - static_cast<double>(m * m))) + 1;
        return total;
    };
    CHECK(count_N(sphere, 10.0) == closed(10.0));
    CHECK(count_N(sphere, 10.0) == 1351);
    CHECK(count_N(sphere, 25.0) == closed(25.0));
    CHECK(count_N(sphere, 100.0, 500.0, 2) == closed(100.0));

    CHECK(count_N(sphere, 0.5) == 1);  // only (0,0)
    CHECK_THROWS_AS(count_N(sphere, 600.0), std::domain_error);
}

TEST_CASE("N(X) against a linear-scan oracle on the superball") {
    const auto sb = RotationBody::superball(4, 1);
    const double X = 15.0;
    std::int64_t expected = 0;
    for (std::int64_t m = -16; m <= 16; ++m) {
        for (std::int64_t n = 0; n <= 260; ++n) {
            if (tac_H(sb, static_cast<double>(m), std::sqrt(static_cast<double>(n)), 0.0) <=
                X + 1e-9 * X)
                ++expected;
        }
    }
    CHECK(count_N(sb, X) == expected);
}

TEST_CASE("N(X)/X^3 approaches the h^2-quadrature constant") {
    const auto sphere = RotationBody::sphere(1);
    const double C_s  = polar_volume_constant(sphere);
    CHECK(C_s == Catch::Approx(4.0 / 3.0).epsilon(1e-10));
    for (double X : {100.0, 200.0, 400.0}) {
        const double ratio = static_cast<double>(count_N(sphere, X, 500.0, 2)) / (X * X * X);
        CAPTURE(X, ratio);
        CHECK(std::abs(ratio - C_s) <= 5.0 / X);
    }

    const auto sb  = RotationBody::superball(4, 1);
    const double C = polar_volume_constant(sb);
    for (double X : {100.0, 200.0}) {
        const double ratio = static_cast<double>(count_N(sb, X, 500.0, 2)) / (X * X * X);
        CAPTURE(X, ratio, C);
        CHECK(std::abs(ratio - C) <= 5.0 / X);
    }

    const auto sp   = RotationBody::spheroid(2, 1);
    const double Cp = polar_volume_constant(sp);
    const double X  = 100.0;
    CHECK(std::abs(static_cast<double>(count_N(sp, X, 500.0, 2)) / (X * X * X) - Cp) <=
          5.0 / X);
}
