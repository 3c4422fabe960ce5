#include "latdisc/main_term.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace latdisc;

namespace {

// F(xi, 1) has the closed form -2 pi^3 B_2({xi}), B_2(x) = x^2 - x + 1/6
double F_closed_eta1(double xi) {
    const double frac = xi - std::floor(xi);
    const double b2   = frac * frac - frac + 1.0 / 6.0;
    return -2.0 * std::pow(std::numbers::pi, 3) * b2;
}

}  // namespace

TEST_CASE("F series: periodicity is exact and eta=1 matches the closed form") {
    for (double xi : {0.25, 0.375, 0.4375}) {
        const auto a = F_eval(xi, 0.5, 2000);
        const auto b = F_eval(xi + 1.0, 0.5, 2000);
        CHECK(a.value == b.value);  // bit-for-bit after range reduction
    }

    // xi = 1/4: -2 pi^3 (1/16 - 1/4 + 1/6) = pi^3 / 24
    const auto F14 = F_eval(0.25, 1.0, 100'000);
    CHECK(F_closed_eta1(0.25) == Catch::Approx(std::pow(std::numbers::pi, 3) / 24.0).epsilon(1e-14));
    CHECK(std::abs(F14.value - F_closed_eta1(0.25)) <= F14.tail_bound);

    // xi = 0: -2 pi^3 / 6 = -pi^3 / 3
    const auto F0 = F_eval(0.0, 1.0, 100'000);
    CHECK(std::abs(F0.value - (-std::pow(std::numbers::pi, 3) / 3.0)) <= F0.tail_bound);

    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> xd(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const double xi = xd(rng);
        for (std::int64_t K : {std::int64_t{1000}, std::int64_t{100'000}}) {
            const auto F = F_eval(xi, 1.0, K);
            CAPTURE(xi, K);
            REQUIRE(std::abs(F.value - F_closed_eta1(xi)) <= F.tail_bound);
        }
    }
}

TEST_CASE("F tail bound is sound: doubling K moves the value at most tail(K)") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> xd(0.0, 1.0);
    std::uniform_real_distribution<double> ed(0.05, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double xi  = xd(rng);
        const double eta = ed(rng);
        const auto fk    = F_eval(xi, eta, 500);
        const auto f2k   = F_eval(xi, eta, 1000);
        CAPTURE(xi, eta);
        REQUIRE(std::abs(f2k.value - fk.value) <= fk.tail_bound * (1.0 + 1e-12));
    }
}

TEST_CASE("volumes match the closed forms") {
    CHECK(volume(RotationBody::sphere(1)) ==
          Catch::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-11));
    CHECK(volume(RotationBody::spheroid(2, 1)) ==
          Catch::Approx(8.0 * std::numbers::pi / 3.0).epsilon(1e-11));
    CHECK(volume(RotationBody::sphere(Rational(3, 2))) ==
          Catch::Approx(4.0 * std::numbers::pi / 3.0 * std::pow(1.5, 3)).epsilon(1e-11));

    // superball(4,1): pi/2 * B(1/4, 3/2), via Gamma
    const double beta4 =
        std::tgamma(0.25) * std::tgamma(1.5) / std::tgamma(0.25 + 1.5);
    const double v4 = volume(RotationBody::superball(4, 1));
    CHECK(v4 == Catch::Approx(0.5 * std::numbers::pi * beta4).epsilon(1e-8));
    CHECK(v4 == Catch::Approx(std::numbers::pi * 1.74804).margin(2e-5));

    // superball(6,1): 2 pi * (1/6) B(1/6, 4/3)
    const double beta6 =
        std::tgamma(1.0 / 6.0) * std::tgamma(4.0 / 3.0) / std::tgamma(1.0 / 6.0 + 4.0 / 3.0);
    CHECK(volume(RotationBody::superball(6, 1)) ==
          Catch::Approx(2.0 * std::numbers::pi * beta6 / 6.0).epsilon(1e-8));
}

TEST_CASE("model assembly: term counts and exponents per family") {
    const auto sphere_model = build_model(RotationBody::sphere(1));
    CHECK(sphere_model.terms.empty());

    const auto sb4 = build_model(RotationBody::superball(4, 1));
    REQUIRE(sb4.terms.size() == 4);  // 2 per side, j = 2..3
    // side 1 first: (eta, t_exponent) = (1/2, 3/2), (3/4, 5/4)
    CHECK(sb4.terms[0].eta == Catch::Approx(0.5));
    CHECK(sb4.terms[0].t_exponent == Catch::Approx(1.5));
    CHECK(sb4.terms[1].eta == Catch::Approx(0.75));
    CHECK(sb4.terms[1].t_exponent == Catch::Approx(1.25));
    CHECK(sb4.terms[0].sign == 1);
    CHECK(sb4.terms[2].sign == -1);
    CHECK(sb4.terms[0].xi_factor == 1.0);  // -a1
    CHECK(sb4.terms[2].xi_factor == 1.0);  // +a2
    // j=2 coefficients: +1 on the left, -1 on the right
    CHECK(sb4.terms[0].coefficient == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(sb4.terms[2].coefficient == Catch::Approx(-1.0).epsilon(1e-12));

    const auto sb6 = build_model(RotationBody::superball(6, 1));
    REQUIRE(sb6.terms.size() == 8);  // 4 per side, j = 2..5
    for (int k = 0; k < 4; ++k) {
        CHECK(sb6.terms[static_cast<std::size_t>(k)].eta ==
              Catch::Approx((k + 2) / 6.0));
        CHECK(sb6.terms[static_cast<std::size_t>(k)].eta > 0.0);
        CHECK(sb6.terms[static_cast<std::size_t>(k)].eta < 1.0);
        CHECK(sb6.terms[static_cast<std::size_t>(k)].t_exponent > 1.0);
        CHECK(sb6.terms[static_cast<std::size_t>(k)].t_exponent < 2.0);
    }
}

TEST_CASE("empty oscillating sum: M(t) is vol * t^3 bit-for-bit") {
    const auto body  = RotationBody::spheroid(2, 1);
    const auto model = build_model(body);
    REQUIRE(model.terms.empty());
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> td(0.1, 500.0);
    for (int i = 0; i < 200; ++i) {
        const double t = td(rng);
        REQUIRE(main_term_eval(model, t) == model.volume * (t * t * t));
    }
}

TEST_CASE("M(t)/t^3 approaches the volume along t = 2^k") {
    const auto model = build_model(RotationBody::superball(4, 1), 20'000);
    double prev_gap  = 1e300;
    for (int k = 3; k <= 12; ++k) {
        const double t   = std::pow(2.0, k);
        const double gap = std::abs(main_term_eval(model, t) / (t * t * t) - model.volume);
        CHECK(gap < prev_gap * 1.5);  // allow oscillation, demand overall decay
        prev_gap = std::max(gap, 1e-12);
    }
    const double t = 4096.0;
    CHECK(main_term_eval(model, t) / (t * t * t) ==
          Catch::Approx(model.volume).epsilon(1e-3));
}

TEST_CASE("oscillating part agrees with direct Euler-Maclaurin evaluation") {
    // pi t^2 sum_m f^2(m/t) - vol t^3 equals the model's oscillating part up
    // to the O(t) tail the flat-point terms do not carry
    const auto body  = RotationBody::superball(4, 1);
    const auto model = build_model(body, 2'000'000);
    const double vol = 0.5 * std::numbers::pi * std::tgamma(0.25) * std::tgamma(1.5) /
                       std::tgamma(1.75);
    for (double t : {10.0, 50.0}) {
        double sum = 0.0;
        for (long m = std::lround(-t); m <= std::lround(t); ++m)
            sum += body.f_squared(static_cast<double>(m) / t);
        const double direct = std::numbers::pi * t * t * sum - vol * t * t * t;
        const double osc    = main_term_eval(model, t) - model.volume * (t * t * t);
        CAPTURE(t, direct, osc);
        CHECK(osc == Catch::Approx(direct).epsilon(1e-2));
    }
}

TEST_CASE("j=2 term magnitude envelope scales like t^(2 - 2 alpha)") {
    // side-2 j=2 term of superball(4,1): |d* F(t, 1/2)| t^(3/2); peaks over
    // dyadic windows must fit a log-log slope of 1.5 within 0.05
    std::mt19937_64 rng(77);
    std::vector<double> log_center, log_peak;
    for (int k = 4; k <= 9; ++k) {
        const double lo = std::pow(2.0, k);
        double peak     = 0.0;
        std::uniform_real_distribution<double> td(lo, 2.0 * lo);
        for (int i = 0; i < 400; ++i) {
            const double t = td(rng);
            const auto F   = F_eval(t, 0.5, 4000);
            peak           = std::max(peak, std::abs(-1.0 * F.value) * std::pow(t, 1.5));
        }
        log_center.push_back(std::log(1.5 * lo));
        log_peak.push_back(std::log(peak));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(log_center.size());
    for (std::size_t i = 0; i < log_center.size(); ++i) {
        sx += log_center[i];
        sy += log_peak[i];
        sxx += log_center[i] * log_center[i];
        sxy += log_center[i] * log_peak[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CAPTURE(slope);
    CHECK(std::abs(slope - 1.5) <= 0.05);
}

TEST_CASE("F_eval input validation") {
    CHECK_THROWS_AS(F_eval(0.5, 0.0, 100), std::domain_error);
    CHECK_THROWS_AS(F_eval(0.5, 0.5, 0), std::domain_error);
    CHECK_THROWS_AS(main_term_eval(build_volume_model(RotationBody::sphere(1)), 0.0),
                    std::domain_error);
}
