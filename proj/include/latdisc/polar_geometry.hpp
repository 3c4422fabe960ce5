#pragma once

// Support-function geometry.  The tac-function of the body R is
//
//   H(u,v,w) = max_{(x,y,z) in R} (u x + v y + w z),
//
// rotation-invariant in (v,w), so H(u,v,w) = max_x (u x + s f(x)) with
// s = sqrt(v^2 + w^2).  The boundary of the polar body R* over the upper
// (u,v) half-plane is the curve v = h(u), delivered parametrically in x by
//
//   u(x) = f'(x) / (x f'(x) - f(x)),     h(u(x)) = -u(x) / f'(x),
//
// which satisfies u x + h f(x) = 1 and u + h f'(x) = 0.  count_N() is the
// brute-force count of H(m, sqrt(n), 0) <= X used to pin the leading
// constant C = integral of h^2.

#include "latdisc/parallel.hpp"
#include "latdisc/quadrature.hpp"
#include "latdisc/rotation_body.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace latdisc {

// inner maximization by bisection on d/dx (u x + s f(x)) = u + s f'(x),
// which is strictly decreasing from +inf to -inf on (a1, a2)
inline double tac_H(const RotationBody& body, double u, double v, double w) {
    const double a1 = to_double(body.a1());
    const double a2 = to_double(body.a2());
    const double s  = std::hypot(v, w);
    if (s == 0.0) return std::max(u * a1, u * a2);
    double lo = a1, hi = a2;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (a2 - a1); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (u + s * body.df(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    return u * x + s * body.f(x);  // flat near the max: x error enters squared
}

struct PolarCurvePoint {
    double x = 0.0;  // parameter on the primal boundary
    double u = 0.0;
    double h = 0.0;
};

inline PolarCurvePoint polar_profile(const RotationBody& body, double x) {
    const double a1 = to_double(body.a1());
    const double a2 = to_double(body.a2());
    if (!(x > a1 && x < a2))
        throw std::domain_error("polar_profile: x must lie strictly inside (a1, a2)");
    PolarCurvePoint p;
    p.x = x;
    const double fp = body.df(x);
    if (fp == 0.0) {  // critical point maps to the top of the dual curve
        p.u = 0.0;
        p.h = 1.0 / body.f(x);
        return p;
    }
    p.u = fp / (x * fp - body.f(x));
    p.h = -p.u / fp;
    return p;
}

// du/dx = -f f'' / (x f' - f)^2 along the parametric polar curve
inline double polar_du_dx(const RotationBody& body, double x) {
    const double denom = x * body.df(x) - body.f(x);
    return -body.f(x) * body.d2f(x) / (denom * denom);
}

// C = integral of h^2(xi) over [1/a1, 1/a2], evaluated parametrically:
// h^2 u' = -f f'' / (x f' - f)^4
inline double polar_volume_constant(const RotationBody& body) {
    const double a1 = to_double(body.a1());
    const double a2 = to_double(body.a2());
    auto integrand = [&](double x) {
        const double denom = x * body.df(x) - body.f(x);
        const double d2    = denom * denom;
        return -body.f(x) * body.d2f(x) / (d2 * d2);
    };
    return integrate(integrand, a1, a2, 1e-12, 60);
}

// N(X) = #{(m,n) in Z x Z>=0 : H(m, sqrt(n), 0) <= X}.  H is strictly
// increasing in n for fixed m, so each m costs one binary search.  Points
// within ~1e-9 relative of the threshold are counted as inside so that exact
// boundary hits (sphere at integer X) are kept.
inline std::int64_t count_N(const RotationBody& body, double X, double bound = 500.0,
                            unsigned workers = 1) {
    if (!(X > 0.0)) throw std::domain_error("count_N: X > 0 required");
    if (X > bound) throw std::domain_error("count_N: X exceeds configured bound");
    const double a1 = to_double(body.a1());
    const double a2 = to_double(body.a2());
    const double tol = 1e-9 * std::max(1.0, X);
    const auto m_lo = static_cast<std::int64_t>(std::floor(X / a1)) - 1;
    const auto m_hi = static_cast<std::int64_t>(std::ceil(X / a2)) + 1;
    // n <= (X * h_max)^2 with h_max = 1 / f(x_c)
    const double h_max = 1.0 / body.max_f();
    const auto n_cap   = static_cast<std::int64_t>((X * h_max) * (X * h_max)) + 2;
    const auto m_count = static_cast<std::size_t>(m_hi - m_lo + 1);
    std::vector<std::int64_t> per_m(m_count, 0);
    parallel_for(m_count, workers, [&](std::size_t i) {
        const auto m = static_cast<double>(m_lo + static_cast<std::int64_t>(i));
        if (tac_H(body, m, 0.0, 0.0) > X + tol) return;  // even n = 0 outside
        std::int64_t lo = 0, hi = n_cap;  // invariant: lo inside, hi+? outside
        while (tac_H(body, m, std::sqrt(static_cast<double>(hi)), 0.0) <= X + tol)
            hi += n_cap;  // paranoia; n_cap already dominates
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo + 1) / 2;
            if (tac_H(body, m, std::sqrt(static_cast<double>(mid)), 0.0) <= X + tol)
                lo = mid;
            else
                hi = mid - 1;
        }
        per_m[i] = lo + 1;  // n = 0..lo inside
    });
    std::int64_t total = 0;
    for (auto c : per_m) total += c;
    return total;
}

}  // namespace latdisc
