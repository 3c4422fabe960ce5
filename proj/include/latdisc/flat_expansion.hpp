#pragma once

// Boundary series data at the flat poles.
//
// Near a pole a_i the boundary curve satisfies
//
//   x = a_i + c y^(N+2) + sum_{m>=1} c_m y^(N+2+m)          (c != 0)
//
// and inverting gives the profile as a Puiseux series
//
//   f(x) = sum_{j>=1} d_j |x - a_i|^(alpha j),   alpha = 1/(N+2),
//   d_1 = |c|^(-alpha),
//
// together with the derivative-of-square coefficients
//
//   d/dx f^2(x) = sum_{j>=2} d*_j |x - a_i|^(alpha j - 1),
//   d*_2 = 2 alpha d_1^2 (-1)^(i+1).
//
// All built-in families have rational Taylor data, so the reversion runs in
// exact rational arithmetic on the normalized series
//
//   g(y) = y (1 + u(y))^alpha,  u = sum (c_m/c) y^m,   g(G(w)) = w,
//
// and only the final scaling d_j = G_j |c|^(-alpha j) leaves the rationals.
// High-order reversion is numerically delicate; this exactness is what the
// round-trip tests lean on.

#include "latdisc/bigmath.hpp"
#include "latdisc/rotation_body.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latdisc {

namespace series {

// coefficient vectors are dense in the power: v[k] multiplies y^k
using RatSeries = std::vector<Rational>;

inline RatSeries mul(const RatSeries& a, const RatSeries& b, std::size_t order) {
    RatSeries out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// (1 + u)^alpha for a series u with u[0] = 0, via the J.C.P. Miller
// recurrence  n v_n = sum_{k=1..n} (alpha k - (n-k)) u_k v_{n-k}.
inline RatSeries pow_one_plus(const RatSeries& u, const Rational& alpha,
                              std::size_t order) {
    RatSeries v(order + 1, Rational(0));
    v[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational uk = k < u.size() ? u[k] : Rational(0);
            if (uk == 0) continue;
            acc += (alpha * Rational(k) - Rational(n - k)) * uk * v[n - k];
        }
        v[n] = acc / Rational(n);
    }
    return v;
}

// compositional inverse of g(y) = y + g_2 y^2 + ... : returns G with
// g(G(w)) = w + O(w^(order+1)).  Fixed-point iteration y <- w - sum g_k y^k;
// each sweep settles one more order.
inline RatSeries revert(const RatSeries& g, std::size_t order) {
    if (g.size() < 2 || g[1] != 1)
        throw std::invalid_argument("revert: series must start y + O(y^2)");
    RatSeries y(order + 1, Rational(0));
    if (order >= 1) y[1] = 1;
    for (std::size_t sweep = 2; sweep <= order; ++sweep) {
        RatSeries next(order + 1, Rational(0));
        if (order >= 1) next[1] = 1;
        RatSeries ypow = y;  // y^k
        for (std::size_t k = 2; k < g.size() && k <= order; ++k) {
            ypow = mul(ypow, y, order);
            if (g[k] == 0) continue;
            for (std::size_t n = 0; n <= order; ++n) next[n] -= g[k] * ypow[n];
        }
        y = next;
    }
    return y;
}

// substitute y = inner(w) into outer(y), truncated
inline RatSeries compose(const RatSeries& outer, const RatSeries& inner,
                         std::size_t order) {
    RatSeries out(order + 1, Rational(0));
    RatSeries p(order + 1, Rational(0));
    p[0] = 1;
    for (std::size_t k = 0; k < outer.size() && k <= order; ++k) {
        if (outer[k] != 0)
            for (std::size_t n = 0; n <= order; ++n) out[n] += outer[k] * p[n];
        p = mul(p, inner, order);
    }
    return out;
}

// generalized binomial coefficient C(alpha, k), alpha rational
inline Rational binom(const Rational& alpha, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= (alpha - Rational(i)) / Rational(i + 1);
    return r;
}

}  // namespace series

struct BoundarySeries {
    Side side = Side::Right;
    int N = 0;           // flatness order; leading power is y^(N+2)
    Rational c;          // leading coefficient, != 0
    std::vector<Rational> c_m;  // c_m[m-1] multiplies y^(N+2+m), m = 1..M
};

// Taylor data of x - a_i as a series in y, through order N+2+M.  Closed
// binomial forms per family:  x = +-scale * (1 - (y/s)^q)^(1/q).
inline BoundarySeries expand_boundary(const RotationBody& body, Side side, int M) {
    if (M < 0) throw std::invalid_argument("expand_boundary: M >= 0 required");
    Rational scale, s;  // x = sign * scale * (1 - (y/s)^q)^(1/q)
    int q = 2;
    switch (body.family()) {
        case Family::Sphere:
            scale = body.radius();
            s     = body.radius();
            q     = 2;
            break;
        case Family::Spheroid:
            scale = body.spheroid_axis();
            s     = body.spheroid_cross();
            q     = 2;
            break;
        case Family::Superball:
            scale = body.radius();
            s     = body.radius();
            q     = body.superball_p();
            break;
    }
    const int sign = side == Side::Right ? 1 : -1;
    const int N    = body.flatness_order(side);
    const int top  = N + 2 + M;  // highest retained power of y

    // x - a_i = sign * scale * sum_{k>=1} C(1/q, k) (-1)^k (y/s)^(qk)
    BoundarySeries out;
    out.side = side;
    out.N    = N;
    out.c_m.assign(static_cast<std::size_t>(M), Rational(0));
    const Rational alpha_q(1, q);
    Rational spow = s * s;  // s^(qk), start k=1
    for (int i = 2; i < q; ++i) spow *= s;
    Rational sq = spow;
    for (int k = 1; q * k <= top; ++k) {
        const Rational coeff = Rational(sign) * scale * series::binom(alpha_q, k) *
                               Rational(k % 2 ? -1 : 1) / sq;
        const int power = q * k;
        if (power == N + 2) out.c = coeff;
        else out.c_m[static_cast<std::size_t>(power - N - 3)] = coeff;
        sq *= spow;
    }
    if (out.c == 0) throw std::logic_error("expand_boundary: vanishing leading coefficient");
    return out;
}

// exact normalized reversion coefficients G_j with d_j = G_j |c|^(-alpha j)
inline series::RatSeries revert_series_normalized(const BoundarySeries& b, int J) {
    if (J < 1) throw std::invalid_argument("revert_series: J >= 1 required");
    const std::size_t order = static_cast<std::size_t>(J);
    // u(y) = sum (c_m / c) y^m
    series::RatSeries u(order + 1, Rational(0));
    for (std::size_t m = 1; m <= b.c_m.size() && m <= order; ++m)
        u[m] = b.c_m[m - 1] / b.c;
    const Rational alpha(1, b.N + 2);
    series::RatSeries g = series::pow_one_plus(u, alpha, order);
    // g(y) = y * (1+u)^alpha : shift up by one power
    series::RatSeries gy(order + 1, Rational(0));
    for (std::size_t k = 0; k + 1 <= order; ++k) gy[k + 1] = g[k];
    return series::revert(gy, order);
}

inline std::vector<double> revert_series(const Rational& c,
                                         const std::vector<Rational>& c_m, int N,
                                         int J) {
    if (c == 0) throw std::invalid_argument("revert_series: c must be nonzero");
    BoundarySeries b;
    b.N   = N;
    b.c   = c;
    b.c_m = c_m;
    const series::RatSeries G = revert_series_normalized(b, J);
    const double abs_c = std::abs(to_double(c));
    const double alpha = 1.0 / (N + 2);
    std::vector<double> d(static_cast<std::size_t>(J));
    for (int j = 1; j <= J; ++j)
        d[static_cast<std::size_t>(j - 1)] =
            to_double(G[static_cast<std::size_t>(j)]) * std::pow(abs_c, -alpha * j);
    return d;
}

// d*_{j} = (-1)^(i+1) alpha j [w^j](f^2-series),  j = 2..J+1
inline std::vector<double> dstar_series(const std::vector<double>& d, const Rational& alpha,
                                        Side side) {
    if (d.empty() || d[0] == 0.0)
        throw std::invalid_argument("dstar_series: d_1 must be nonzero");
    const int J = static_cast<int>(d.size());
    const double a = to_double(alpha);
    const double sgn = side == Side::Left ? 1.0 : -1.0;  // (-1)^(i+1)
    std::vector<double> dstar(static_cast<std::size_t>(J));
    for (int j = 2; j <= J + 1; ++j) {
        double e = 0.0;  // [w^j] of (sum d_a w^a)^2
        for (int a1 = 1; a1 < j; ++a1) {
            const int a2 = j - a1;
            if (a1 <= J && a2 >= 1 && a2 <= J)
                e += d[static_cast<std::size_t>(a1 - 1)] * d[static_cast<std::size_t>(a2 - 1)];
        }
        dstar[static_cast<std::size_t>(j - 2)] = sgn * a * j * e;
    }
    return dstar;
}

struct FlatPointExpansion {
    Side side = Side::Right;
    int N = 0;
    Rational alpha;              // 1/(N+2)
    Rational c;                  // leading boundary-series coefficient
    std::vector<Rational> c_m;
    std::vector<double> d;       // d[j-1] = d_j, j = 1..J
    std::vector<double> d_star;  // d_star[j-2] = d*_j, j = 2..J+1
    int J = 0;
    series::RatSeries G;         // exact normalized reversion data (tests)
};

inline FlatPointExpansion expand_flat_point(const RotationBody& body, Side side, int J) {
    if (J < 1) throw std::invalid_argument("expand_flat_point: J >= 1 required");
    FlatPointExpansion e;
    e.side  = side;
    e.N     = body.flatness_order(side);
    e.alpha = body.alpha(side);
    // forward series through order N+2+(J-1): enough for d_1..d_J
    BoundarySeries b = expand_boundary(body, side, J - 1);
    e.c   = b.c;
    e.c_m = b.c_m;
    e.J   = J;
    e.G   = revert_series_normalized(b, J);
    e.d   = revert_series(b.c, b.c_m, e.N, J);
    e.d_star = dstar_series(e.d, e.alpha, side);
    return e;
}

// default truncation: one term beyond what the main-term model consumes
inline int default_expansion_order(const RotationBody& body, Side side) {
    return body.flatness_order(side) + 3;
}

}  // namespace latdisc
