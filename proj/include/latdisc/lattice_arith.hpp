#pragma once

// Two-squares arithmetic.  r(n) counts ordered pairs (m1,m2) in Z^2 with
// m1^2 + m2^2 = n; the summatory function is the circle count
// sum_{k<=K} r(k) = #{(y,z) : y^2 + z^2 <= K}, evaluated exactly via integer
// square roots.  P(X) is the circle remainder, and hardy_truncated() is the
// finite main sum of the truncated Hardy identity
//
//   P(X) = (1/pi) X^(1/4) sum_{n<=Y} r(n) n^(-3/4) cos(2 pi sqrt(nX) - 3pi/4)
//          + (error terms),
//
// whose error envelope is exercised by the test harness rather than assumed.

#include "latdisc/bigmath.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace latdisc {

// r(n) via the divisor form 4*(d_1(n) - d_3(n)): multiplicative over odd
// primes, with p = 1 mod 4 contributing (e+1) and p = 3 mod 4 requiring an
// even exponent.  Trial division; adequate through n ~ 1e8.
inline std::uint64_t r_single(std::uint64_t n) {
    if (n == 0) return 1;
    while ((n & 1) == 0) n >>= 1;
    std::uint64_t count = 4;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (p % 4 == 1) count *= (e + 1);
        else if (e & 1) return 0;
    }
    if (n > 1) {
        if (n % 4 == 1) count *= 2;
        else return 0;
    }
    return count;
}

struct RSieve {
    std::uint64_t limit = 0;                 // values valid for 0..limit
    std::vector<std::uint32_t> values;
};

// Bulk r(0..N) by accumulating over the quarter-disk shells (a,b >= 0 with
// sign multiplicity); O(N) additions, O(N) memory.
inline RSieve sieve_r(std::uint64_t N, std::uint64_t mem_bound = 100'000'000) {
    if (N > mem_bound)
        throw std::length_error("sieve_r: N exceeds configured memory bound");
    RSieve s;
    s.limit = N;
    s.values.assign(static_cast<std::size_t>(N) + 1, 0);
    const std::uint64_t amax = isqrt_u64(N);
    for (std::uint64_t a = 0; a <= amax; ++a) {
        const std::uint64_t a2   = a * a;
        const std::uint64_t bmax = isqrt_u64(N - a2);
        const std::uint32_t wa   = a ? 2 : 1;
        for (std::uint64_t b = 0; b <= bmax; ++b)
            s.values[static_cast<std::size_t>(a2 + b * b)] += wa * (b ? 2 : 1);
    }
    return s;
}

// #{(y,z) in Z^2 : y^2 + z^2 <= K} = sum_{|y|<=sqrt(K)} (2 floor(sqrt(K-y^2)) + 1)
inline std::uint64_t circle_count_exact(std::uint64_t K) {
    const std::uint64_t ymax = isqrt_u64(K);
    std::uint64_t total      = 2 * ymax + 1;  // y = 0 row
    for (std::uint64_t y = 1; y <= ymax; ++y)
        total += 2 * (2 * isqrt_u64(K - y * y) + 1);
    return total;
}

inline BigInt circle_count_exact(const BigInt& K) {
    if (K < 0) throw std::domain_error("circle_count_exact: negative radius^2");
    if (K <= BigInt(UINT64_MAX / 4))
        return BigInt(circle_count_exact(K.template convert_to<std::uint64_t>()));
    using boost::multiprecision::sqrt;
    const BigInt ymax = sqrt(K);
    BigInt total      = 2 * ymax + 1;
    for (BigInt y = 1; y <= ymax; ++y) {
        const BigInt rem = K - y * y;
        total += 2 * (2 * sqrt(rem) + 1);
    }
    return total;
}

// circle remainder P(X) = sum_{k<=X} r(k) - pi X
inline double P_of(double X) {
    if (X < 0) throw std::domain_error("P_of: X must be >= 0");
    const auto K = static_cast<std::uint64_t>(std::floor(X));
    return static_cast<double>(circle_count_exact(K)) - std::numbers::pi * X;
}

// Truncated Hardy main sum through n <= Y (error terms omitted).
inline double hardy_truncated(double X, double Y, const RSieve& sieve) {
    if (X < 0 || Y < 0) throw std::domain_error("hardy_truncated: negative argument");
    const auto nmax = static_cast<std::uint64_t>(std::floor(Y));
    if (nmax > sieve.limit)
        throw std::invalid_argument("hardy_truncated: sieve smaller than Y");
    constexpr double phase = -0.75 * std::numbers::pi;  // -3pi/4
    double sum             = 0.0;
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const auto rn = sieve.values[static_cast<std::size_t>(n)];
        if (!rn) continue;
        const double nn = static_cast<double>(n);
        sum += rn * std::pow(nn, -0.75) *
               std::cos(2.0 * std::numbers::pi * std::sqrt(nn * X) + phase);
    }
    return std::pow(X, 0.25) * sum / std::numbers::pi;
}

}  // namespace latdisc
