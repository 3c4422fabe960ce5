#pragma once

// Exact arithmetic kernel: arbitrary-precision integers/rationals plus the
// integer root helpers every exact-counting routine relies on.  Integer
// square roots are never taken through floating sqrt alone; every fast
// estimate is corrected until the defining inequalities r^2 <= n < (r+1)^2
// hold exactly.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace latdisc {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// ~233 bits of mantissa; used by verification oracles, not by hot loops.
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<70>>;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.template convert_to<double>(); }

inline BigFloat to_bigfloat(const Rational& q) {
    return BigFloat(boost::multiprecision::numerator(q)) /
           BigFloat(boost::multiprecision::denominator(q));
}

inline BigInt floor_rat(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);  // always > 0
    BigInt d   = num / den;
    if (num < 0 && d * den != num) --d;
    return d;
}

inline BigInt ceil_rat(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt d   = num / den;
    if (num > 0 && d * den != num) ++d;
    return d;
}

// floor(sqrt(n)) for machine integers.  Double estimate, then exact fixup.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;                     // r*r > n, without overflow
    while ((r + 1) <= n / (r + 1)) ++r;                 // (r+1)^2 <= n
    return r;
}

// floor(n^(1/k)) for n >= 0, k >= 1.  Bit-length bisection; exact.
inline BigInt iroot(const BigInt& n, unsigned k) {
    if (n < 0) throw std::domain_error("iroot: negative radicand");
    if (k == 0) throw std::domain_error("iroot: zeroth root");
    if (k == 1 || n == 0 || n == 1) return k == 1 ? n : n;
    if (k == 2) return boost::multiprecision::sqrt(n);
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {                                   // invariant: lo^k <= n < (hi+1)^k
        BigInt mid = (lo + hi + 1) >> 1;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline BigInt ipow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

// Canonical "n" or "n/d" rendering, used for exact CSV fields.
inline std::string rational_str(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace latdisc
