#pragma once

// Exact lattice count A_R(t) = #(tR intersect Z^3) for rational t, via the
// slice identity
//
//   A_R(t) = sum_{a1 t <= m <= a2 t}  #{(y,z) : y^2 + z^2 <= t^2 f^2(m/t)}
//
// with the per-slice cap decided in exact integer arithmetic, plus a 3D
// brute-force oracle sharing only the threshold predicate.

#include "latdisc/bigmath.hpp"
#include "latdisc/lattice_arith.hpp"
#include "latdisc/parallel.hpp"
#include "latdisc/rotation_body.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latdisc {

enum class CountMethod { SliceSum, BruteForce3D };

struct CountResult {
    Rational t;
    BigInt A;
    std::int64_t slice_count = 0;  // number of m values visited
    CountMethod method = CountMethod::SliceSum;
};

inline CountResult count_exact(const RotationBody& body, const Rational& t,
                               unsigned workers = 1) {
    if (!(t > 0)) throw std::domain_error("count_exact: t > 0 required");
    const BigInt m_lo = ceil_rat(body.a1() * t);
    const BigInt m_hi = floor_rat(body.a2() * t);
    CountResult res;
    res.t      = t;
    res.method = CountMethod::SliceSum;
    if (m_lo > m_hi) return res;  // cannot happen for t > 0 (origin inside)
    const auto n = static_cast<std::size_t>(
        (m_hi - m_lo + 1).template convert_to<std::int64_t>());
    res.slice_count = static_cast<std::int64_t>(n);
    std::vector<std::uint64_t> per_slice(n, 0);
    parallel_for(n, workers, [&](std::size_t i) {
        const BigInt m = m_lo + static_cast<std::int64_t>(i);
        const BigInt K = body.slice_capacity(t, m);
        if (K <= BigInt(UINT64_MAX / 4))
            per_slice[i] = circle_count_exact(K.template convert_to<std::uint64_t>());
        else
            per_slice[i] = 0;  // handled below on the big path
    });
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (per_slice[i]) {
            total += per_slice[i];
        } else {
            const BigInt m = m_lo + static_cast<std::int64_t>(i);
            total += circle_count_exact(body.slice_capacity(t, m));
        }
    }
    res.A = total;
    return res;
}

// Independent oracle: iterate the full bounding box and test each point with
// the same exact predicate the slice kernel uses.  Counting structure shares
// nothing with circle_count_exact.
inline CountResult count_bruteforce_3d(const RotationBody& body, const Rational& t,
                                       const Rational& bound = Rational(50)) {
    if (!(t > 0)) throw std::domain_error("count_bruteforce_3d: t > 0 required");
    if (t > bound) throw std::domain_error("count_bruteforce_3d: t exceeds oracle bound");
    const BigInt m_lo = ceil_rat(body.a1() * t);
    const BigInt m_hi = floor_rat(body.a2() * t);
    const auto y_box =
        floor_rat(t * body.max_f_exact()).template convert_to<std::int64_t>() + 1;
    CountResult res;
    res.t      = t;
    res.method = CountMethod::BruteForce3D;
    BigInt total = 0;
    for (BigInt m = m_lo; m <= m_hi; ++m) {
        ++res.slice_count;
        for (std::int64_t y = -y_box; y <= y_box; ++y) {
            for (std::int64_t z = -y_box; z <= y_box; ++z) {
                const BigInt k = BigInt(y) * y + BigInt(z) * z;
                if (body.slice_contains(t, m, k)) ++total;
            }
        }
    }
    res.A = total;
    return res;
}

}  // namespace latdisc
