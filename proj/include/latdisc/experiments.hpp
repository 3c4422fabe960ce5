#pragma once

// Discrepancy experiments: assembles Delta(t) = A(t) - M(t), estimates
// integral_0^T Delta^2 dt by a composite midpoint rule on the half-odd
// rational grid t_k = (2k+1)/(2 density) (midpoints of a uniform lattice
// avoid systematic alignment with the jump set of A), fits log-log growth
// exponents over dyadic T, and runs the pointwise-bound check.

#include "latdisc/bigmath.hpp"
#include "latdisc/exact_count.hpp"
#include "latdisc/main_term.hpp"
#include "latdisc/parallel.hpp"
#include "latdisc/rotation_body.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace latdisc {

struct DiscrepancySample {
    Rational t;
    BigInt A;
    double M     = 0.0;
    double delta = 0.0;  // A - M, exactly as stored
};

inline DiscrepancySample delta_at(const RotationBody& body, const MainTermModel& model,
                                  const Rational& t, unsigned workers = 1) {
    DiscrepancySample s;
    s.t     = t;
    s.A     = count_exact(body, t, workers).A;
    s.M     = main_term_eval(model, to_double(t));
    s.delta = to_double(s.A) - s.M;
    return s;
}

// midpoint-rule estimate of integral_0^T g(t)^2 dt on the half-odd grid;
// exposed generically so synthetic discrepancies can exercise the quadrature
inline double mean_square_of(const std::function<double(const Rational&)>& g, double T,
                             int density, unsigned workers = 1) {
    if (density < 4) throw std::invalid_argument("mean_square: density >= 4 required");
    const auto n = static_cast<std::size_t>(std::llround(std::floor(T * density)));
    std::vector<double> vals(n, 0.0);
    parallel_for(n, workers, [&](std::size_t k) {
        const Rational t(2 * static_cast<std::int64_t>(k) + 1,
                         2 * static_cast<std::int64_t>(density));
        const double d = g(t);
        vals[k] = d * d;
    });
    double acc = 0.0;  // ordered reduction: bit-identical across worker counts
    for (double v : vals) acc += v;
    return acc / density;
}

inline double mean_square(const RotationBody& body, const MainTermModel& model, double T,
                          int density, unsigned workers = 1) {
    return mean_square_of(
        [&](const Rational& t) { return delta_at(body, model, t).delta; }, T, density,
        workers);
}

struct MeanSquareReport {
    std::vector<double> T_grid;     // dyadic, increasing
    std::vector<double> integrals;  // estimates of integral_0^T Delta^2
    double fitted_exponent = 0.0;
    int density            = 8;
    bool with_flat_terms   = true;
};

inline double exponent_fit(const MeanSquareReport& report);

// one sweep over the largest T; dyadic prefixes share the same samples, so
// the integrals are nested (and monotone) by construction
inline MeanSquareReport mean_square_report(const RotationBody& body,
                                           const MainTermModel& model,
                                           const std::vector<double>& T_grid,
                                           int density, unsigned workers = 1) {
    if (density < 4) throw std::invalid_argument("mean_square: density >= 4 required");
    if (T_grid.empty()) throw std::invalid_argument("mean_square_report: empty T grid");
    MeanSquareReport rep;
    rep.T_grid          = T_grid;
    rep.density         = density;
    rep.with_flat_terms = !model.terms.empty();
    const double T_max  = T_grid.back();
    const auto n = static_cast<std::size_t>(std::llround(std::floor(T_max * density)));
    std::vector<double> vals(n, 0.0);
    parallel_for(n, workers, [&](std::size_t k) {
        const Rational t(2 * static_cast<std::int64_t>(k) + 1,
                         2 * static_cast<std::int64_t>(density));
        const double d = delta_at(body, model, t).delta;
        vals[k] = d * d;
    });
    rep.integrals.assign(T_grid.size(), 0.0);
    double acc    = 0.0;
    std::size_t k = 0;
    for (std::size_t gi = 0; gi < T_grid.size(); ++gi) {
        const auto stop = static_cast<std::size_t>(std::llround(std::floor(T_grid[gi] * density)));
        for (; k < stop && k < n; ++k) acc += vals[k];
        rep.integrals[gi] = acc / density;
    }
    rep.fitted_exponent = exponent_fit(rep);
    return rep;
}

// least-squares slope of log I(T) against log T
inline double exponent_fit(const MeanSquareReport& report) {
    if (report.T_grid.size() < 4)
        throw std::invalid_argument("exponent_fit: need >= 4 dyadic T values");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < report.T_grid.size(); ++i) {
        if (report.integrals[i] <= 0.0) continue;  // degenerate point, excluded
        const double x = std::log(report.T_grid[i]);
        const double y = std::log(report.integrals[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("exponent_fit: all points degenerate");
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("exponent_fit: singular fit");
    return (n * sxy - sx * sy) / denom;
}

// max over samples of |Delta(t)| / t^1.6, the normalized pointwise statistic
inline double pointwise_check(const std::vector<DiscrepancySample>& samples) {
    if (samples.empty()) throw std::invalid_argument("pointwise_check: no samples");
    double worst = 0.0;
    for (const auto& s : samples) {
        const double td = to_double(s.t);
        const double v  = std::abs(s.delta) / std::pow(td, 1.6);
        if (v > worst) worst = v;
    }
    return worst;
}

}  // namespace latdisc
