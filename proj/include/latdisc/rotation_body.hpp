#pragma once

// Bodies of rotation with flat poles.  A body is generated by rotating the
// profile curve y = f(x), a1 <= x <= a2, around the x-axis.  Three closed
// families are supported, chosen so that the slice threshold
//
//     k <= t^2 f^2(m/t)      (t rational, m, k integers)
//
// is decidable in exact integer arithmetic:
//
//   sphere    f(x) = sqrt(R^2 - x^2)            flatness N = 0 at both poles
//   spheroid  f(x) = b sqrt(1 - x^2/a^2)        flatness N = 0
//   superball |x|^p + |y|^p = R^p, p even >= 2  flatness N = p-2, alpha = 1/p
//
// For sphere/spheroid the threshold t^2 f^2(m/t) is itself rational; for the
// superball the comparison reduces to  k^(p/2) * (den)^p <= (R t num)^p - ...
// (see slice_capacity).  A single floating-point misrounding at an integer
// threshold would shift a whole lattice circle in or out of the count, so no
// floating arithmetic participates in these decisions.

#include "latdisc/bigmath.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdisc {

enum class Family { Sphere, Spheroid, Superball };
enum class Side { Left, Right };  // Left: a1 (i=1), Right: a2 (i=2)

class RotationBody {
  public:
    static RotationBody sphere(const Rational& radius) {
        require_positive(radius, "sphere radius");
        RotationBody b;
        b.family_ = Family::Sphere;
        b.radius_ = radius;
        b.a2_     = radius;
        b.a1_     = -radius;
        return b;
    }

    // `axis` is the semi-axis along the rotation (x-) axis, `cross` the
    // transverse semi-axis.
    static RotationBody spheroid(const Rational& axis, const Rational& cross) {
        require_positive(axis, "spheroid semi-axis a");
        require_positive(cross, "spheroid semi-axis b");
        RotationBody b;
        b.family_ = Family::Spheroid;
        b.axis_   = axis;
        b.cross_  = cross;
        b.a2_     = axis;
        b.a1_     = -axis;
        return b;
    }

    static RotationBody superball(int p, const Rational& radius) {
        if (p < 2 || p % 2 != 0)
            throw std::invalid_argument("superball exponent must be an even integer >= 2");
        require_positive(radius, "superball radius");
        RotationBody b;
        b.family_ = Family::Superball;
        b.p_      = p;
        b.radius_ = radius;
        b.a2_     = radius;
        b.a1_     = -radius;
        return b;
    }

    Family family() const { return family_; }
    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    int superball_p() const { return p_; }
    const Rational& radius() const { return radius_; }
    const Rational& spheroid_axis() const { return axis_; }
    const Rational& spheroid_cross() const { return cross_; }

    // vanishing order of the curvature at the pole; alpha = 1/(N+2)
    int flatness_order(Side) const { return family_ == Family::Superball ? p_ - 2 : 0; }
    Rational alpha(Side s) const { return Rational(1, flatness_order(s) + 2); }

    // peak of the profile, attained at x = 0 for all built-in families
    const Rational& max_f_exact() const {
        return family_ == Family::Spheroid ? cross_ : radius_;
    }
    double max_f() const { return to_double(max_f_exact()); }

    std::string describe() const {
        switch (family_) {
            case Family::Sphere: return "sphere(" + rational_str(radius_) + ")";
            case Family::Spheroid:
                return "spheroid(" + rational_str(axis_) + "," + rational_str(cross_) + ")";
            case Family::Superball:
                return "superball(" + std::to_string(p_) + "," + rational_str(radius_) + ")";
        }
        return "?";
    }

    // ---- profile evaluators (floating point, domain [a1, a2]) ----

    double f(double x) const {
        check_domain(x);
        switch (family_) {
            case Family::Sphere: {
                const double r = to_double(radius_);
                return std::sqrt(clamp0(r * r - x * x));
            }
            case Family::Spheroid: {
                const double a = to_double(axis_), b = to_double(cross_);
                return b * std::sqrt(clamp0(1.0 - (x / a) * (x / a)));
            }
            case Family::Superball: {
                const double r = to_double(radius_);
                return std::pow(clamp0(std::pow(r, p_) - std::pow(std::abs(x), p_)),
                                1.0 / p_);
            }
        }
        return 0.0;
    }

    double df(double x) const {
        check_domain(x);
        switch (family_) {
            case Family::Sphere: {
                const double r = to_double(radius_);
                return -x / std::sqrt(clamp0(r * r - x * x));
            }
            case Family::Spheroid: {
                const double a = to_double(axis_), b = to_double(cross_);
                const double q = clamp0(1.0 - (x / a) * (x / a));
                return -(b * x) / (a * a * std::sqrt(q));
            }
            case Family::Superball: {
                const double r = to_double(radius_);
                const double u = clamp0(std::pow(r, p_) - std::pow(std::abs(x), p_));
                const double xp1 =
                    (x >= 0 ? 1.0 : -1.0) * std::pow(std::abs(x), p_ - 1);
                return -xp1 * std::pow(u, 1.0 / p_ - 1.0);
            }
        }
        return 0.0;
    }

    double d2f(double x) const {
        check_domain(x);
        switch (family_) {
            case Family::Sphere: {
                const double r = to_double(radius_);
                return -r * r * std::pow(clamp0(r * r - x * x), -1.5);
            }
            case Family::Spheroid: {
                const double a = to_double(axis_), b = to_double(cross_);
                const double q = clamp0(1.0 - (x / a) * (x / a));
                return -(b / (a * a)) * std::pow(q, -1.5);
            }
            case Family::Superball: {
                // f'' = -(p-1) R^p x^(p-2) (R^p - x^p)^(1/p - 2); vanishes at x = 0
                const double r  = to_double(radius_);
                const double rp = std::pow(r, p_);
                const double u  = clamp0(rp - std::pow(std::abs(x), p_));
                return -(p_ - 1) * rp * std::pow(std::abs(x), p_ - 2) *
                       std::pow(u, 1.0 / p_ - 2.0);
            }
        }
        return 0.0;
    }

    double f_squared(double x) const {
        check_domain(x);
        switch (family_) {
            case Family::Sphere: {
                const double r = to_double(radius_);
                return clamp0(r * r - x * x);
            }
            case Family::Spheroid: {
                const double a = to_double(axis_), b = to_double(cross_);
                return b * b * clamp0(1.0 - (x / a) * (x / a));
            }
            case Family::Superball: {
                const double r = to_double(radius_);
                return std::pow(clamp0(std::pow(r, p_) - std::pow(std::abs(x), p_)),
                                2.0 / p_);
            }
        }
        return 0.0;
    }

    double df_squared(double x) const {
        check_domain(x);
        switch (family_) {
            case Family::Sphere: return -2.0 * x;
            case Family::Spheroid: {
                const double a = to_double(axis_), b = to_double(cross_);
                return -2.0 * b * b * x / (a * a);
            }
            case Family::Superball: {
                const double r   = to_double(radius_);
                const double u   = clamp0(std::pow(r, p_) - std::pow(std::abs(x), p_));
                const double xp1 = (x >= 0 ? 1.0 : -1.0) * std::pow(std::abs(x), p_ - 1);
                return -2.0 * xp1 * std::pow(u, 2.0 / p_ - 1.0);
            }
        }
        return 0.0;
    }

    // ---- exact slice arithmetic ----

    // Exact decision of  k <= t^2 f^2(m/t)  for integers k >= 0.
    bool slice_contains(const Rational& t, const BigInt& m, const BigInt& k) const {
        check_slice_domain(t, m);
        if (k < 0) return true;
        switch (family_) {
            case Family::Sphere:
            case Family::Spheroid:
                return Rational(k) <= rational_threshold(t, m);
            case Family::Superball: {
                BigInt rhs, den_p;
                superball_threshold(t, m, rhs, den_p);
                return ipow(k, static_cast<unsigned>(p_ / 2)) * den_p <= rhs;
            }
        }
        return false;
    }

    // K_max = floor(t^2 f^2(m/t)), the largest k admitted by slice_contains.
    BigInt slice_capacity(const Rational& t, const BigInt& m) const {
        check_slice_domain(t, m);
        switch (family_) {
            case Family::Sphere:
            case Family::Spheroid:
                return floor_rat(rational_threshold(t, m));
            case Family::Superball: {
                // k^(p/2) * den <= rhs  <=>  k^(p/2) <= floor(rhs/den)
                BigInt rhs, den_p;
                superball_threshold(t, m, rhs, den_p);
                BigInt k = iroot(rhs / den_p, static_cast<unsigned>(p_ / 2));
                return k;
            }
        }
        return 0;
    }

  private:
    RotationBody() = default;

    static void require_positive(const Rational& q, const char* what) {
        if (!(q > 0)) throw std::invalid_argument(std::string(what) + " must be positive");
    }

    static double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

    void check_domain(double x) const {
        if (x < to_double(a1_) - 1e-12 || x > to_double(a2_) + 1e-12)
            throw std::domain_error("profile argument outside [a1, a2]");
    }

    void check_slice_domain(const Rational& t, const BigInt& m) const {
        if (!(t > 0)) throw std::domain_error("slice threshold needs t > 0");
        const Rational mm(m);
        if (mm < a1_ * t || mm > a2_ * t)
            throw std::domain_error("slice index m/t outside [a1, a2]");
    }

    // t^2 f^2(m/t) as an exact rational (sphere/spheroid only).
    Rational rational_threshold(const Rational& t, const BigInt& m) const {
        const Rational m2(m * m);
        if (family_ == Family::Sphere) return radius_ * radius_ * t * t - m2;
        // b^2 t^2 - b^2 m^2 / a^2
        return cross_ * cross_ * (t * t - m2 / (axis_ * axis_));
    }

    // Superball:  k <= t^2 (R^p - |m/t|^p)^(2/p)
    //        <=>  k^(p/2) <= (R t)^p - |m|^p
    //        <=>  k^(p/2) * den^p <= num^p - |m|^p den^p,  R t = num/den.
    void superball_threshold(const Rational& t, const BigInt& m, BigInt& rhs,
                             BigInt& den_p) const {
        const Rational rt = radius_ * t;
        const BigInt num  = boost::multiprecision::numerator(rt);
        const BigInt den  = boost::multiprecision::denominator(rt);
        const unsigned p  = static_cast<unsigned>(p_);
        den_p             = ipow(den, p);
        rhs               = ipow(num, p) - ipow(abs(m), p) * den_p;
        if (rhs < 0) rhs = 0;  // guarded by check_slice_domain; exact at poles
    }

    Family family_ = Family::Sphere;
    Rational radius_ = 1;  // sphere/superball
    Rational axis_ = 1, cross_ = 1;  // spheroid
    int p_ = 2;
    Rational a1_ = -1, a2_ = 1;
};

}  // namespace latdisc
