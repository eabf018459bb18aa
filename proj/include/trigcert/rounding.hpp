#pragma once

// Directed-rounding primitives for the two endpoint types.
//
// double: +, -, *, /, sqrt are rounded exactly in the requested direction by
// computing the round-to-nearest result and its exact error term (TwoSum and
// FMA residuals). Transcendentals come from libm and are widened by
// kLibmUlps units in the last place, which covers glibc's documented error
// bounds for these functions on x86_64 and aarch64.
//
// MpReal: every operation is a single MPFR call with MPFR_RNDD / MPFR_RNDU.

#include "trigcert/mp_real.hpp"
#include "trigcert/rational.hpp"

#include <cmath>
#include <limits>

namespace trigcert {

enum class Rounding { down, up };

template <class Real>
struct RoundingTraits;

template <>
struct RoundingTraits<double> {
    static constexpr int kLibmUlps = 2;
    static constexpr double kTiny = 0x1p-960;

    static double step(double x, int ulps, Rounding r)
    {
        const double target = r == Rounding::down ? -std::numeric_limits<double>::infinity()
                                                  : std::numeric_limits<double>::infinity();
        for (int i = 0; i < ulps; ++i) {
            x = std::nextafter(x, target);
        }
        return x;
    }
    static double next(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
    static double prev(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

    // Round `nearest`, whose exact value is nearest + err, in direction r.
    static double fix(double nearest, double err, Rounding r)
    {
        if (r == Rounding::down) {
            return err < 0 ? prev(nearest) : nearest;
        }
        return err > 0 ? next(nearest) : nearest;
    }

    static double add(double a, double b, Rounding r)
    {
        const double s = a + b;
        if (!std::isfinite(s)) {
            return s;
        }
        const double bb = s - a;
        const double err = (a - (s - bb)) + (b - bb);
        return fix(s, err, r);
    }
    static double sub(double a, double b, Rounding r) { return add(a, -b, r); }

    static double mul(double a, double b, Rounding r)
    {
        const double p = a * b;
        if (!std::isfinite(p)) {
            return p;
        }
        if (std::abs(p) < kTiny) {
            if (a == 0.0 || b == 0.0) {
                return p;
            }
            return step(p, 1, r);
        }
        return fix(p, std::fma(a, b, -p), r);
    }

    static double div(double a, double b, Rounding r)
    {
        const double q = a / b;
        if (!std::isfinite(q)) {
            return q;
        }
        if (std::abs(q) < kTiny || std::abs(b) < kTiny) {
            if (a == 0.0) {
                return q;
            }
            return step(q, 1, r);
        }
        // a = q*b + rem exactly; a/b = q + rem/b.
        const double rem = std::fma(-q, b, a);
        const double err = (b > 0) ? rem : -rem;
        return fix(q, err, r);
    }

    static double sqrt(double a, Rounding r)
    {
        const double s = std::sqrt(a);
        if (a == 0.0 || !std::isfinite(s)) {
            return s;
        }
        return fix(s, std::fma(-s, s, a), r);
    }

    static double libm(double value, Rounding r) { return step(value, kLibmUlps, r); }

    static double exp(double a, Rounding r)
    {
        if (a == 0.0) {
            return 1.0;
        }
        const double v = libm(std::exp(a), r);
        return v < 0.0 ? 0.0 : v;
    }
    static double log(double a, Rounding r) { return a == 1.0 ? 0.0 : libm(std::log(a), r); }
    static double sin(double a, Rounding r) { return a == 0.0 ? 0.0 : clamp_unit(libm(std::sin(a), r)); }
    static double cos(double a, Rounding r) { return a == 0.0 ? 1.0 : clamp_unit(libm(std::cos(a), r)); }
    static double tan(double a, Rounding r) { return a == 0.0 ? 0.0 : libm(std::tan(a), r); }
    // cos/sin carries the error of two libm calls and a division.
    static double cot(double a, Rounding r) { return step(std::cos(a) / std::sin(a), 2 * kLibmUlps + 1, r); }
    static double atan(double a, Rounding r) { return a == 0.0 ? 0.0 : libm(std::atan(a), r); }
    static double acos(double a, Rounding r) { return a == 1.0 ? 0.0 : libm(std::acos(a), r); }

    static double clamp_unit(double v) { return v > 1.0 ? 1.0 : (v < -1.0 ? -1.0 : v); }

    static double from_double(double d) { return d; }
    static double to_double(double a, Rounding) { return a; }
    static double from_rational(const BigRational& q, Rounding r)
    {
        const MpReal v = MpReal::from_rational(q, r == Rounding::down ? MPFR_RNDD : MPFR_RNDU);
        return v.to_double(r == Rounding::down ? MPFR_RNDD : MPFR_RNDU);
    }
    static double pi(Rounding r)
    {
        // Correctly rounded neighbours of pi.
        return r == Rounding::down ? 0x1.921fb54442d18p+1 : 0x1.921fb54442d19p+1;
    }
    static double midpoint(double a, double b) { return a + 0.5 * (b - a); }
    static double negate(double a) { return -a; }
    static bool is_finite(double a) { return std::isfinite(a); }
    static int sign(double a) { return (a > 0) - (a < 0); }
    static double zero() { return 0.0; }
};

template <>
struct RoundingTraits<MpReal> {
    static mpfr_rnd_t mode(Rounding r) { return r == Rounding::down ? MPFR_RNDD : MPFR_RNDU; }

    template <class Fn>
    static MpReal unary(Fn fn, const MpReal& a, Rounding r)
    {
        MpReal out;
        fn(out.get(), a.get(), mode(r));
        return out;
    }
    template <class Fn>
    static MpReal binary(Fn fn, const MpReal& a, const MpReal& b, Rounding r)
    {
        MpReal out;
        fn(out.get(), a.get(), b.get(), mode(r));
        return out;
    }

    static MpReal add(const MpReal& a, const MpReal& b, Rounding r) { return binary(mpfr_add, a, b, r); }
    static MpReal sub(const MpReal& a, const MpReal& b, Rounding r) { return binary(mpfr_sub, a, b, r); }
    static MpReal mul(const MpReal& a, const MpReal& b, Rounding r) { return binary(mpfr_mul, a, b, r); }
    static MpReal div(const MpReal& a, const MpReal& b, Rounding r) { return binary(mpfr_div, a, b, r); }
    static MpReal sqrt(const MpReal& a, Rounding r) { return unary(mpfr_sqrt, a, r); }
    static MpReal exp(const MpReal& a, Rounding r) { return unary(mpfr_exp, a, r); }
    static MpReal log(const MpReal& a, Rounding r) { return unary(mpfr_log, a, r); }
    static MpReal sin(const MpReal& a, Rounding r) { return unary(mpfr_sin, a, r); }
    static MpReal cos(const MpReal& a, Rounding r) { return unary(mpfr_cos, a, r); }
    static MpReal tan(const MpReal& a, Rounding r) { return unary(mpfr_tan, a, r); }
    static MpReal cot(const MpReal& a, Rounding r) { return unary(mpfr_cot, a, r); }
    static MpReal atan(const MpReal& a, Rounding r) { return unary(mpfr_atan, a, r); }
    static MpReal acos(const MpReal& a, Rounding r) { return unary(mpfr_acos, a, r); }

    static MpReal from_double(double d) { return MpReal(d); }
    static double to_double(const MpReal& a, Rounding r) { return a.to_double(mode(r)); }
    static MpReal from_rational(const BigRational& q, Rounding r) { return MpReal::from_rational(q, mode(r)); }
    static MpReal pi(Rounding r)
    {
        MpReal out;
        mpfr_const_pi(out.get(), mode(r));
        return out;
    }
    static MpReal midpoint(const MpReal& a, const MpReal& b)
    {
        MpReal out;
        mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
        mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
        if (out < a) {
            return a;
        }
        if (out > b) {
            return b;
        }
        return out;
    }
    static MpReal negate(const MpReal& a) { return -a; }
    static bool is_finite(const MpReal& a) { return a.is_finite(); }
    static int sign(const MpReal& a) { return a.sign(); }
    static MpReal zero() { return MpReal(0.0); }
};

} // namespace trigcert
