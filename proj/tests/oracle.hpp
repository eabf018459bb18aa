#pragma once

// MPFR reference values at 320 bits, computed straight from mpfr_* calls and
// independent of the interval layer.

#include "trigcert/certifier.hpp"
#include "trigcert/interval.hpp"
#include "trigcert/series.hpp"

#include <mpfr.h>

#include <cmath>
#include <random>
#include <string>

namespace oracle {

constexpr mpfr_prec_t kBits = 320;

class Big {
public:
    Big() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
    explicit Big(double d) { mpfr_init2(v_, kBits); mpfr_set_d(v_, d, MPFR_RNDN); }
    Big(const Big& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big& operator=(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    ~Big() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

enum class Op { add, sub, mul, div, sin, cos, tan, exp, log, sqrt, atan, count };

inline const char* op_name(Op op)
{
    static const char* names[] = {"add", "sub", "mul", "div", "sin", "cos", "tan", "exp", "log", "sqrt", "atan"};
    return names[static_cast<int>(op)];
}

inline Big apply(Op op, double x, double y)
{
    Big r;
    Big a(x);
    Big b(y);
    switch (op) {
    case Op::add: mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::sub: mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::mul: mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::div: mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::sin: mpfr_sin(r.get(), a.get(), MPFR_RNDN); break;
    case Op::cos: mpfr_cos(r.get(), a.get(), MPFR_RNDN); break;
    case Op::tan: mpfr_tan(r.get(), a.get(), MPFR_RNDN); break;
    case Op::exp: mpfr_exp(r.get(), a.get(), MPFR_RNDN); break;
    case Op::log: mpfr_log(r.get(), a.get(), MPFR_RNDN); break;
    case Op::sqrt: mpfr_sqrt(r.get(), a.get(), MPFR_RNDN); break;
    case Op::atan: mpfr_atan(r.get(), a.get(), MPFR_RNDN); break;
    case Op::count: break;
    }
    return r;
}

inline trigcert::Interval apply(Op op, const trigcert::Interval& x, const trigcert::Interval& y)
{
    switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
    case Op::sin: return sin(x);
    case Op::cos: return cos(x);
    case Op::tan: return tan(x);
    case Op::exp: return exp(x);
    case Op::log: return log(x);
    case Op::sqrt: return sqrt(x);
    case Op::atan: return atan(x);
    case Op::count: break;
    }
    return x;
}

inline bool inside(const Big& v, const trigcert::Interval& x)
{
    return mpfr_cmp_d(v.get(), x.lo()) >= 0 && mpfr_cmp_d(v.get(), x.hi()) <= 0;
}

/// Random operand interval for an op, kept inside the op's domain.
inline trigcert::Interval random_operand(Op op, std::mt19937_64& rng, bool second = false)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> scale(-6, 6);
    double lo = 0.0;
    double w = std::ldexp(unit(rng), scale(rng) - 6);
    switch (op) {
    case Op::div:
        if (second) {
            lo = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::ldexp(0.5 + unit(rng), scale(rng));
            if (lo < 0.0) {
                lo -= w; // keep zero out
            }
            return trigcert::Interval(lo, lo + w);
        }
        [[fallthrough]];
    case Op::add:
    case Op::sub:
    case Op::mul: lo = (unit(rng) - 0.5) * std::ldexp(1.0, scale(rng) + 2); break;
    case Op::sin:
    case Op::cos:
    case Op::atan: lo = (unit(rng) - 0.5) * 40.0; break;
    case Op::tan:
        lo = (unit(rng) - 0.5) * 3.0;
        w = std::min(w, 1.5 - std::abs(lo));
        if (w < 0.0) {
            w = 0.0;
        }
        if (lo + w >= 1.5) {
            lo = 1.5 - w - 1e-3;
        }
        break;
    case Op::exp: lo = (unit(rng) - 0.5) * 80.0; break;
    case Op::log:
    case Op::sqrt: lo = std::ldexp(0.5 + unit(rng), scale(rng) * 3); break;
    case Op::count: break;
    }
    return trigcert::Interval(lo, lo + w);
}

inline double random_in(const trigcert::Interval& x, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    if (u < 0.05) {
        return x.lo();
    }
    if (u > 0.95) {
        return x.hi();
    }
    const double v = x.lo() + (x.hi() - x.lo()) * unit(rng);
    return std::min(std::max(v, x.lo()), x.hi());
}

struct FuzzResult {
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::string first_violation;
};

/// Containment fuzzing of the double tier against MPFR.
inline FuzzResult containment_fuzz(std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    FuzzResult out;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(Op::count) - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const Op op = static_cast<Op>(pick(rng));
        const trigcert::Interval X = random_operand(op, rng);
        const trigcert::Interval Y = random_operand(op, rng, true);
        const double x = random_in(X, rng);
        const double y = random_in(Y, rng);
        const trigcert::Interval R = apply(op, X, Y);
        const Big v = apply(op, x, y);
        ++out.samples;
        if (!inside(v, R)) {
            if (out.violations++ == 0) {
                out.first_violation = std::string(op_name(op)) + " X=" + X.str() + " Y=" + Y.str() + " x=" +
                                      std::to_string(x) + " -> " + R.str();
            }
        }
    }
    return out;
}

/// Reference value of the defect series at x.
inline Big series_value(trigcert::SeriesKind kind, double x)
{
    Big r;
    Big a(x);
    Big t;
    switch (kind) {
    case trigcert::SeriesKind::cot_defect:
        mpfr_cot(t.get(), a.get(), MPFR_RNDN);
        mpfr_ui_div(r.get(), 1, a.get(), MPFR_RNDN);
        mpfr_sub(r.get(), r.get(), t.get(), MPFR_RNDN);
        break;
    case trigcert::SeriesKind::tan: mpfr_tan(r.get(), a.get(), MPFR_RNDN); break;
    case trigcert::SeriesKind::csc2_defect:
        mpfr_csc(t.get(), a.get(), MPFR_RNDN);
        mpfr_sqr(t.get(), t.get(), MPFR_RNDN);
        mpfr_sqr(r.get(), a.get(), MPFR_RNDN);
        mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
        mpfr_sub(r.get(), t.get(), r.get(), MPFR_RNDN);
        break;
    }
    return r;
}

/// Tail containment: random (kind, x at 90% of the radius, N).
inline FuzzResult tail_fuzz(std::size_t samples, std::uint64_t seed)
{
    using trigcert::SeriesKind;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind_pick(0, 2);
    std::uniform_int_distribution<unsigned> order(2, 48);
    std::uniform_real_distribution<double> sign(-1.0, 1.0);
    FuzzResult out;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto kind = static_cast<SeriesKind>(kind_pick(rng));
        const double radius = kind == SeriesKind::tan ? M_PI / 2 : M_PI;
        const double x = (sign(rng) < 0 ? -0.9 : 0.9) * radius * (1.0 - 0.05 * std::abs(sign(rng)));
        const unsigned n = order(rng);
        const trigcert::Interval r = trigcert::eval_enclosed(kind, trigcert::Interval(x), n);
        ++out.samples;
        if (!inside(series_value(kind, x), r)) {
            if (out.violations++ == 0) {
                out.first_violation = std::string(trigcert::series_kind_name(kind)) + " x=" + std::to_string(x) +
                                      " N=" + std::to_string(n) + " -> " + r.str();
            }
        }
    }
    return out;
}

} // namespace oracle
