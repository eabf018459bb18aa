#pragma once

// Closed, bounded intervals with outward rounding, templated on the endpoint
// type. `Interval` (double endpoints) is the working tier; `MpInterval`
// (MPFR endpoints) is the extended-precision fallback tier.

#include "trigcert/errors.hpp"
#include "trigcert/rational.hpp"
#include "trigcert/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace trigcert {

template <class Real>
class BasicInterval {
public:
    using real_type = Real;
    using traits = RoundingTraits<Real>;

    BasicInterval() : lo_(traits::zero()), hi_(traits::zero()) {}
    BasicInterval(double point) : lo_(traits::from_double(point)), hi_(traits::from_double(point)) // NOLINT
    {
        check();
    }
    BasicInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) { check(); }

    template <class R = Real, class = std::enable_if_t<!std::is_same_v<R, double>>>
    BasicInterval(const Real& point) : lo_(point), hi_(point) // NOLINT
    {
        check();
    }

    /// Enclosure of an exact rational.
    static BasicInterval from_rational(const BigRational& q)
    {
        return BasicInterval(traits::from_rational(q, Rounding::down), traits::from_rational(q, Rounding::up));
    }
    /// Enclosure of a decimal or "a/b" literal.
    static BasicInterval from_string(const std::string& text) { return from_rational(BigRational::parse(text)); }

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }

    Real width() const { return traits::sub(hi_, lo_, Rounding::up); }
    Real mid() const { return traits::midpoint(lo_, hi_); }
    Real mag() const
    {
        const Real a = lo_ < traits::zero() ? traits::negate(lo_) : lo_;
        const Real b = hi_ < traits::zero() ? traits::negate(hi_) : hi_;
        return a < b ? b : a;
    }
    /// Smallest absolute value over the interval.
    Real mig() const
    {
        if (contains(traits::zero())) {
            return traits::zero();
        }
        return lo_ > traits::zero() ? lo_ : traits::negate(hi_);
    }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const BasicInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return contains(traits::zero()); }
    bool positive() const { return lo_ > traits::zero(); }
    bool negative() const { return hi_ < traits::zero(); }
    bool nonnegative() const { return lo_ >= traits::zero(); }
    /// +1 / -1 when the sign is certain and nonzero, 0 otherwise.
    int certain_sign() const { return positive() ? 1 : (negative() ? -1 : 0); }

    BasicInterval operator-() const { return BasicInterval(traits::negate(hi_), traits::negate(lo_)); }

    BasicInterval& operator+=(const BasicInterval& o) { return *this = *this + o; }
    BasicInterval& operator-=(const BasicInterval& o) { return *this = *this - o; }
    BasicInterval& operator*=(const BasicInterval& o) { return *this = *this * o; }
    BasicInterval& operator/=(const BasicInterval& o) { return *this = *this / o; }

    friend BasicInterval operator+(const BasicInterval& a, const BasicInterval& b)
    {
        return BasicInterval(traits::add(a.lo_, b.lo_, Rounding::down), traits::add(a.hi_, b.hi_, Rounding::up));
    }
    friend BasicInterval operator-(const BasicInterval& a, const BasicInterval& b)
    {
        return BasicInterval(traits::sub(a.lo_, b.hi_, Rounding::down), traits::sub(a.hi_, b.lo_, Rounding::up));
    }
    friend BasicInterval operator*(const BasicInterval& a, const BasicInterval& b)
    {
        const Real* ends_a[2] = {&a.lo_, &a.hi_};
        const Real* ends_b[2] = {&b.lo_, &b.hi_};
        Real lo = traits::mul(a.lo_, b.lo_, Rounding::down);
        Real hi = traits::mul(a.lo_, b.lo_, Rounding::up);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Real l = traits::mul(*ends_a[i], *ends_b[j], Rounding::down);
                Real h = traits::mul(*ends_a[i], *ends_b[j], Rounding::up);
                if (l < lo) {
                    lo = std::move(l);
                }
                if (h > hi) {
                    hi = std::move(h);
                }
            }
        }
        return BasicInterval(std::move(lo), std::move(hi));
    }
    friend BasicInterval operator/(const BasicInterval& a, const BasicInterval& b)
    {
        if (b.contains_zero()) {
            throw DomainError("interval division: denominator " + b.str() + " contains zero");
        }
        const Real* ends_a[2] = {&a.lo_, &a.hi_};
        const Real* ends_b[2] = {&b.lo_, &b.hi_};
        Real lo = traits::div(a.lo_, b.lo_, Rounding::down);
        Real hi = traits::div(a.lo_, b.lo_, Rounding::up);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Real l = traits::div(*ends_a[i], *ends_b[j], Rounding::down);
                Real h = traits::div(*ends_a[i], *ends_b[j], Rounding::up);
                if (l < lo) {
                    lo = std::move(l);
                }
                if (h > hi) {
                    hi = std::move(h);
                }
            }
        }
        return BasicInterval(std::move(lo), std::move(hi));
    }

    friend bool operator==(const BasicInterval& a, const BasicInterval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
    friend bool operator!=(const BasicInterval& a, const BasicInterval& b) { return !(a == b); }

    std::string str(int digits = 17) const
    {
        std::ostringstream os;
        os << '[' << render(lo_, digits, Rounding::down) << ", " << render(hi_, digits, Rounding::up) << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicInterval& x) { return os << x.str(); }

private:
    static std::string render(const Real& v, int digits, Rounding r)
    {
        if constexpr (std::is_same_v<Real, double>) {
            return MpReal(v).to_string(digits, r == Rounding::down ? MPFR_RNDD : MPFR_RNDU);
        } else {
            return v.to_string(digits, r == Rounding::down ? MPFR_RNDD : MPFR_RNDU);
        }
    }

    void check() const
    {
        if (!traits::is_finite(lo_) || !traits::is_finite(hi_)) {
            throw DomainError("interval: non-finite endpoint");
        }
        if (hi_ < lo_) {
            throw DomainError("interval: lower endpoint exceeds upper endpoint");
        }
    }

    Real lo_;
    Real hi_;
};

using Interval = BasicInterval<double>;
using MpInterval = BasicInterval<MpReal>;

// ---------------------------------------------------------------------------
// Set operations and predicates

template <class R>
BasicInterval<R> hull(const BasicInterval<R>& a, const BasicInterval<R>& b)
{
    return BasicInterval<R>(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() < b.hi() ? b.hi() : a.hi());
}

template <class R>
std::optional<BasicInterval<R>> intersect(const BasicInterval<R>& a, const BasicInterval<R>& b)
{
    const R& lo = a.lo() < b.lo() ? b.lo() : a.lo();
    const R& hi = a.hi() < b.hi() ? a.hi() : b.hi();
    if (hi < lo) {
        return std::nullopt;
    }
    return BasicInterval<R>(lo, hi);
}

template <class R>
bool overlaps(const BasicInterval<R>& a, const BasicInterval<R>& b)
{
    return !(a.hi() < b.lo() || b.hi() < a.lo());
}

/// a < b holds for every pair of points.
template <class R>
bool certainly_less(const BasicInterval<R>& a, const BasicInterval<R>& b)
{
    return a.hi() < b.lo();
}

template <class R>
double width_as_double(const BasicInterval<R>& x)
{
    return RoundingTraits<R>::to_double(x.width(), Rounding::up);
}

/// Outward conversion of any tier to the double tier.
template <class R>
Interval to_double_interval(const BasicInterval<R>& x)
{
    return Interval(RoundingTraits<R>::to_double(x.lo(), Rounding::down),
                    RoundingTraits<R>::to_double(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> from_double_interval(const Interval& x)
{
    return BasicInterval<R>(RoundingTraits<R>::from_double(x.lo()), RoundingTraits<R>::from_double(x.hi()));
}

template <class R>
BasicInterval<R> pi_interval()
{
    using T = RoundingTraits<R>;
    return BasicInterval<R>(T::pi(Rounding::down), T::pi(Rounding::up));
}

/// Symmetric interval [-r, r].
template <class R>
BasicInterval<R> symmetric(const R& radius)
{
    return BasicInterval<R>(RoundingTraits<R>::negate(radius), radius);
}

// ---------------------------------------------------------------------------
// Elementary functions

namespace detail {

template <class R>
std::string endpoint_text(const R& v)
{
    return BasicInterval<R>(v).str();
}

// Integers n with n in hull(X / pi - shift), as doubles [first, last];
// first > last means no critical point can lie in X.
template <class R>
std::pair<double, double> critical_indices(const BasicInterval<R>& x, double shift)
{
    const BasicInterval<R> k = x / pi_interval<R>() - BasicInterval<R>(shift);
    const double lo = RoundingTraits<R>::to_double(k.lo(), Rounding::down);
    const double hi = RoundingTraits<R>::to_double(k.hi(), Rounding::up);
    return {std::ceil(lo), std::floor(hi)};
}

// cos-like range: extremes at integer indices; even index -> value +1 when
// `even_is_max`, odd index -> the opposite extreme.
template <class R, class EvalDown, class EvalUp>
BasicInterval<R> periodic_range(const BasicInterval<R>& x, double shift, EvalDown down, EvalUp up)
{
    using T = RoundingTraits<R>;
    const auto [first, last] = critical_indices(x, shift);
    R lo = down(x.lo());
    R hi = up(x.lo());
    {
        R l = down(x.hi());
        R h = up(x.hi());
        if (l < lo) {
            lo = std::move(l);
        }
        if (h > hi) {
            hi = std::move(h);
        }
    }
    if (first <= last) {
        const bool has_even = (last - first >= 1.0) || std::fmod(std::abs(first), 2.0) == 0.0;
        const bool has_odd = (last - first >= 1.0) || std::fmod(std::abs(first), 2.0) == 1.0;
        if (has_even) {
            hi = T::from_double(1.0);
        }
        if (has_odd) {
            lo = T::from_double(-1.0);
        }
    }
    return BasicInterval<R>(std::move(lo), std::move(hi));
}

} // namespace detail

template <class R>
BasicInterval<R> sqr(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    if (x.nonnegative()) {
        return BasicInterval<R>(T::mul(x.lo(), x.lo(), Rounding::down), T::mul(x.hi(), x.hi(), Rounding::up));
    }
    if (x.negative()) {
        return BasicInterval<R>(T::mul(x.hi(), x.hi(), Rounding::down), T::mul(x.lo(), x.lo(), Rounding::up));
    }
    const R m = x.mag();
    return BasicInterval<R>(T::zero(), T::mul(m, m, Rounding::up));
}

template <class R>
BasicInterval<R> exp(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    return BasicInterval<R>(T::exp(x.lo(), Rounding::down), T::exp(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> log(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    if (!x.positive()) {
        throw DomainError("log: argument " + x.str() + " is not positive (endpoint " +
                          detail::endpoint_text(x.lo()) + ")");
    }
    return BasicInterval<R>(T::log(x.lo(), Rounding::down), T::log(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> sqrt(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    if (x.lo() < T::zero()) {
        throw DomainError("sqrt: argument " + x.str() + " has negative endpoint " + detail::endpoint_text(x.lo()));
    }
    return BasicInterval<R>(T::sqrt(x.lo(), Rounding::down), T::sqrt(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> cos(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    return detail::periodic_range(
        x, 0.0, [](const R& v) { return T::cos(v, Rounding::down); }, [](const R& v) { return T::cos(v, Rounding::up); });
}

template <class R>
BasicInterval<R> sin(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    return detail::periodic_range(
        x, 0.5, [](const R& v) { return T::sin(v, Rounding::down); }, [](const R& v) { return T::sin(v, Rounding::up); });
}

template <class R>
BasicInterval<R> tan(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    const auto [first, last] = detail::critical_indices(x, 0.5);
    if (first <= last) {
        throw DomainError("tan: argument " + x.str() + " may contain an odd multiple of pi/2");
    }
    return BasicInterval<R>(T::tan(x.lo(), Rounding::down), T::tan(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> cot(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    const auto [first, last] = detail::critical_indices(x, 0.0);
    if (first <= last) {
        throw DomainError("cot: argument " + x.str() + " may contain a multiple of pi");
    }
    return BasicInterval<R>(T::cot(x.hi(), Rounding::down), T::cot(x.lo(), Rounding::up));
}

template <class R>
BasicInterval<R> atan(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    return BasicInterval<R>(T::atan(x.lo(), Rounding::down), T::atan(x.hi(), Rounding::up));
}

template <class R>
BasicInterval<R> acos(const BasicInterval<R>& x)
{
    using T = RoundingTraits<R>;
    if (x.lo() < T::from_double(-1.0) || x.hi() > T::from_double(1.0)) {
        throw DomainError("acos: argument " + x.str() + " leaves [-1, 1]");
    }
    return BasicInterval<R>(T::acos(x.hi(), Rounding::down), T::acos(x.lo(), Rounding::up));
}

/// Integer power with sign-aware tightness.
template <class R>
BasicInterval<R> pow(const BasicInterval<R>& x, long n)
{
    using T = RoundingTraits<R>;
    if (n < 0) {
        return BasicInterval<R>(1.0) / pow(x, -n);
    }
    if (n == 0) {
        return BasicInterval<R>(1.0);
    }
    auto power = [n](R base, Rounding r) {
        R acc = T::from_double(1.0);
        for (long i = 0; i < n; ++i) {
            acc = T::mul(acc, base, r);
        }
        return acc;
    };
    if (x.nonnegative()) {
        return BasicInterval<R>(power(x.lo(), Rounding::down), power(x.hi(), Rounding::up));
    }
    if (n % 2 == 0) {
        if (x.negative()) {
            const auto m = -x;
            return BasicInterval<R>(power(m.lo(), Rounding::down), power(m.hi(), Rounding::up));
        }
        return BasicInterval<R>(T::zero(), power(x.mag(), Rounding::up));
    }
    // Odd power is increasing everywhere.
    const auto lo_abs = T::negate(x.lo());
    const R lo = T::negate(power(lo_abs, Rounding::up));
    const R hi = x.hi() < T::zero() ? T::negate(power(T::negate(x.hi()), Rounding::down))
                                    : power(x.hi(), Rounding::up);
    return BasicInterval<R>(lo, hi);
}

/// x^y for a positive base and real exponent interval.
template <class R>
BasicInterval<R> pow(const BasicInterval<R>& x, const BasicInterval<R>& y)
{
    if (!x.positive()) {
        throw DomainError("pow: base " + x.str() + " is not positive");
    }
    return exp(y * log(x));
}

/// x^q for an exact rational exponent.
template <class R>
BasicInterval<R> pow_rational(const BasicInterval<R>& x, const BigRational& q)
{
    using T = RoundingTraits<R>;
    if (q.is_integer()) {
        return pow(x, q.numerator().get_si());
    }
    if (x.lo() < T::zero()) {
        throw DomainError("pow_rational: negative base " + x.str() + " with non-integer exponent " + q.to_string());
    }
    const auto qi = BasicInterval<R>::from_rational(q);
    if (x.lo() == T::zero()) {
        if (q.sign() < 0) {
            throw DomainError("pow_rational: zero base with negative exponent " + q.to_string());
        }
        if (x.hi() == T::zero()) {
            return BasicInterval<R>(0.0);
        }
        const auto top = exp(qi * log(BasicInterval<R>(x.hi())));
        return BasicInterval<R>(T::zero(), top.hi());
    }
    return exp(qi * log(x));
}

} // namespace trigcert
