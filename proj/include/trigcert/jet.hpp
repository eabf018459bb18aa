#pragma once

// Truncated Taylor jets. A Jet<T, N> holds the normalized Taylor coefficients
// c[k] = f^(k)(x) / k!, k = 0..N, of a function at a point (or, when T is an
// interval type and the seed is an interval X, enclosures of those
// coefficients over every point of X). Arithmetic and elementary functions
// follow the usual recurrences, so any expression template-written against a
// generic scalar can be differentiated by instantiating it with Jet.

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace trigcert {

inline double cot(double x) { return std::cos(x) / std::sin(x); }

template <class T, std::size_t N>
class Jet {
public:
    static constexpr std::size_t order = N;

    Jet() { c_.fill(T(0.0)); }
    Jet(const T& constant) // NOLINT
    {
        c_.fill(T(0.0));
        c_[0] = constant;
    }
    template <class U = T, class = std::enable_if_t<!std::is_same_v<U, double>>>
    Jet(double constant) : Jet(T(constant)) // NOLINT
    {
    }

    /// The independent variable seeded at x: x + h.
    static Jet variable(const T& x)
    {
        Jet j(x);
        if constexpr (N >= 1) {
            j.c_[1] = T(1.0);
        }
        return j;
    }

    T& operator[](std::size_t k) { return c_[k]; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    const T& value() const { return c_[0]; }

    Jet operator-() const
    {
        Jet r;
        for (std::size_t k = 0; k <= N; ++k) {
            r.c_[k] = -c_[k];
        }
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b)
    {
        Jet r;
        for (std::size_t k = 0; k <= N; ++k) {
            r.c_[k] = a.c_[k] + b.c_[k];
        }
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b)
    {
        Jet r;
        for (std::size_t k = 0; k <= N; ++k) {
            r.c_[k] = a.c_[k] - b.c_[k];
        }
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        Jet r;
        for (std::size_t k = 0; k <= N; ++k) {
            T acc = a.c_[0] * b.c_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc = acc + a.c_[j] * b.c_[k - j];
            }
            r.c_[k] = acc;
        }
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b)
    {
        Jet q;
        for (std::size_t k = 0; k <= N; ++k) {
            T acc = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc = acc - b.c_[j] * q.c_[k - j];
            }
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

private:
    std::array<T, N + 1> c_;
};

template <class T, std::size_t N>
Jet<T, N> exp(const Jet<T, N>& a)
{
    using std::exp;
    Jet<T, N> e;
    e[0] = exp(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        T acc(0.0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc = acc + T(static_cast<double>(j)) * a[j] * e[k - j];
        }
        e[k] = acc / T(static_cast<double>(k));
    }
    return e;
}

template <class T, std::size_t N>
Jet<T, N> log(const Jet<T, N>& a)
{
    using std::log;
    Jet<T, N> l;
    l[0] = log(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        T acc(0.0);
        for (std::size_t j = 1; j < k; ++j) {
            acc = acc + T(static_cast<double>(j)) * l[j] * a[k - j];
        }
        l[k] = (a[k] - acc / T(static_cast<double>(k))) / a[0];
    }
    return l;
}

/// sin and cos share one recurrence.
template <class T, std::size_t N>
void sincos(const Jet<T, N>& a, Jet<T, N>& s, Jet<T, N>& c)
{
    using std::cos;
    using std::sin;
    s[0] = sin(a[0]);
    c[0] = cos(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        T ss(0.0);
        T cc(0.0);
        for (std::size_t j = 1; j <= k; ++j) {
            const T ja = T(static_cast<double>(j)) * a[j];
            ss = ss + ja * c[k - j];
            cc = cc + ja * s[k - j];
        }
        s[k] = ss / T(static_cast<double>(k));
        c[k] = -(cc / T(static_cast<double>(k)));
    }
}

template <class T, std::size_t N>
Jet<T, N> sin(const Jet<T, N>& a)
{
    Jet<T, N> s;
    Jet<T, N> c;
    sincos(a, s, c);
    return s;
}

template <class T, std::size_t N>
Jet<T, N> cos(const Jet<T, N>& a)
{
    Jet<T, N> s;
    Jet<T, N> c;
    sincos(a, s, c);
    return c;
}

/// tan via its own range-checked value plus the sin/cos quotient recurrence.
template <class T, std::size_t N>
Jet<T, N> tan(const Jet<T, N>& a)
{
    using std::tan;
    Jet<T, N> s;
    Jet<T, N> c;
    sincos(a, s, c);
    Jet<T, N> t = s / c;
    t[0] = tan(a[0]);
    return t;
}

template <class T, std::size_t N>
Jet<T, N> cot(const Jet<T, N>& a)
{
    Jet<T, N> s;
    Jet<T, N> c;
    sincos(a, s, c);
    Jet<T, N> t = c / s;
    t[0] = cot(a[0]);
    return t;
}

template <class T, std::size_t N>
Jet<T, N> pow(const Jet<T, N>& a, const T& exponent)
{
    return exp(Jet<T, N>(exponent) * log(a));
}

template <class T, std::size_t N>
Jet<T, N> sqrt(const Jet<T, N>& a)
{
    using std::sqrt;
    Jet<T, N> r;
    r[0] = sqrt(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        T acc = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc = acc - r[j] * r[k - j];
        }
        r[k] = acc / (T(2.0) * r[0]);
    }
    return r;
}

} // namespace trigcert
