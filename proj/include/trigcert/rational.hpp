#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace trigcert {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value type over GMP's mpq_class.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {} // NOLINT
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& integer) : q_(integer) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class q);

    /// Parse "a", "a/b", or a decimal literal such as "-0.25" or "1e-3" exactly.
    static BigRational parse(const std::string& text);
    /// The exact value of a finite double.
    static BigRational from_double(double value);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    mpq_srcptr get_mpq_t() const { return q_.get_mpq_t(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
    BigRational inverse() const;
    BigRational pow(long exponent) const;

    /// Nearest double (round to nearest); use to_interval for enclosures.
    double to_double() const { return q_.get_d(); }
    std::string to_string() const { return q_.get_str(); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

private:
    mpq_class q_;
};

/// 2^k as an exact integer.
mpz_class pow2(unsigned long k);
/// n! as an exact integer.
mpz_class factorial(unsigned long n);

} // namespace trigcert
