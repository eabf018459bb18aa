#include "trigcert/rational.hpp"

#include "trigcert/errors.hpp"

#include <cctype>
#include <cmath>

namespace trigcert {

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw DomainError("BigRational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational::BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

BigRational BigRational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigRational num = parse(text.substr(0, slash));
        const BigRational den = parse(text.substr(slash + 1));
        if (den.is_zero()) {
            throw DomainError("BigRational: zero denominator in '" + text + "'");
        }
        return num / den;
    }

    // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        digits += text[i];
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            --scale;
            seen_digit = true;
        }
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        const std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            ++i;
        }
        const std::size_t digits_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (digits_start == i) {
            throw UsageError("BigRational: bad exponent in '" + text + "'");
        }
        scale += std::stol(text.substr(start, i - start));
    }
    if (!seen_digit || i != text.size()) {
        throw UsageError("BigRational: cannot parse '" + text + "'");
    }

    mpz_class mantissa(digits, 10);
    if (negative) {
        mantissa = -mantissa;
    }
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    return scale < 0 ? BigRational(mantissa, ten_pow) : BigRational(mpz_class(mantissa * ten_pow));
}

BigRational BigRational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw DomainError("BigRational: non-finite double");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return BigRational(q);
}

BigRational BigRational::inverse() const
{
    if (is_zero()) {
        throw DomainError("BigRational: inverse of zero");
    }
    return BigRational(mpq_class(1) / q_);
}

BigRational& BigRational::operator/=(const BigRational& o)
{
    if (o.is_zero()) {
        throw DomainError("BigRational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

mpz_class pow2(unsigned long k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace trigcert
