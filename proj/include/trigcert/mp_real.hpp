#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace trigcert {

class BigRational;

/// Owning wrapper around an MPFR number.
///
/// Every MpReal is created at the process-wide default precision unless a
/// precision is given explicitly. Arithmetic is not overloaded on this type:
/// all operations go through RoundingTraits<MpReal> so that the rounding
/// direction is always explicit at the call site.
class MpReal {
public:
    MpReal();
    explicit MpReal(mpfr_prec_t precision);
    MpReal(double value); // NOLINT: exact whenever precision >= 53
    MpReal(const MpReal& other);
    MpReal(MpReal&& other) noexcept;
    MpReal& operator=(const MpReal& other);
    MpReal& operator=(MpReal&& other) noexcept;
    ~MpReal();

    /// Parse a decimal string, rounding in the given direction.
    static MpReal from_string(const std::string& text, mpfr_rnd_t rnd);
    static MpReal from_rational(const BigRational& q, mpfr_rnd_t rnd);

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }
    bool is_nan() const { return mpfr_nan_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Decimal rendering with `digits` significant digits rounded in `rnd`.
    std::string to_string(int digits, mpfr_rnd_t rnd) const;
    /// Fixed-point rendering with `decimals` digits after the point.
    std::string to_fixed(int decimals, mpfr_rnd_t rnd) const;

    static void set_default_precision(mpfr_prec_t bits);
    static mpfr_prec_t default_precision();

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }

    friend MpReal operator-(const MpReal& a);

private:
    mpfr_t value_;
};

} // namespace trigcert
