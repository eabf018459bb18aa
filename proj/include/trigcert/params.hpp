#pragma once

#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

#include <optional>
#include <string>

namespace trigcert {

/// A real parameter. Known exactly (rational), as the square root of an
/// exact rational, or only through enclosures at the two precision tiers.
class Scalar {
public:
    Scalar() : exact_(BigRational(0)), square_(BigRational(0)), value_(0.0) {}

    static Scalar exact(const BigRational& q);
    /// sqrt(s) for an exact s >= 0.
    static Scalar sqrt_of(const BigRational& s);
    static Scalar enclosure(const Interval& value, std::optional<MpInterval> mp = std::nullopt);

    const std::optional<BigRational>& exact_value() const { return exact_; }
    /// The exact square when known (always known for exact values).
    std::optional<BigRational> exact_square() const;
    bool is_exact() const { return exact_.has_value(); }

    const Interval& value() const { return value_; }
    MpInterval value_mp() const;

    template <class R>
    BasicInterval<R> get() const
    {
        if constexpr (std::is_same_v<R, double>) {
            return value_;
        } else {
            return value_mp();
        }
    }

    /// Human-readable form: the source text when set, otherwise the value.
    std::string text() const;
    void set_text(std::string t) { text_ = std::move(t); }

private:
    std::optional<BigRational> exact_;
    std::optional<BigRational> square_;
    Interval value_;
    std::optional<MpInterval> mp_;
    std::string text_;
};

/// Parameters of a catalog function.
///
///   p       rate parameter of cos(px); `p_to_zero` selects the p -> 0+ limit
///   r       exponent of (cos px)^r; defaults to 1/(3p^2)
///   c, a    right endpoints of the gamma_p(c) constants and of g on [0, a]
struct Params {
    Scalar p = Scalar::exact(BigRational(1));
    bool p_to_zero = false;
    std::optional<Scalar> r;
    std::optional<Scalar> c;
    std::optional<Scalar> a;

    static Params with_p(Scalar p_value)
    {
        Params out;
        out.p = std::move(p_value);
        return out;
    }
    static Params zero_limit()
    {
        Params out;
        out.p_to_zero = true;
        return out;
    }

    /// r * p^2: exactly 1/3 for the default exponent.
    Scalar r_times_p2() const;
    /// The exponent r (1/(3p^2) unless overridden).
    Scalar exponent() const;

    std::string describe() const;
};

/// Parameter values at one precision tier.
template <class R>
struct ParamValues {
    BasicInterval<R> p;
    BasicInterval<R> r;
    BasicInterval<R> rp2;
    bool p_to_zero = false;

    static ParamValues from(const Params& params)
    {
        ParamValues v;
        v.p_to_zero = params.p_to_zero;
        if (params.p_to_zero) {
            v.p = BasicInterval<R>(0.0);
            v.r = BasicInterval<R>(0.0);
            v.rp2 = BasicInterval<R>::from_rational(BigRational(1, 3));
            return v;
        }
        v.p = params.p.template get<R>();
        v.r = params.exponent().template get<R>();
        v.rp2 = params.r_times_p2().template get<R>();
        return v;
    }
};

} // namespace trigcert
