#pragma once

#include "trigcert/even_series.hpp"
#include "trigcert/interval.hpp"
#include "trigcert/params.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace trigcert {

enum class FnId {
    sinc,          // sin x / x
    F_p,           // ln(sin x / x) / ln cos px
    U,             // r ln cos px
    V,             // -2 ln cos px - px tan px
    f_p,           // ln(sin x / x) - r ln cos px
    f_p_prime,     // cot x - 1/x + r p tan px
    g,             // ln((2 + cos x)/3) + x^2/6
    g_prime,       // x/3 - sin x / (cos x + 2)
    h,             // f_p'(x) / x^3
    k,             // (3 / (4^x - 1))^(1/(2x - 2))
    k1,            // ln(4^x - 1) - ln 3 - 2 ln 2 (x - 1) 4^x / (4^x - 1)
    cusa,          // (2 + cos x)/3
    gauss_env,     // exp(-x^2/6)
    pow_env,       // (cos px)^r
    x_over_sin,    // x / sin x
    x2_over_sin2,  // x^2 / sin^2 x
    sec6_third,    // cos(x/3)^-6
    log_sin,       // ln sin x
    log_2sin,      // ln(2 sin x)
    cos_over_poly, // cos x / (1 - x^2/3)
    one,           // 1
    sinc_pow,      // (sin x / x)^(3p^2)
};

inline constexpr std::array<FnId, 22> kAllFunctions = {
    FnId::sinc,      FnId::F_p,         FnId::U,          FnId::V,          FnId::f_p,          FnId::f_p_prime,
    FnId::g,         FnId::g_prime,     FnId::h,          FnId::k,          FnId::k1,           FnId::cusa,
    FnId::gauss_env, FnId::pow_env,     FnId::x_over_sin, FnId::x2_over_sin2, FnId::sec6_third, FnId::log_sin,
    FnId::log_2sin,  FnId::cos_over_poly, FnId::one,      FnId::sinc_pow};

std::string_view fn_name(FnId id);
/// Throws UsageError for unknown names.
FnId parse_fn(std::string_view name);
bool is_known_fn(std::string_view name);

struct FnDomain {
    double lo;
    double hi;
    bool open_lo;
    bool open_hi;
};

/// Natural domain for x >= 0 (even functions extend symmetrically).
FnDomain natural_domain(FnId id);
bool is_even(FnId id);

/// Below this, entries with a removable singularity at 0 use series forms.
inline constexpr double kNearZero = 1.0 / 16.0;

namespace expr {

/// Direct formula, valid for x > 0 away from removable singularities.
/// S is an interval type or a jet over one; P holds interval parameters.
template <class S, class R>
S eval(FnId id, const S& x, const ParamValues<R>& pv)
{
    using I = BasicInterval<R>;
    auto c = [](double v) { return S(I(v)); };
    auto par = [](const I& v) { return S(v); };
    auto log_cos_r = [&](const S& xx) {
        if (pv.p_to_zero) {
            return -(xx * xx) / c(6.0);
        }
        return par(pv.r) * log(cos(par(pv.p) * xx));
    };
    auto f_prime = [&](const S& xx) {
        const S defect = cot(xx) - c(1.0) / xx;
        if (pv.p_to_zero) {
            return defect + xx / c(3.0);
        }
        return defect + par(pv.r * pv.p) * tan(par(pv.p) * xx);
    };
    auto four_pow = [&](const S& xx) { return exp(xx * par(log(I(4.0)))); };

    switch (id) {
    case FnId::sinc: return sin(x) / x;
    case FnId::F_p: {
        if (pv.p_to_zero) {
            throw UsageError("F_p: the p -> 0+ form is not defined");
        }
        return log(sin(x) / x) / log(cos(par(pv.p) * x));
    }
    case FnId::U: return log_cos_r(x);
    case FnId::V: {
        const S y = par(pv.p) * x;
        return c(-2.0) * log(cos(y)) - y * tan(y);
    }
    case FnId::f_p: return log(sin(x) / x) - log_cos_r(x);
    case FnId::f_p_prime: return f_prime(x);
    case FnId::g: return log((c(2.0) + cos(x)) / c(3.0)) + x * x / c(6.0);
    case FnId::g_prime: return x / c(3.0) - sin(x) / (cos(x) + c(2.0));
    case FnId::h: return f_prime(x) / (x * x * x);
    case FnId::k: {
        const S q = c(3.0) / (four_pow(x) - c(1.0));
        return exp(log(q) / (c(2.0) * x - c(2.0)));
    }
    case FnId::k1: {
        const S fx = four_pow(x);
        return log(fx - c(1.0)) - par(log(I(3.0))) -
               par(I(2.0) * log(I(2.0))) * (x - c(1.0)) * fx / (fx - c(1.0));
    }
    case FnId::cusa: return (c(2.0) + cos(x)) / c(3.0);
    case FnId::gauss_env: return exp(-(x * x) / c(6.0));
    case FnId::pow_env: return exp(log_cos_r(x));
    case FnId::x_over_sin: return x / sin(x);
    case FnId::x2_over_sin2: {
        const S q = x / sin(x);
        return q * q;
    }
    case FnId::sec6_third: {
        const S cs = cos(x / c(3.0));
        const S c2 = cs * cs;
        return c(1.0) / (c2 * c2 * c2);
    }
    case FnId::log_sin: return log(sin(x));
    case FnId::log_2sin: return log(c(2.0) * sin(x));
    case FnId::cos_over_poly: return cos(x) / (c(1.0) - x * x / c(3.0));
    case FnId::one: return c(1.0);
    case FnId::sinc_pow: {
        if (pv.p_to_zero) {
            return c(1.0);
        }
        return exp(par(I(3.0) * sqr(pv.p)) * log(sin(x) / x));
    }
    }
    throw UsageError("eval: unknown function");
}

/// ln of a chain member: sinc, pow_env, gauss_env, cusa, cos_over_poly, one.
template <class S, class R>
S log_member(FnId id, const S& x, const ParamValues<R>& pv)
{
    using I = BasicInterval<R>;
    auto c = [](double v) { return S(I(v)); };
    switch (id) {
    case FnId::sinc: return log(sin(x) / x);
    case FnId::pow_env:
        if (pv.p_to_zero) {
            return -(x * x) / c(6.0);
        }
        return S(pv.r) * log(cos(S(pv.p) * x));
    case FnId::gauss_env: return -(x * x) / c(6.0);
    case FnId::cusa: return log((c(2.0) + cos(x)) / c(3.0));
    case FnId::cos_over_poly: return log(cos(x)) - log(c(1.0) - x * x / c(3.0));
    case FnId::one: return c(0.0);
    default: break;
    }
    throw UsageError("log_member: unsupported chain member");
}

} // namespace expr

bool is_chain_member(FnId id);

/// Series in t = x^2 of ln(member), for chain members.
EvenSeries log_member_series(FnId id, const Params& params);

/// How the near-zero series of a catalog entry is turned into values.
enum class NearZeroForm {
    none,        // direct formula is fine at 0
    value,       // f = S(t)
    x_times_s1,  // f = x * S(t)/t           (odd derivatives)
    s2,          // f = S(t)/t^2
    ratio,       // f = (S(t)/t) / (D(t)/t)
    log_x_plus,  // f = ln x + S(t) (+ const)
    exp_of,      // f = exp(e * S(t))
};

/// A catalog entry bound to fixed parameters, with its near-zero series
/// precomputed.
class CatalogFunction {
public:
    CatalogFunction(FnId id, Params params);

    FnId id() const { return id_; }
    const Params& params() const { return params_; }
    const ParamValues<double>& values() const { return pv_; }
    NearZeroForm near_zero_form() const { return form_; }
    /// Primary near-zero series (numerator for F_p).
    const std::optional<EvenSeries>& series() const { return series_; }

    /// Enclosure of the range over X (any X inside the natural domain).
    Interval eval(const Interval& x) const;
    /// Direct formula only: naive composition intersected with a Taylor form.
    Interval eval_direct(const Interval& x) const;
    /// Extended tier, direct formula only (X away from 0).
    MpInterval eval_mp(const MpInterval& x) const;
    /// Near-zero series form for X inside [0, kNearZero].
    Interval eval_near_zero(const Interval& x) const;

    /// lim_{x->0+} f(x) / x^power, from the series or the direct formula.
    Interval limit_at_zero(unsigned power = 0) const;

private:
    FnId id_;
    Params params_;
    ParamValues<double> pv_;
    NearZeroForm form_ = NearZeroForm::none;
    std::optional<EvenSeries> series_;
    std::optional<EvenSeries> denominator_;
    Interval extra_ = Interval(0.0);
};

Interval eval_fn(FnId id, const Params& params, const Interval& x);
MpInterval eval_fn(FnId id, const Params& params, const MpInterval& x);

enum class LimitPoint { zero_plus, half_pi_minus };

/// Catalogued endpoint limits. `power` divides by x^power (0+ only), e.g.
/// limit_value(f_p, params, zero_plus, 4) = p^2/36 - 1/180.
Interval limit_value(FnId id, const Params& params, LimitPoint at, unsigned power = 0);

} // namespace trigcert
