#include "trigcert/functions.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/taylor.hpp"

#include <cmath>
#include <limits>

namespace trigcert {

namespace {

struct FnEntry {
    FnId id;
    std::string_view name;
    FnDomain domain;
    int parity; // +1 even, -1 odd, 0 neither
};

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kPi = 3.141592653589793;
constexpr double kLarge = 1e6;

constexpr std::array<FnEntry, kAllFunctions.size()> kEntries = {{
    {FnId::sinc, "sinc", {0.0, kLarge, false, false}, 1},
    {FnId::F_p, "F_p", {0.0, kHalfPi, true, true}, 1},
    {FnId::U, "U", {0.0, kHalfPi, false, true}, 1},
    {FnId::V, "V", {0.0, kHalfPi, false, true}, 1},
    {FnId::f_p, "f_p", {0.0, kHalfPi, false, true}, 1},
    {FnId::f_p_prime, "f_p_prime", {0.0, kHalfPi, false, true}, -1},
    {FnId::g, "g", {0.0, kLarge, false, false}, 1},
    {FnId::g_prime, "g_prime", {0.0, kLarge, false, false}, -1},
    {FnId::h, "h", {0.0, kHalfPi, true, true}, 1},
    {FnId::k, "k", {1.0, kLarge, true, false}, 0},
    {FnId::k1, "k1", {1.0, kLarge, true, false}, 0},
    {FnId::cusa, "cusa", {0.0, kLarge, false, false}, 1},
    {FnId::gauss_env, "gauss_env", {0.0, kLarge, false, false}, 1},
    {FnId::pow_env, "pow_env", {0.0, kHalfPi, false, true}, 1},
    {FnId::x_over_sin, "x_over_sin", {0.0, kPi, false, true}, 1},
    {FnId::x2_over_sin2, "x2_over_sin2", {0.0, kPi, false, true}, 1},
    {FnId::sec6_third, "sec6_third", {0.0, 1.5 * kPi, false, true}, 1},
    {FnId::log_sin, "log_sin", {0.0, kPi, true, true}, 0},
    {FnId::log_2sin, "log_2sin", {0.0, kPi, true, true}, 0},
    {FnId::cos_over_poly, "cos_over_poly", {0.0, 1.7320508075688772, false, true}, 1},
    {FnId::one, "one", {0.0, kLarge, false, false}, 1},
    {FnId::sinc_pow, "sinc_pow", {0.0, kPi, false, true}, 1},
}};

const FnEntry& entry(FnId id)
{
    for (const auto& e : kEntries) {
        if (e.id == id) {
            return e;
        }
    }
    throw UsageError("unknown function id");
}

Interval abs_interval(const Interval& x)
{
    if (x.nonnegative()) {
        return x;
    }
    if (x.negative()) {
        return -x;
    }
    return Interval(0.0, x.mag());
}

Scalar square_of(const Scalar& p)
{
    if (const auto sq = p.exact_square()) {
        return Scalar::exact(*sq);
    }
    return Scalar::enclosure(sqr(p.value()), sqr(p.value_mp()));
}

EvenSeries log_cos_r_series(const Params& params)
{
    if (params.p_to_zero) {
        return even_series::monomial_t(BigRational(-1, 6));
    }
    return even_series::log_cos(params.p, params.r_times_p2());
}

} // namespace

std::string_view fn_name(FnId id) { return entry(id).name; }

FnId parse_fn(std::string_view name)
{
    for (const auto& e : kEntries) {
        if (e.name == name) {
            return e.id;
        }
    }
    throw UsageError("unknown function '" + std::string(name) + "'");
}

bool is_known_fn(std::string_view name)
{
    for (const auto& e : kEntries) {
        if (e.name == name) {
            return true;
        }
    }
    return false;
}

FnDomain natural_domain(FnId id) { return entry(id).domain; }

bool is_even(FnId id) { return entry(id).parity == 1; }

bool is_chain_member(FnId id)
{
    switch (id) {
    case FnId::sinc:
    case FnId::pow_env:
    case FnId::gauss_env:
    case FnId::cusa:
    case FnId::cos_over_poly:
    case FnId::one: return true;
    default: return false;
    }
}

EvenSeries log_member_series(FnId id, const Params& params)
{
    switch (id) {
    case FnId::sinc: return even_series::log_sinc();
    case FnId::pow_env: return log_cos_r_series(params);
    case FnId::gauss_env: return even_series::monomial_t(BigRational(-1, 6));
    case FnId::cusa: return even_series::log_cusa();
    case FnId::cos_over_poly:
        return even_series::log_cos(Scalar::exact(BigRational(1)), Scalar::exact(BigRational(1))) -
               even_series::log_one_minus_t_over_3();
    case FnId::one: return EvenSeries();
    default: break;
    }
    throw UsageError("'" + std::string(fn_name(id)) + "' is not a chain member");
}

CatalogFunction::CatalogFunction(FnId id, Params params)
    : id_(id), params_(std::move(params)), pv_(ParamValues<double>::from(params_))
{
    switch (id_) {
    case FnId::sinc:
        form_ = NearZeroForm::value;
        series_ = even_series::sinc();
        break;
    case FnId::F_p:
        if (params_.p_to_zero) {
            throw UsageError("F_p: the p -> 0+ form is not defined");
        }
        form_ = NearZeroForm::ratio;
        series_ = even_series::log_sinc();
        denominator_ = even_series::log_cos(params_.p, square_of(params_.p));
        break;
    case FnId::U:
        form_ = NearZeroForm::value;
        series_ = log_cos_r_series(params_);
        break;
    case FnId::V: {
        if (params_.p_to_zero) {
            throw UsageError("V: the p -> 0+ form is not defined");
        }
        // V = x L' - 2L with L = ln cos(px)
        const EvenSeries l = even_series::log_cos(params_.p, square_of(params_.p));
        form_ = NearZeroForm::value;
        series_ = l.x_ddx() - l.scaled(BigRational(2));
        break;
    }
    case FnId::f_p:
        form_ = NearZeroForm::value;
        series_ = even_series::log_sinc() - log_cos_r_series(params_);
        break;
    case FnId::f_p_prime:
        form_ = NearZeroForm::x_times_s1;
        series_ = (even_series::log_sinc() - log_cos_r_series(params_)).x_ddx();
        break;
    case FnId::h:
        form_ = NearZeroForm::s2;
        series_ = (even_series::log_sinc() - log_cos_r_series(params_)).x_ddx();
        break;
    case FnId::g:
        form_ = NearZeroForm::value;
        series_ = even_series::log_cusa() + even_series::monomial_t(BigRational(1, 6));
        break;
    case FnId::g_prime:
        form_ = NearZeroForm::x_times_s1;
        series_ = (even_series::log_cusa() + even_series::monomial_t(BigRational(1, 6))).x_ddx();
        break;
    case FnId::x_over_sin:
        form_ = NearZeroForm::value;
        series_ = even_series::x_over_sin();
        break;
    case FnId::x2_over_sin2:
        form_ = NearZeroForm::value;
        series_ = even_series::x2_over_sin2();
        break;
    case FnId::log_sin:
        form_ = NearZeroForm::log_x_plus;
        series_ = even_series::log_sinc();
        break;
    case FnId::log_2sin:
        form_ = NearZeroForm::log_x_plus;
        series_ = even_series::log_sinc();
        extra_ = ConstantPool::get(Constant::ln2);
        break;
    case FnId::sinc_pow:
        if (!params_.p_to_zero) {
            form_ = NearZeroForm::exp_of;
            series_ = even_series::log_sinc();
            extra_ = Interval(3.0) * sqr(pv_.p);
        }
        break;
    default: break;
    }
}

Interval CatalogFunction::eval_direct(const Interval& x) const
{
    const Interval naive = expr::eval(id_, x, pv_);
    if (x.is_point()) {
        return naive;
    }
    try {
        const Interval tf =
            taylor_enclose<kTaylorOrder>([&](const auto& xx) { return expr::eval(id_, xx, pv_); }, x);
        if (auto both = intersect(naive, tf)) {
            return *both;
        }
    } catch (const Error&) {
    }
    return naive;
}

Interval CatalogFunction::eval_near_zero(const Interval& x) const
{
    if (x.lo() < 0.0 || x.hi() > kNearZero) {
        throw DomainError("near-zero form needs X inside [0, 1/16], got " + x.str());
    }
    const Interval t = sqr(x);
    switch (form_) {
    case NearZeroForm::none: return eval_direct(x);
    case NearZeroForm::value: return series_->eval(t);
    case NearZeroForm::x_times_s1: return x * series_->eval_scaled(t, 1);
    case NearZeroForm::s2: return series_->eval_scaled(t, 2);
    case NearZeroForm::ratio: return series_->eval_scaled(t, 1) / denominator_->eval_scaled(t, 1);
    case NearZeroForm::log_x_plus: return log(x) + series_->eval(t) + extra_;
    case NearZeroForm::exp_of: return exp(extra_ * series_->eval(t));
    }
    throw UsageError("near-zero: unknown form");
}

Interval CatalogFunction::eval(const Interval& x_in) const
{
    const int parity = entry(id_).parity;
    Interval x = x_in;
    bool negate = false;
    if (x.lo() < 0.0) {
        if (parity == 1) {
            x = abs_interval(x);
        } else if (parity == -1 && x.hi() <= 0.0) {
            x = -x;
            negate = true;
        } else if (parity == -1) {
            const Interval right = eval(Interval(0.0, x.hi()));
            const Interval left = -eval(Interval(0.0, -x.lo()));
            return hull(left, right);
        }
    }
    Interval out;
    if (form_ == NearZeroForm::none || x.lo() >= kNearZero) {
        out = eval_direct(x);
    } else if (x.hi() <= kNearZero) {
        out = eval_near_zero(x);
    } else {
        out = hull(eval_near_zero(Interval(x.lo(), kNearZero)), eval_direct(Interval(kNearZero, x.hi())));
    }
    return negate ? -out : out;
}

MpInterval CatalogFunction::eval_mp(const MpInterval& x_in) const
{
    const int parity = entry(id_).parity;
    MpInterval x = x_in;
    bool negate = false;
    if (x.hi() <= MpReal(0.0) && parity != 0) {
        x = -x;
        negate = parity == -1;
    }
    if (form_ != NearZeroForm::none && !x.positive()) {
        throw DomainError("extended tier: '" + std::string(fn_name(id_)) + "' needs x > 0, got " + x.str());
    }
    const auto pv = ParamValues<MpReal>::from(params_);
    const MpInterval out = expr::eval(id_, x, pv);
    return negate ? -out : out;
}

Interval CatalogFunction::limit_at_zero(unsigned power) const
{
    const Interval zero(0.0);
    auto need_even = [&]() {
        if (power % 2 != 0) {
            throw UsageError("limit: " + std::string(fn_name(id_)) + " / x^" + std::to_string(power) +
                             " has no catalogued limit at 0+");
        }
    };
    switch (form_) {
    case NearZeroForm::none:
        if (id_ == FnId::k || id_ == FnId::k1) {
            break;
        }
        if (power == 0) {
            return eval_direct(zero);
        }
        break;
    case NearZeroForm::value: need_even(); return series_->eval_scaled(zero, power / 2);
    case NearZeroForm::x_times_s1:
        if (power == 0) {
            return zero;
        }
        if (power % 2 == 1) {
            return series_->eval_scaled(zero, (power + 1) / 2);
        }
        break;
    case NearZeroForm::s2: need_even(); return series_->eval_scaled(zero, 2 + power / 2);
    case NearZeroForm::ratio:
        if (power == 0) {
            return series_->eval_scaled(zero, 1) / denominator_->eval_scaled(zero, 1);
        }
        break;
    case NearZeroForm::log_x_plus: break;
    case NearZeroForm::exp_of:
        if (power == 0) {
            return Interval(1.0);
        }
        break;
    }
    throw UsageError("limit: " + std::string(fn_name(id_)) + " / x^" + std::to_string(power) +
                     " has no catalogued limit at 0+");
}

Interval eval_fn(FnId id, const Params& params, const Interval& x) { return CatalogFunction(id, params).eval(x); }

MpInterval eval_fn(FnId id, const Params& params, const MpInterval& x)
{
    return CatalogFunction(id, params).eval_mp(x);
}

Interval limit_value(FnId id, const Params& params, LimitPoint at, unsigned power)
{
    const CatalogFunction fn(id, params);
    if (at == LimitPoint::zero_plus) {
        return fn.limit_at_zero(power);
    }
    if (power != 0) {
        throw UsageError("limit: scaling by x^power is only catalogued at 0+");
    }
    const auto dom = natural_domain(id);
    if (dom.lo > kHalfPi || dom.hi < kHalfPi) {
        throw UsageError("limit: pi/2 is outside the domain of '" + std::string(fn_name(id)) + "'");
    }
    try {
        return fn.eval_direct(ConstantPool::get(Constant::half_pi));
    } catch (const DomainError& e) {
        throw UsageError("limit: '" + std::string(fn_name(id)) + "' has no finite catalogued limit at pi/2-: " +
                         e.what());
    }
}

} // namespace trigcert
