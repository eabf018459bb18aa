#include "trigcert/even_series.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/series.hpp"

#include <cmath>

namespace trigcert {

namespace {

using T = RoundingTraits<double>;

double upper(const Interval& x) { return x.hi(); }
double lower(const Interval& x) { return x.lo(); }

} // namespace

EvenSeries::EvenSeries(std::size_t order) : coeffs_(order + 1, Coeff{Interval(0.0), BigRational(0)}) {}

void EvenSeries::set(std::size_t k, const BigRational& q) { coeffs_.at(k) = Coeff{Interval::from_rational(q), q}; }

void EvenSeries::set(std::size_t k, const Interval& v) { coeffs_.at(k) = Coeff{v, std::nullopt}; }

EvenSeries& EvenSeries::operator+=(const EvenSeries& o)
{
    if (o.order() != order()) {
        throw UsageError("EvenSeries: order mismatch");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        auto& a = coeffs_[k];
        const auto& b = o.coeffs_[k];
        if (a.exact && b.exact) {
            set(k, *a.exact + *b.exact);
        } else {
            a.value = a.value + b.value;
            a.exact.reset();
        }
    }
    tails_.insert(tails_.end(), o.tails_.begin(), o.tails_.end());
    return *this;
}

EvenSeries EvenSeries::operator-() const { return scaled(BigRational(-1)); }

EvenSeries EvenSeries::scaled(const BigRational& factor) const
{
    EvenSeries out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].exact) {
            out.set(k, *coeffs_[k].exact * factor);
        } else {
            out.set(k, coeffs_[k].value * Interval::from_rational(factor));
        }
    }
    const double f = Interval::from_rational(factor.abs()).hi();
    for (const auto& t : tails_) {
        out.tails_.push_back({T::mul(t.m, f, Rounding::up), t.r});
    }
    return out;
}

EvenSeries EvenSeries::scaled(const Scalar& factor) const
{
    if (factor.is_exact()) {
        return scaled(*factor.exact_value());
    }
    EvenSeries out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.set(k, coeffs_[k].value * factor.value());
    }
    const double f = factor.value().mag();
    for (const auto& t : tails_) {
        out.tails_.push_back({T::mul(t.m, f, Rounding::up), t.r});
    }
    return out;
}

EvenSeries EvenSeries::x_ddx() const
{
    EvenSeries out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigRational two_k(static_cast<long>(2 * k));
        if (coeffs_[k].exact) {
            out.set(k, *coeffs_[k].exact * two_k);
        } else {
            out.set(k, coeffs_[k].value * Interval(static_cast<double>(2 * k)));
        }
    }
    // 2k <= 2^k for k >= 1.
    for (const auto& t : tails_) {
        out.tails_.push_back({t.m, t.r / 2});
    }
    return out;
}

std::optional<std::size_t> EvenSeries::leading_index() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!(coeffs_[k].exact && coeffs_[k].exact->is_zero())) {
            return k;
        }
    }
    return std::nullopt;
}

Interval EvenSeries::eval_scaled(const Interval& t, std::size_t shift) const
{
    if (t.lo() < 0.0) {
        throw DomainError("EvenSeries: negative t " + t.str());
    }
    if (shift > order()) {
        throw PrecisionError("EvenSeries: shift beyond stored order");
    }
    for (std::size_t k = 0; k < shift; ++k) {
        if (!(coeffs_[k].exact && coeffs_[k].exact->is_zero())) {
            throw PrecisionError("EvenSeries: coefficient " + std::to_string(k) +
                                 " is not exactly zero, cannot divide by t^" + std::to_string(shift));
        }
    }
    Interval acc = coeffs_.back().value;
    for (std::size_t k = order(); k-- > shift;) {
        acc = acc * t + coeffs_[k].value;
    }
    // sum_{k>K} |d_k| t^(k-shift) <= sum_j M_j R_j^-shift q^(K+1-shift) / (1-q),  q = t/R_j
    const std::size_t n = order() + 1 - shift;
    double bound = 0.0;
    for (const auto& tail : tails_) {
        const Interval q = Interval(t.hi()) / Interval(tail.r);
        if (!(q.hi() < 1.0)) {
            throw PrecisionError("EvenSeries: t = " + t.str() + " outside tail radius " + Interval(tail.r).str());
        }
        const Interval term = Interval(tail.m) * pow(q, static_cast<long>(n)) /
                              (pow(Interval(tail.r), static_cast<long>(shift)) * (Interval(1.0) - q));
        bound = T::add(bound, term.hi(), Rounding::up);
    }
    return acc + Interval(-bound, bound);
}

Interval EvenSeries::integrate(const Interval& delta) const
{
    if (delta.lo() < 0.0) {
        throw DomainError("EvenSeries::integrate: negative endpoint");
    }
    const Interval t = sqr(delta);
    // sum d_k delta^(2k+1) / (2k+1) by Horner in t
    Interval acc = coeffs_.back().value / Interval(static_cast<double>(2 * order() + 1));
    for (std::size_t k = order(); k-- > 0;) {
        acc = acc * t + coeffs_[k].value / Interval(static_cast<double>(2 * k + 1));
    }
    acc = acc * delta;
    double bound = 0.0;
    for (const auto& tail : tails_) {
        const Interval q = Interval(t.hi()) / Interval(tail.r);
        if (!(q.hi() < 1.0)) {
            throw PrecisionError("EvenSeries::integrate: delta outside tail radius");
        }
        const Interval term = Interval(tail.m) * Interval(delta.hi()) * pow(q, static_cast<long>(order() + 1)) /
                              (Interval(1.0) - q);
        bound = T::add(bound, term.hi(), Rounding::up);
    }
    return acc + Interval(-bound, bound);
}

namespace even_series {

namespace {

const Interval& pi() { return ConstantPool::get(Constant::pi); }

} // namespace

EvenSeries log_sinc(std::size_t order)
{
    EvenSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) {
        s.set(k, -series_coeff(SeriesKind::cot_defect, static_cast<unsigned>(k)) /
                     BigRational(static_cast<long>(2 * k)));
    }
    const Interval pi2 = sqr(pi());
    s.add_tail({upper(pi2 / Interval(6.0)), lower(pi2)});
    return s;
}

EvenSeries log_cos(const Scalar& p, const Scalar& factor, std::size_t order)
{
    // ln cos(px) = -sum c_k p^2k t^k / (2k), c_k = tan coefficients
    EvenSeries s(order);
    const auto p2 = p.exact_square();
    const Interval p2_iv = p2 ? Interval::from_rational(*p2) : sqr(p.value());
    if (p2 && factor.is_exact()) {
        BigRational p_pow(1); // p^(2k-2)
        for (std::size_t k = 1; k <= order; ++k) {
            const BigRational c = series_coeff(SeriesKind::tan, static_cast<unsigned>(k));
            s.set(k, -*factor.exact_value() * c * p_pow / BigRational(static_cast<long>(2 * k)));
            p_pow *= *p2;
        }
    } else {
        Interval p_pow(1.0);
        for (std::size_t k = 1; k <= order; ++k) {
            if (k == 1 && factor.is_exact()) {
                // p^0
                s.set(k, -*factor.exact_value() * series_coeff(SeriesKind::tan, 1) / BigRational(2));
            } else {
                const Interval c = series_coeff_interval(SeriesKind::tan, static_cast<unsigned>(k));
                s.set(k, -(factor.value() * c * p_pow) / Interval(static_cast<double>(2 * k)));
            }
            p_pow = p_pow * p2_iv;
        }
    }
    // |d_k| <= |factor|/p^2 * (pi^2/6) * (4p^2/pi^2)^k
    const Interval pi2 = sqr(pi());
    const Interval m = Interval(factor.value().mag()) / Interval(p2_iv.lo()) * pi2 / Interval(6.0);
    const Interval r = pi2 / (Interval(4.0) * Interval(p2_iv.hi()));
    s.add_tail({upper(m), lower(r)});
    return s;
}

EvenSeries monomial_t(const BigRational& factor, std::size_t order)
{
    EvenSeries s(order);
    s.set(1, factor);
    return s;
}

EvenSeries log_cusa(std::size_t order)
{
    // v = (1 - cos sqrt t) / 3,  ln((2 + cos x)/3) = ln(1 - v) = -sum v^n / n
    std::vector<BigRational> v(order + 1, BigRational(0));
    for (std::size_t j = 1; j <= order; ++j) {
        BigRational term(mpz_class(1), mpz_class(3) * factorial(2 * j));
        v[j] = (j % 2 == 1) ? term : -term;
    }
    std::vector<BigRational> power = v; // v^1
    std::vector<BigRational> total(order + 1, BigRational(0));
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t k = 0; k <= order; ++k) {
            total[k] -= power[k] / BigRational(static_cast<long>(n));
        }
        std::vector<BigRational> next(order + 1, BigRational(0));
        for (std::size_t i = 1; i <= order; ++i) {
            if (power[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 1; i + j <= order; ++j) {
                next[i + j] += power[i] * v[j];
            }
        }
        power = std::move(next);
    }
    EvenSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) {
        s.set(k, total[k]);
    }
    // On |t| <= 1: |v| <= (cosh 1 - 1)/3, so |ln(1 - v)| <= -ln(1 - (cosh 1 - 1)/3).
    const Interval cosh1 = (exp(Interval(1.0)) + exp(Interval(-1.0))) / Interval(2.0);
    const Interval m = -log(Interval(1.0) - (cosh1 - Interval(1.0)) / Interval(3.0));
    s.add_tail({upper(m), 1.0});
    return s;
}

EvenSeries log_one_minus_t_over_3(std::size_t order)
{
    EvenSeries s(order);
    mpz_class three_pow = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        three_pow *= 3;
        s.set(k, -BigRational(mpz_class(1), mpz_class(static_cast<long>(k)) * three_pow));
    }
    s.add_tail({1.0, 3.0});
    return s;
}

EvenSeries sinc(std::size_t order)
{
    EvenSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        BigRational term(mpz_class(1), factorial(2 * k + 1));
        s.set(k, k % 2 == 0 ? term : -term);
    }
    // Cauchy bound on |t| <= 4: |sinc(sqrt t)| <= sinh(2)/2.
    const Interval m = (exp(Interval(2.0)) - exp(Interval(-2.0))) / Interval(4.0);
    s.add_tail({upper(m), 4.0});
    return s;
}

EvenSeries x_over_sin(std::size_t order)
{
    EvenSeries s(order);
    s.set(0, BigRational(1));
    for (std::size_t k = 1; k <= order; ++k) {
        const BigRational b = bernoulli_abs(static_cast<unsigned>(k));
        s.set(k, BigRational(mpz_class(pow2(2 * k) - 2), factorial(2 * k)) * b);
    }
    const Interval pi2 = sqr(pi());
    s.add_tail({upper(pi2 / Interval(3.0)), lower(pi2)});
    return s;
}

EvenSeries x2_over_sin2(std::size_t order)
{
    EvenSeries s(order);
    s.set(0, BigRational(1));
    for (std::size_t k = 1; k <= order; ++k) {
        s.set(k, series_coeff(SeriesKind::csc2_defect, static_cast<unsigned>(k)));
    }
    const Interval pi2 = sqr(pi());
    s.add_tail({upper(pi2 / Interval(4.0)), lower(pi2 / Interval(2.0))});
    return s;
}

} // namespace even_series

} // namespace trigcert
