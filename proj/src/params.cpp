#include "trigcert/params.hpp"

#include <sstream>

namespace trigcert {

Scalar Scalar::exact(const BigRational& q)
{
    Scalar s;
    s.exact_ = q;
    s.square_ = q * q;
    s.value_ = Interval::from_rational(q);
    s.mp_.reset();
    return s;
}

Scalar Scalar::sqrt_of(const BigRational& sq)
{
    if (sq.sign() < 0) {
        throw DomainError("sqrt_of: negative argument " + sq.to_string());
    }
    Scalar s;
    s.exact_.reset();
    s.square_ = sq;
    s.value_ = sqrt(Interval::from_rational(sq));
    s.mp_.reset();
    // A perfect square of a rational is stored exactly.
    mpz_class num_root;
    mpz_class den_root;
    mpz_sqrt(num_root.get_mpz_t(), sq.numerator().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), sq.denominator().get_mpz_t());
    if (num_root * num_root == sq.numerator() && den_root * den_root == sq.denominator()) {
        return exact(BigRational(num_root, den_root));
    }
    return s;
}

Scalar Scalar::enclosure(const Interval& value, std::optional<MpInterval> mp)
{
    Scalar s;
    s.exact_.reset();
    s.square_.reset();
    s.value_ = value;
    s.mp_ = std::move(mp);
    return s;
}

std::optional<BigRational> Scalar::exact_square() const { return square_; }

MpInterval Scalar::value_mp() const
{
    if (exact_) {
        return MpInterval::from_rational(*exact_);
    }
    if (square_) {
        return sqrt(MpInterval::from_rational(*square_));
    }
    if (mp_) {
        return *mp_;
    }
    return from_double_interval<MpReal>(value_);
}

std::string Scalar::text() const
{
    if (!text_.empty()) {
        return text_;
    }
    if (exact_) {
        return exact_->to_string();
    }
    if (square_) {
        return "sqrt(" + square_->to_string() + ")";
    }
    return value_.str();
}

Scalar Params::r_times_p2() const
{
    if (!r) {
        return Scalar::exact(BigRational(1, 3));
    }
    const auto p2 = p.exact_square();
    if (r->is_exact() && p2) {
        return Scalar::exact(*r->exact_value() * *p2);
    }
    return Scalar::enclosure(r->value() * sqr(p.value()), r->value_mp() * sqr(p.value_mp()));
}

Scalar Params::exponent() const
{
    if (r) {
        return *r;
    }
    if (const auto p2 = p.exact_square()) {
        return Scalar::exact((BigRational(3) * *p2).inverse());
    }
    const Interval three(3.0);
    return Scalar::enclosure(Interval(1.0) / (three * sqr(p.value())),
                             MpInterval(1.0) / (MpInterval(3.0) * sqr(p.value_mp())));
}

std::string Params::describe() const
{
    std::ostringstream os;
    if (p_to_zero) {
        os << "p->0+";
    } else {
        os << "p=" << p.text();
    }
    if (r) {
        os << " r=" << r->text();
    }
    if (c) {
        os << " c=" << c->text();
    }
    if (a) {
        os << " a=" << a->text();
    }
    return os.str();
}

} // namespace trigcert
