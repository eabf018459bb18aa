#include "trigcert/expression.hpp"

#include "trigcert/certifier.hpp"
#include "trigcert/constants.hpp"

#include <cctype>
#include <functional>

namespace trigcert {

namespace {

RealValue from_exact(const BigRational& q)
{
    RealValue v{MpInterval::from_rational(q), q, std::nullopt};
    v.exact_square = q * q;
    return v;
}

RealValue from_mp(MpInterval x) { return RealValue{std::move(x), std::nullopt, std::nullopt}; }

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RealValue parse()
    {
        RealValue v = expr();
        skip();
        if (i_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UsageError("expression '" + s_ + "' column " + std::to_string(i_ + 1) + ": " + what);
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }

    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    RealValue expr()
    {
        RealValue v = term();
        for (;;) {
            if (eat('+')) {
                v = add(v, term(), false);
            } else if (eat('-')) {
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }

    RealValue term()
    {
        RealValue v = unary();
        for (;;) {
            if (eat('*')) {
                v = mul(v, unary(), false);
            } else if (eat('/')) {
                v = mul(v, unary(), true);
            } else {
                return v;
            }
        }
    }

    RealValue unary()
    {
        if (eat('-')) {
            RealValue v = unary();
            v.mp = -v.mp;
            if (v.exact) {
                v.exact = -*v.exact;
            }
            v.exact_square.reset();
            if (v.exact) {
                v.exact_square = *v.exact * *v.exact;
            }
            return v;
        }
        if (eat('+')) {
            return unary();
        }
        return power();
    }

    RealValue power()
    {
        RealValue base = primary();
        if (!eat('^')) {
            return base;
        }
        const RealValue e = unary();
        if (e.exact && e.exact->is_integer()) {
            const long n = e.exact->numerator().get_si();
            if (base.exact) {
                if (base.exact->is_zero() && n < 0) {
                    fail("zero to a negative power");
                }
                return from_exact(base.exact->pow(n));
            }
            RealValue v = from_mp(pow(base.mp, n));
            if (base.exact_square && n % 2 == 0) {
                v.exact = base.exact_square->pow(n / 2);
                v.exact_square = *v.exact * *v.exact;
            }
            return v;
        }
        if (e.exact) {
            if (base.exact && *e.exact == BigRational(1, 2) && base.exact->sign() >= 0) {
                return sqrt_value(base);
            }
            return from_mp(pow_rational(base.mp, *e.exact));
        }
        return from_mp(pow(base.mp, e.mp));
    }

    static RealValue sqrt_value(const RealValue& x)
    {
        RealValue v = from_mp(sqrt(x.mp));
        if (x.exact) {
            const mpz_class num = x.exact->numerator();
            const mpz_class den = x.exact->denominator();
            if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
                mpz_class rn;
                mpz_class rd;
                mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
                mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
                return from_exact(BigRational(rn, rd));
            }
            v.exact_square = x.exact;
        }
        return v;
    }

    RealValue primary()
    {
        skip();
        if (i_ >= s_.size()) {
            fail("unexpected end of expression");
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                ++i_;
            }
            const std::string name = s_.substr(start, i_ - start);
            if (eat('(')) {
                const RealValue arg = expr();
                if (!eat(')')) {
                    fail("expected ')'");
                }
                return call(name, arg);
            }
            return symbol(name);
        }
        if (eat('(')) {
            const RealValue v = expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return v;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    RealValue number()
    {
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
            ++i_;
        }
        if (i_ + 1 < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (s_[j] == '+' || s_[j] == '-') {
                ++j;
            }
            if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
                i_ = j;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                    ++i_;
                }
            }
        }
        try {
            return from_exact(BigRational::parse(s_.substr(start, i_ - start)));
        } catch (const Error&) {
            fail("malformed number");
        }
    }

    RealValue symbol(const std::string& name)
    {
        if (name == "pi") {
            return from_mp(ConstantPool::get_mp(Constant::pi));
        }
        if (name == "e") {
            return from_mp(ConstantPool::get_mp(Constant::e));
        }
        if (name == "p1") {
            return from_mp(p1_enclosure());
        }
        if (name == "x0") {
            return from_mp(x0_enclosure());
        }
        if (name == "theta") {
            const MpInterval ln2 = ConstantPool::get_mp(Constant::ln2);
            return from_mp(MpInterval(2.0) * (ConstantPool::get_mp(Constant::ln_pi) - ln2) / ln2);
        }
        if (name == "q") {
            const MpInterval two_over_pi = MpInterval(2.0) / ConstantPool::get_mp(Constant::pi);
            return from_mp(two_over_pi * acos(two_over_pi));
        }
        if (name == "eps") {
            return from_exact(BigRational(1, 1024));
        }
        fail("unknown symbol '" + name + "'");
    }

    RealValue call(const std::string& name, const RealValue& x)
    {
        if (name == "sqrt") {
            if (x.exact && x.exact->sign() >= 0) {
                return sqrt_value(x);
            }
            return from_mp(sqrt(x.mp));
        }
        if (x.exact && x.exact->is_zero()) {
            if (name == "sin" || name == "tan" || name == "atan" || name == "arctan") {
                return from_exact(BigRational(0));
            }
            if (name == "cos" || name == "exp") {
                return from_exact(BigRational(1));
            }
        }
        if (x.exact && *x.exact == BigRational(1) && (name == "ln" || name == "log")) {
            return from_exact(BigRational(0));
        }
        static const std::vector<std::pair<std::string, std::function<MpInterval(const MpInterval&)>>> fns = {
            {"sin", [](const MpInterval& v) { return sin(v); }},
            {"cos", [](const MpInterval& v) { return cos(v); }},
            {"tan", [](const MpInterval& v) { return tan(v); }},
            {"cot", [](const MpInterval& v) { return cot(v); }},
            {"exp", [](const MpInterval& v) { return exp(v); }},
            {"ln", [](const MpInterval& v) { return log(v); }},
            {"log", [](const MpInterval& v) { return log(v); }},
            {"atan", [](const MpInterval& v) { return atan(v); }},
            {"arctan", [](const MpInterval& v) { return atan(v); }},
            {"acos", [](const MpInterval& v) { return acos(v); }},
            {"arccos", [](const MpInterval& v) { return acos(v); }},
        };
        for (const auto& [n, f] : fns) {
            if (n == name) {
                return from_mp(f(x.mp));
            }
        }
        fail("unknown function '" + name + "'");
    }

    static RealValue add(const RealValue& a, const RealValue& b, bool subtract)
    {
        if (a.exact && b.exact) {
            return from_exact(subtract ? *a.exact - *b.exact : *a.exact + *b.exact);
        }
        return from_mp(subtract ? a.mp - b.mp : a.mp + b.mp);
    }

    RealValue mul(const RealValue& a, const RealValue& b, bool divide)
    {
        if (divide && b.exact && b.exact->is_zero()) {
            fail("division by zero");
        }
        if (a.exact && b.exact) {
            return from_exact(divide ? *a.exact / *b.exact : *a.exact * *b.exact);
        }
        RealValue v = from_mp(divide ? a.mp / b.mp : a.mp * b.mp);
        if (a.exact_square && b.exact_square) {
            // (sqrt x)(sqrt y) = sqrt(xy) up to sign; keep only when both signs are known
            const int sa = a.mp.positive() ? 1 : (a.mp.negative() ? -1 : 0);
            const int sb = b.mp.positive() ? 1 : (b.mp.negative() ? -1 : 0);
            if (sa * sb > 0) {
                if (b.exact_square->is_zero()) {
                    return v;
                }
                v.exact_square = divide ? *a.exact_square / *b.exact_square : *a.exact_square * *b.exact_square;
            }
        }
        return v;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace

Scalar RealValue::to_scalar(const std::string& text) const
{
    Scalar s;
    if (exact) {
        s = Scalar::exact(*exact);
    } else if (exact_square && mp.positive()) {
        s = Scalar::sqrt_of(*exact_square);
    } else {
        s = Scalar::enclosure(value(), mp);
    }
    if (!text.empty()) {
        s.set_text(text);
    }
    return s;
}

RealValue evaluate_expression(const std::string& text) { return Parser(text).parse(); }

Interval expression_interval(const std::string& text) { return evaluate_expression(text).value(); }

Scalar expression_scalar(const std::string& text) { return evaluate_expression(text).to_scalar(text); }

const MpInterval& p1_enclosure()
{
    static const MpInterval p1 = [] {
        const MpInterval bracket(MpReal::from_rational(BigRational(1, 3), MPFR_RNDD), MpReal(0.5));
        return certify_root(root_problem_p1(), bracket, 1e-70).bracket;
    }();
    return p1;
}

const MpInterval& x0_enclosure()
{
    static const MpInterval x0 = [] {
        return certify_root(root_problem_h(p1_enclosure()), MpInterval(1.3, 1.32), 1e-60).bracket;
    }();
    return x0;
}

} // namespace trigcert
