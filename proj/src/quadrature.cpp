#include "trigcert/quadrature.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/expression.hpp"
#include "trigcert/taylor.hpp"

#include <algorithm>
#include <regex>

namespace trigcert {

namespace {

using T = RoundingTraits<double>;

constexpr std::size_t kQuadOrder = 6;

struct QCell {
    double lo;
    double hi;
    unsigned depth;
};

std::string substitute(std::string text, const std::string& symbol, const std::string& value)
{
    return std::regex_replace(text, std::regex("\\b" + symbol + "\\b"), "(" + value + ")");
}

} // namespace

IntegralResult integrate_enclose(const IntegralTask& task, unsigned max_depth)
{
    const CatalogFunction f(task.integrand, task.params);
    const ParamValues<double>& pv = f.values();
    const double lo = task.a.hi();
    const double hi = task.b.lo();
    if (!(lo < hi)) {
        throw DomainError("integrate: empty or reversed range [" + task.a.str() + ", " + task.b.str() + "]");
    }
    const FnDomain dom = natural_domain(task.integrand);
    if (task.a.lo() < dom.lo || task.b.hi() > dom.hi) {
        throw DomainError("integrate: range leaves the domain of " + std::string(fn_name(task.integrand)));
    }
    if (!(task.tolerance > 0.0)) {
        throw UsageError("integrate: tolerance must be positive");
    }

    IntegralResult out;
    Interval sum(0.0);
    // endpoint slivers [a_true, a.hi] and [b.lo, b_true]
    if (!task.a.is_point()) {
        sum = sum + Interval(0.0, task.a.width()) * f.eval(task.a);
        ++out.evaluations;
    }
    if (!task.b.is_point()) {
        sum = sum + Interval(0.0, task.b.width()) * f.eval(task.b);
        ++out.evaluations;
    }

    double start = lo;
    const NearZeroForm form = f.near_zero_form();
    if (lo == 0.0 && (form == NearZeroForm::value || form == NearZeroForm::log_x_plus)) {
        const double delta = std::min(kNearZero, hi);
        const Interval d(delta);
        Interval part = f.series()->integrate(d);
        if (form == NearZeroForm::log_x_plus) {
            // int_0^delta ln x dx = delta ln delta - delta
            Interval extra(0.0);
            if (task.integrand == FnId::log_2sin) {
                extra = ConstantPool::get(Constant::ln2);
            }
            part = part + d * log(d) - d + extra * d;
        }
        sum = sum + part;
        ++out.evaluations;
        ++out.cells;
        start = delta;
    }
    if (start >= hi) {
        out.enclosure = sum;
        return out;
    }

    const double budget = T::mul(task.tolerance, 0.75, Rounding::down);
    const double total = T::sub(hi, start, Rounding::up);
    auto eval_cell = [&](double a, double b) -> Interval {
        ++out.evaluations;
        if (form != NearZeroForm::none && a < kNearZero) {
            // zero-order cell through the near-zero form
            return f.eval(Interval(a, b)) * (Interval(b) - Interval(a));
        }
        return taylor_integrate<kQuadOrder>([&](const auto& xx) { return expr::eval(task.integrand, xx, pv); }, a,
                                            b);
    };

    std::vector<QCell> stack;
    const bool split = form != NearZeroForm::none && start < kNearZero && kNearZero < hi;
    if (split) {
        stack.push_back({kNearZero, hi, 0});
        stack.push_back({start, kNearZero, 0});
    } else {
        stack.push_back({start, hi, 0});
    }
    while (!stack.empty()) {
        const QCell c = stack.back();
        stack.pop_back();
        const double allowed = budget * ((c.hi - c.lo) / total);
        Interval part;
        bool ok = true;
        try {
            part = eval_cell(c.lo, c.hi);
        } catch (const DomainError&) {
            ok = false;
        }
        if (ok && part.width() <= allowed) {
            sum = sum + part;
            ++out.cells;
            continue;
        }
        const double mid = 0.5 * c.lo + 0.5 * c.hi;
        if (c.depth >= max_depth || !(mid > c.lo && mid < c.hi)) {
            throw PrecisionError("integrate " + std::string(fn_name(task.integrand)) + ": tolerance " +
                                 Interval(task.tolerance).str(3) + " unreachable on [" + Interval(c.lo).str(17) +
                                 ", " + Interval(c.hi).str(17) + "]");
        }
        stack.push_back({mid, c.hi, c.depth + 1});
        stack.push_back({c.lo, mid, c.depth + 1});
    }
    out.enclosure = sum;
    return out;
}

std::vector<std::string> bound_ids() { return {"A1", "A2", "A3", "A4", "A41", "A42a", "A5", "A6", "A7"}; }

BoundPair bound_pair(std::string_view bound_id, const std::string& arg)
{
    const std::string id(bound_id);
    auto point = [](const std::string& text) { return expression_interval(text); };
    auto need_arg = [&]() {
        if (arg.empty()) {
            throw UsageError("bound " + id + " needs an argument");
        }
    };
    BoundPair b;
    b.id = id;
    if (id == "A1") {
        need_arg();
        const Scalar p = expression_scalar(arg);
        b.id = "A1(p=" + arg + ")";
        b.lower = substitute("1/P*(2/pi)^(3*P^2)*tan(P*pi/2)", "P", arg);
        b.upper = substitute("sin(P*pi/2)/P", "P", arg);
        b.integral = {FnId::sinc_pow, Params::with_p(p), Interval(0.0), point("pi/2"), 1e-7};
        b.quantity = "int_0^(pi/2) sinc^(3p^2)";
        b.reversed = p.value().lo() >= 0.5;
        return b;
    }
    if (id == "A2") {
        need_arg();
        b.id = "A2(a=" + arg + ")";
        b.lower = substitute("(2*A + sin(A))/((2 + cos(A))*exp(A^2/6))", "A", arg);
        b.upper = substitute("(2*A + sin(A))/3", "A", arg);
        b.integral = {FnId::gauss_env, Params{}, Interval(0.0), point(arg), 1e-10};
        b.quantity = "int_0^a exp(-x^2/6)";
        return b;
    }
    if (id == "A3") {
        b.lower = "sqrt(3)*pi/4";
        b.upper = "7*pi/16";
        b.integral = {FnId::sinc, Params{}, Interval(0.0), point("pi/2"), 1e-10};
        b.quantity = "Si(pi/2)";
        return b;
    }
    if (id == "A4") {
        need_arg();
        b.id = "A4(c=" + arg + ")";
        b.lower = substitute("C*ln(sin(C)) - C + C^3/9", "C", arg);
        b.upper = substitute("C*ln(C) - C - C^3/18", "C", arg);
        b.integral = {FnId::log_sin, Params{}, Interval(0.0), point(arg), 1e-10};
        b.quantity = "int_0^c ln sin x";
        return b;
    }
    if (id == "A41") {
        b.lower = "-pi/72*(36 - pi^2)";
        b.upper = "-pi/2*(ln(2/pi) + pi^2/72 + 1)";
        b.integral = {FnId::log_sin, Params{}, Interval(0.0), point("pi/2"), 1e-10};
        b.quantity = "int_0^(pi/2) ln sin x";
        return b;
    }
    if (id == "A42a") {
        b.lower = "-pi/8*(2 + ln(2) - pi^2/72)";
        b.upper = "-pi/4*(2*ln(2) + 1 + pi^2/288 - ln(pi))";
        b.integral = {FnId::log_sin, Params{}, Interval(0.0), point("pi/4"), 1e-10};
        b.quantity = "int_0^(pi/4) ln sin x";
        return b;
    }
    if (id == "A5") {
        b.lower = "sqrt(6)*pi/(2*sqrt(16*sqrt(3) - pi^2))";
        b.upper = "3*pi^2/32";
        b.integral = {FnId::x_over_sin, Params{}, Interval(0.0), point("pi/2"), 1e-10};
        b.scale = "1/2";
        b.quantity = "G = (1/2) int_0^(pi/2) x/sin x";
        return b;
    }
    if (id == "A6") {
        b.lower = "pi/2*(ln(2) - ln(pi) + pi^2/288 + 1)";
        b.upper = "pi/4*(2 - ln(2) - pi^2/72)";
        b.integral = {FnId::log_2sin, Params{}, Interval(0.0), point("pi/4"), 1e-10};
        b.scale = "-2";
        b.quantity = "G = -2 int_0^(pi/4) ln(2 sin x)";
        return b;
    }
    if (id == "A7") {
        b.lower = "pi^2/16 - pi/4*ln(2) + 8/5*(172 - 99*sqrt(3))";
        b.upper = "pi^2/320*(37 + 6*sqrt(3)) - pi/4*ln(2)";
        b.integral = {FnId::x2_over_sin2, Params{}, Interval(0.0), point("pi/4"), 1e-10};
        b.offset = "pi^2/16 - pi/4*ln(2)";
        b.quantity = "G = pi^2/16 - (pi/4) ln 2 + int_0^(pi/4) x^2/sin^2 x";
        return b;
    }
    throw UsageError("unknown bound id '" + id + "'");
}

namespace {

Certificate compare_bounds(const BoundPair& pair, const Interval& value, const std::string& what)
{
    Certificate cert;
    cert.task = pair.id + ": " + pair.lower + " < " + what + " < " + pair.upper + (pair.reversed ? " (reversed)" : "");
    const Interval lower = expression_interval(pair.lower);
    const Interval upper = expression_interval(pair.upper);
    bool ok;
    if (pair.reversed) {
        ok = certainly_less(upper, value) && certainly_less(value, lower);
    } else {
        ok = certainly_less(lower, value) && certainly_less(value, upper);
    }
    cert.evidence.push_back("lower " + lower.str(12));
    cert.evidence.push_back("value " + value.str(12));
    cert.evidence.push_back("upper " + upper.str(12));
    cert.verdict = ok ? Verdict::proved : Verdict::unproved;
    if (!ok) {
        cert.witness = value;
    }
    return cert;
}

} // namespace

Certificate check_integral_bounds(const BoundPair& pair)
{
    IntegralTask task = pair.integral;
    const Interval offset = expression_interval(pair.offset);
    const Interval scale = expression_interval(pair.scale);
    Certificate cert;
    std::size_t evaluations = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const IntegralResult r = integrate_enclose(task);
        evaluations += r.evaluations;
        const Interval value = offset + scale * r.enclosure;
        cert = compare_bounds(pair, value, pair.quantity);
        cert.evidence.insert(cert.evidence.begin(), "integral " + r.enclosure.str(17) + " over " +
                                                         std::to_string(r.cells) + " cells");
        cert.enclosure = from_double_interval<MpReal>(value);
        if (cert.proved() || task.tolerance < 1e-12) {
            break;
        }
        task.tolerance /= 100.0;
    }
    cert.evaluations = evaluations;
    return cert;
}

Interval decimal_reading(const std::string& decimal)
{
    std::string text = decimal;
    while (!text.empty() && (text.back() == '.' || text.back() == ' ')) {
        text.pop_back();
    }
    const BigRational q = BigRational::parse(text);
    const auto dot = text.find('.');
    long digits = 0;
    if (dot != std::string::npos) {
        for (std::size_t i = dot + 1; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            ++digits;
        }
    }
    const BigRational unit = BigRational(1) / BigRational(10).pow(digits);
    return hull(Interval::from_rational(q - unit), Interval::from_rational(q + unit));
}

Certificate check_decimal_bounds(const BoundPair& pair, const std::string& decimal)
{
    const Interval value = decimal_reading(decimal);
    Certificate cert = compare_bounds(pair, value, decimal);
    cert.enclosure = from_double_interval<MpReal>(value);
    cert.evaluations = 2;
    return cert;
}

} // namespace trigcert
