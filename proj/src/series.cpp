#include "trigcert/series.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/errors.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <mutex>

namespace trigcert {

std::string_view series_kind_name(SeriesKind kind)
{
    switch (kind) {
    case SeriesKind::cot_defect: return "cot_defect";
    case SeriesKind::tan: return "tan";
    case SeriesKind::csc2_defect: return "csc2_defect";
    }
    return "?";
}

SeriesKind parse_series_kind(std::string_view name)
{
    if (name == "cot_defect" || name == "cot") {
        return SeriesKind::cot_defect;
    }
    if (name == "tan") {
        return SeriesKind::tan;
    }
    if (name == "csc2_defect" || name == "csc2") {
        return SeriesKind::csc2_defect;
    }
    throw UsageError("unknown series kind '" + std::string(name) + "'");
}

namespace {

std::atomic<unsigned> g_cap{kDefaultBernoulliCap};

struct BernoulliCache {
    std::mutex mutex;
    std::vector<BigRational> values; // values[n-1] = |B_2n|
};

BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

// Tangent numbers T_1..T_n (tan^(2k-1)(0)) by the in-place integer
// recurrence; |B_2k| = 2k T_k / (4^k (4^k - 1)).
std::vector<BigRational> compute_bernoulli(unsigned n)
{
    std::vector<mpz_class> t(n + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) {
        t[k] = (k - 1) * t[k - 1];
    }
    for (unsigned k = 2; k <= n; ++k) {
        for (unsigned j = k; j <= n; ++j) {
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
        }
    }
    std::vector<BigRational> out;
    out.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        const mpz_class four_k = pow2(2 * k);
        out.emplace_back(mpz_class(2 * k) * t[k], four_k * (four_k - 1));
    }
    return out;
}

struct CoeffCache {
    std::mutex mutex;
    std::array<std::vector<Interval>, 3> values;
};

CoeffCache& coeff_cache()
{
    static CoeffCache cache;
    return cache;
}

} // namespace

void set_bernoulli_cap(unsigned cap)
{
    if (cap == 0) {
        throw UsageError("Bernoulli cap must be positive");
    }
    g_cap.store(cap);
}

unsigned bernoulli_cap() { return g_cap.load(); }

BigRational bernoulli_abs(unsigned n)
{
    if (n == 0) {
        throw DomainError("bernoulli_abs: index must be >= 1");
    }
    if (n > g_cap.load()) {
        throw CapacityError("bernoulli_abs: index " + std::to_string(n) + " exceeds cap " +
                            std::to_string(g_cap.load()));
    }
    auto& cache = bernoulli_cache();
    std::lock_guard lock(cache.mutex);
    if (cache.values.size() < n) {
        unsigned target = 32;
        while (target < n) {
            target *= 2;
        }
        cache.values = compute_bernoulli(target);
    }
    return cache.values[n - 1];
}

BigRational series_coeff(SeriesKind kind, unsigned n)
{
    if (n == 0) {
        throw DomainError("series_coeff: index must be >= 1");
    }
    const BigRational base = BigRational(pow2(2 * n), factorial(2 * n)) * bernoulli_abs(n);
    switch (kind) {
    case SeriesKind::cot_defect: return base;
    case SeriesKind::tan: return BigRational(mpz_class(pow2(2 * n) - 1)) * base;
    case SeriesKind::csc2_defect: return BigRational(static_cast<long>(2 * n - 1)) * base;
    }
    throw UsageError("series_coeff: unknown kind");
}

const Interval& series_coeff_interval(SeriesKind kind, unsigned n)
{
    auto& cache = coeff_cache();
    std::lock_guard lock(cache.mutex);
    auto& table = cache.values[static_cast<std::size_t>(kind)];
    if (table.size() < n) {
        // Keep the lock while filling; entries are written once.
        const std::size_t old = table.size();
        table.resize(n);
        for (std::size_t i = old; i < n; ++i) {
            table[i] = Interval::from_rational(series_coeff(kind, static_cast<unsigned>(i + 1)));
        }
    }
    return table[n - 1];
}

double zeta_upper(unsigned s)
{
    // zeta(s) <= 1 + 2^-s + int_2^inf t^-s dt = 1 + 2^-s + 2^(1-s)/(s-1).
    using T = RoundingTraits<double>;
    const double two_pow = std::ldexp(1.0, -static_cast<int>(s));
    const double integral = T::div(2.0 * two_pow, static_cast<double>(s - 1), Rounding::up);
    return T::add(T::add(1.0, two_pow, Rounding::up), integral, Rounding::up);
}

CertifiedSeries make_series(SeriesKind kind, unsigned truncation_order)
{
    if (truncation_order == 0) {
        throw UsageError("make_series: truncation order must be positive");
    }
    CertifiedSeries s{kind, {}, truncation_order, series_radius(kind)};
    s.coefficients.reserve(truncation_order);
    for (unsigned n = 1; n <= truncation_order; ++n) {
        s.coefficients.push_back(series_coeff(kind, n));
    }
    return s;
}

Interval series_radius(SeriesKind kind)
{
    return kind == SeriesKind::tan ? ConstantPool::get(Constant::half_pi) : ConstantPool::get(Constant::pi);
}

Interval series_tail_bound(SeriesKind kind, double rho, unsigned n_terms)
{
    const Interval pi = ConstantPool::get(Constant::pi);
    const Interval radius = series_radius(kind);
    if (rho > radius.hi()) {
        throw DomainError("series: |x| = " + Interval(rho).str() + " outside radius " + radius.str() + " for " +
                          std::string(series_kind_name(kind)));
    }
    const Interval r = kind == SeriesKind::tan ? sqr(Interval(2.0) * Interval(rho) / pi) : sqr(Interval(rho) / pi);
    if (!(r.hi() < 1.0)) {
        throw PrecisionError("series: tail ratio " + r.str() + " does not certify convergence");
    }
    const Interval two_zeta(0.0, 2.0 * zeta_upper(2 * n_terms + 2));
    const Interval one_minus_r = Interval(1.0) - r;
    const long n = static_cast<long>(n_terms);
    switch (kind) {
    case SeriesKind::cot_defect:
        return two_zeta * pow(Interval(rho), 2 * n + 1) / (pow(pi, 2 * n + 2) * one_minus_r);
    case SeriesKind::tan:
        return two_zeta * pow(Interval(2.0), 2 * n + 2) * pow(Interval(rho), 2 * n + 1) /
               (pow(pi, 2 * n + 2) * one_minus_r);
    case SeriesKind::csc2_defect: {
        const Interval poly = Interval(static_cast<double>(2 * n + 1)) * one_minus_r + Interval(2.0) * r;
        return two_zeta * pow(Interval(rho), 2 * n) * poly / (pow(pi, 2 * n + 2) * sqr(one_minus_r));
    }
    }
    throw UsageError("series_tail_bound: unknown kind");
}

Interval eval_enclosed(SeriesKind kind, const Interval& x, unsigned n_terms, SeriesForm form)
{
    if (n_terms == 0) {
        throw UsageError("eval_enclosed: truncation order must be positive");
    }
    const double rho = x.mag();
    const Interval tail_bound = series_tail_bound(kind, rho, n_terms);
    const double t = tail_bound.hi();

    // Horner in x^2.
    const Interval x2 = sqr(x);
    Interval acc = series_coeff_interval(kind, n_terms);
    for (unsigned n = n_terms - 1; n >= 1; --n) {
        acc = acc * x2 + series_coeff_interval(kind, n);
    }

    Interval partial;
    Interval tail;
    if (kind == SeriesKind::csc2_defect) {
        partial = acc;
        tail = Interval(0.0, t);
    } else {
        partial = x * acc;
        // Odd series with positive coefficients: the tail has the sign of x.
        tail = x.nonnegative() ? Interval(0.0, t) : (x.hi() <= 0.0 ? Interval(-t, 0.0) : Interval(-t, t));
    }
    const Interval defect = partial + tail;
    if (form == SeriesForm::defect) {
        return defect;
    }
    if (kind == SeriesKind::tan) {
        return defect;
    }
    if (x.contains_zero()) {
        throw DomainError("eval_enclosed: full form of " + std::string(series_kind_name(kind)) +
                          " is singular at 0 and X = " + x.str() + " straddles it");
    }
    if (kind == SeriesKind::cot_defect) {
        return Interval(1.0) / x - defect;
    }
    return Interval(1.0) / sqr(x) + defect;
}

Interval eval_enclosed_adaptive(SeriesKind kind, const Interval& x, double tail_goal, SeriesForm form)
{
    for (unsigned n = kDefaultTruncation; n <= kMaxTruncation; n *= 2) {
        if (series_tail_bound(kind, x.mag(), n).hi() <= tail_goal) {
            return eval_enclosed(kind, x, n, form);
        }
    }
    throw PrecisionError("eval_enclosed: tail goal " + Interval(tail_goal).str() + " not reached at order " +
                         std::to_string(kMaxTruncation));
}

} // namespace trigcert
