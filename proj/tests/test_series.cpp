#include "oracle.hpp"

#include "trigcert/even_series.hpp"
#include "trigcert/jet.hpp"
#include "trigcert/series.hpp"
#include "trigcert/taylor.hpp"

#include <doctest.h>

#include <gmpxx.h>

using namespace trigcert;

namespace {

oracle::Big log_sinc_ref(double x)
{
    oracle::Big a(x);
    oracle::Big s;
    mpfr_sin(s.get(), a.get(), MPFR_RNDN);
    mpfr_div(s.get(), s.get(), a.get(), MPFR_RNDN);
    mpfr_log(s.get(), s.get(), MPFR_RNDN);
    return s;
}

// Akiyama-Tanigawa, independent of the library recurrence
std::vector<mpq_class> bernoulli_at(unsigned count)
{
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(count + 1);
    for (unsigned m = 0; m <= count; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
        }
        out.push_back(a[0]);
    }
    return out;
}

oracle::Big zeta_coeff(unsigned n)
{
    // 2 zeta(2n) / pi^(2n)
    oracle::Big z;
    oracle::Big pi;
    mpfr_zeta_ui(z.get(), 2 * n, MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_pow_ui(pi.get(), pi.get(), 2 * n, MPFR_RNDN);
    mpfr_div(z.get(), z.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_ui(z.get(), z.get(), 2, MPFR_RNDN);
    return z;
}

} // namespace

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli_abs(1) == BigRational(1, 6));
    CHECK(bernoulli_abs(2) == BigRational(1, 30));
    CHECK(bernoulli_abs(3) == BigRational(1, 42));
    const auto ref = bernoulli_at(120);
    for (unsigned n = 1; n <= 60; ++n) {
        mpq_class r = ref[2 * n];
        r = abs(r);
        CHECK(bernoulli_abs(n) == BigRational(r));
    }
}

TEST_CASE("series coefficients")
{
    CHECK(series_coeff(SeriesKind::cot_defect, 1) == BigRational(1, 3));
    CHECK(series_coeff(SeriesKind::cot_defect, 2) == BigRational(1, 45));
    CHECK(series_coeff(SeriesKind::tan, 1) == BigRational(1));
    CHECK(series_coeff(SeriesKind::tan, 2) == BigRational(1, 3));
    CHECK(series_coeff(SeriesKind::tan, 3) == BigRational(2, 15));
    CHECK(series_coeff(SeriesKind::csc2_defect, 1) == BigRational(1, 3));
    CHECK(series_coeff(SeriesKind::csc2_defect, 2) == BigRational(1, 15));

    for (unsigned n = 1; n <= 50; ++n) {
        const oracle::Big a = zeta_coeff(n);
        CAPTURE(n);
        CHECK(oracle::inside(a, series_coeff_interval(SeriesKind::cot_defect, n)));
        // tan and csc2 relations
        CHECK(series_coeff(SeriesKind::tan, n) ==
              series_coeff(SeriesKind::cot_defect, n) * (BigRational(4).pow(n) - BigRational(1)));
        CHECK(series_coeff(SeriesKind::csc2_defect, n) ==
              series_coeff(SeriesKind::cot_defect, n) * BigRational(2 * static_cast<long>(n) - 1));
    }
}

TEST_CASE("enclosed evaluation")
{
    const Interval c = eval_enclosed(SeriesKind::cot_defect, Interval(1.0), 24, SeriesForm::full);
    CHECK(c.contains(std::cos(1.0) / std::sin(1.0)));
    CHECK(std::abs(c.mid() - 0.6420926159) < 1e-10);
    const Interval t = eval_enclosed(SeriesKind::tan, Interval(0.5), 24, SeriesForm::full);
    CHECK(std::abs(t.mid() - 0.5463024898) < 1e-10);
    CHECK(t.contains(std::tan(0.5)));
    CHECK_THROWS_AS(eval_enclosed(SeriesKind::tan, Interval(1.6)), DomainError);
    CHECK_THROWS_AS(eval_enclosed(SeriesKind::cot_defect, Interval(3.2)), DomainError);
}

TEST_CASE("tail bound containment, 100 random samples")
{
    const oracle::FuzzResult r = oracle::tail_fuzz(100, 99);
    CHECK(r.samples == 100);
    CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("tail bounds shrink with the order")
{
    for (SeriesKind k : {SeriesKind::cot_defect, SeriesKind::tan, SeriesKind::csc2_defect}) {
        double prev = INFINITY;
        for (unsigned n = 4; n <= 48; n += 4) {
            const double b = series_tail_bound(k, 1.0, n).hi();
            CHECK(b < prev);
            prev = b;
        }
    }
    CHECK(eval_enclosed(SeriesKind::cot_defect, Interval(1.0), 30).width() <= 1e-12);
    CHECK(eval_enclosed(SeriesKind::csc2_defect, Interval(1.0), 30).width() <= 1e-12);
    CHECK(eval_enclosed(SeriesKind::tan, Interval(0.5), 32).width() <= 1e-12);
    const Interval a = eval_enclosed_adaptive(SeriesKind::cot_defect, Interval(2.5), 1e-13);
    CHECK(a.width() < 1e-11);
}

TEST_CASE("even series of ln(sin x / x)")
{
    const EvenSeries s = even_series::log_sinc();
    CHECK(s.coeff(0).exact.has_value());
    CHECK(*s.coeff(1).exact == BigRational(-1, 6));
    CHECK(*s.coeff(2).exact == BigRational(-1, 180));
    for (double x : {0.01, 0.03, 0.0625}) {
        const Interval v = s.eval(Interval(x * x));
        CHECK(oracle::inside(log_sinc_ref(x), v));
        CHECK(v.width() < 1e-15);
    }
    // x d/dx ln(sinc) = x cot x - 1
    const Interval d = s.x_ddx().eval(Interval(0.0025));
    CHECK(std::abs(d.mid() - (0.05 / std::tan(0.05) - 1.0)) < 1e-15);
    // int_0^d sin x / x
    const Interval si = even_series::sinc().integrate(Interval(0.0625));
    CHECK(std::abs(si.mid() - 0.0624864375) < 1e-9);
    oracle::Big scaled = log_sinc_ref(0.05);
    mpfr_div(scaled.get(), scaled.get(), oracle::Big(0.05 * 0.05).get(), MPFR_RNDN);
    CHECK(std::abs(s.eval_scaled(Interval(0.05 * 0.05), 1).mid() - scaled.to_double()) < 1e-14);
}

TEST_CASE("jets against finite differences")
{
    using J = Jet<MpInterval, 3>;
    const MpInterval x0(0.7);
    const J y = sin(J::variable(x0)) * exp(J::variable(x0));
    // f' = e^x (sin x + cos x), f'' = 2 e^x cos x
    const double d1 = std::exp(0.7) * (std::sin(0.7) + std::cos(0.7));
    const double d2 = 2 * std::exp(0.7) * std::cos(0.7);
    CHECK(std::abs(to_double_interval(y[1]).mid() - d1) < 1e-13);
    CHECK(std::abs(to_double_interval(y[2]).mid() - d2 / 2) < 1e-13);

    // MPFR central difference
    oracle::Big h(1e-20);
    oracle::Big xp(0.7);
    oracle::Big xm(0.7);
    mpfr_add(xp.get(), xp.get(), h.get(), MPFR_RNDN);
    mpfr_sub(xm.get(), xm.get(), h.get(), MPFR_RNDN);
    auto f = [](oracle::Big x) {
        oracle::Big s;
        oracle::Big e;
        mpfr_sin(s.get(), x.get(), MPFR_RNDN);
        mpfr_exp(e.get(), x.get(), MPFR_RNDN);
        mpfr_mul(s.get(), s.get(), e.get(), MPFR_RNDN);
        return s;
    };
    oracle::Big fd = f(xp);
    mpfr_sub(fd.get(), fd.get(), f(xm).get(), MPFR_RNDN);
    mpfr_div(fd.get(), fd.get(), h.get(), MPFR_RNDN);
    mpfr_div_ui(fd.get(), fd.get(), 2, MPFR_RNDN);
    CHECK(mpfr_cmp_d(fd.get(), to_double_interval(y[1]).lo() - 1e-30) > 0);
    CHECK(std::abs(fd.to_double() - d1) < 1e-14);
}

TEST_CASE("Taylor forms enclose and tighten")
{
    auto f = [](const auto& x) { return sin(x) * cos(x) + x * x; };
    double prev = INFINITY;
    for (double w : {0.1, 0.01, 0.001}) {
        const Interval X(1.0, 1.0 + w);
        const Interval e = taylor_enclose<4>(f, X);
        for (int i = 0; i <= 10; ++i) {
            const double x = 1.0 + w * i / 10;
            CHECK(e.contains(std::sin(x) * std::cos(x) + x * x));
        }
        CHECK(e.width() < prev);
        prev = e.width();
    }
    // int_0^1 (sin x cos x + x^2) = sin^2(1)/2 + 1/3
    const Interval integral = taylor_integrate<6>(f, 0.0, 1.0);
    CHECK(integral.contains(std::sin(1.0) * std::sin(1.0) / 2 + 1.0 / 3));
}
