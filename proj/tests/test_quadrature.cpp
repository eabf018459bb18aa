#include "oracle.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/expression.hpp"
#include "trigcert/quadrature.hpp"

#include <doctest.h>

using namespace trigcert;

namespace {

Interval integral(FnId id, const std::string& a, const std::string& b, double tol = 1e-12)
{
    return integrate_enclose({id, Params{}, expression_interval(a), expression_interval(b), tol}).enclosure;
}

oracle::Big pi_times(double k)
{
    oracle::Big r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    mpfr_mul_d(r.get(), r.get(), k, MPFR_RNDN);
    return r;
}

oracle::Big catalan()
{
    oracle::Big g;
    mpfr_const_catalan(g.get(), MPFR_RNDN);
    return g;
}

oracle::Big ln2()
{
    oracle::Big l;
    mpfr_const_log2(l.get(), MPFR_RNDN);
    return l;
}

} // namespace

TEST_CASE("integrals against MPFR references")
{
    const Interval si = integral(FnId::sinc, "0", "pi/2");
    CHECK(overlaps(si, decimal_reading("1.3707621681544884")));
    CHECK(si.width() <= 1e-12);

    // G = (1/2) int_0^(pi/2) x / sin x
    const Interval g2 = integral(FnId::x_over_sin, "0", "pi/2");
    oracle::Big two_g = catalan();
    mpfr_mul_ui(two_g.get(), two_g.get(), 2, MPFR_RNDN);
    CHECK(oracle::inside(two_g, g2));

    // int_0^(pi/2) ln sin = -(pi/2) ln 2
    oracle::Big ref = pi_times(-0.5);
    mpfr_mul(ref.get(), ref.get(), ln2().get(), MPFR_RNDN);
    CHECK(oracle::inside(ref, integral(FnId::log_sin, "0", "pi/2")));

    // int_0^(pi/4) ln sin = -(pi/4) ln 2 - G/2
    oracle::Big q = pi_times(-0.25);
    mpfr_mul(q.get(), q.get(), ln2().get(), MPFR_RNDN);
    oracle::Big half_g = catalan();
    mpfr_div_ui(half_g.get(), half_g.get(), 2, MPFR_RNDN);
    mpfr_sub(q.get(), q.get(), half_g.get(), MPFR_RNDN);
    CHECK(oracle::inside(q, integral(FnId::log_sin, "0", "pi/4")));

    // int_0^a exp(-x^2/6) = sqrt(6 pi)/2 erf(a/sqrt 6), a = pi/2
    oracle::Big six(6.0);
    oracle::Big s6;
    mpfr_sqrt(s6.get(), six.get(), MPFR_RNDN);
    oracle::Big e = pi_times(0.5);
    mpfr_div(e.get(), e.get(), s6.get(), MPFR_RNDN);
    mpfr_erf(e.get(), e.get(), MPFR_RNDN);
    oracle::Big c = pi_times(6.0);
    mpfr_sqrt(c.get(), c.get(), MPFR_RNDN);
    mpfr_div_ui(c.get(), c.get(), 2, MPFR_RNDN);
    mpfr_mul(e.get(), e.get(), c.get(), MPFR_RNDN);
    CHECK(oracle::inside(e, integral(FnId::gauss_env, "0", "pi/2")));
}

TEST_CASE("additivity and tolerance")
{
    const Interval whole = integral(FnId::sinc, "0", "2");
    const Interval split = integral(FnId::sinc, "0", "1") + integral(FnId::sinc, "1", "2");
    CHECK(overlaps(whole, split));

    double prev = INFINITY;
    for (double tol : {1e-4, 1e-7, 1e-10, 1e-13}) {
        const Interval v = integral(FnId::log_sin, "0", "pi/4", tol);
        CHECK(v.width() <= tol);
        CHECK(v.width() <= prev);
        prev = v.width();
    }
    CHECK_THROWS_AS(integral(FnId::sinc, "0", "1", 1e-30), PrecisionError);
    CHECK_THROWS_AS(integral(FnId::log_sin, "0", "4"), DomainError);
    CHECK_THROWS_AS(integral(FnId::sinc, "1", "0"), DomainError);
}

TEST_CASE("bound pairs")
{
    for (const std::string& id : bound_ids()) {
        std::string arg;
        if (id == "A1") {
            arg = "1/sqrt(5)";
        } else if (id == "A2" || id == "A4") {
            arg = "pi/2";
        }
        CAPTURE(id);
        const Certificate c = check_integral_bounds(bound_pair(id, arg));
        CHECK(c.proved());
        REQUIRE(c.enclosure.has_value());
    }
    const BoundPair rev = bound_pair("A1", "1/2");
    CHECK(rev.reversed);
    CHECK(check_integral_bounds(rev).proved());
    CHECK_THROWS_AS(bound_pair("A9"), UsageError);
    CHECK_THROWS_AS(bound_pair("A2"), UsageError);
}

TEST_CASE("decimal references")
{
    const Interval r = decimal_reading("1.25");
    CHECK(r.lo() <= 1.24);
    CHECK(r.hi() >= 1.26);
    CHECK(r.lo() > 1.2399);
    for (const std::string& id : {"A5", "A6", "A7"}) {
        CHECK(check_decimal_bounds(bound_pair(id), "0.9159655941772190").proved());
    }
    CHECK_FALSE(check_decimal_bounds(bound_pair("A3"), "1.5").proved());
}
