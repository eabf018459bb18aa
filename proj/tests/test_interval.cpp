#include "oracle.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/interval.hpp"

#include <doctest.h>

#include <cmath>
#include <thread>

using namespace trigcert;

TEST_CASE("endpoint arithmetic")
{
    CHECK((Interval(1, 2) + Interval(3, 4)).lo() == 4.0);
    CHECK((Interval(1, 2) + Interval(3, 4)).hi() == 6.0);
    const Interval m = Interval(-1, 2) * Interval(3, 4);
    CHECK(m.lo() == -4.0);
    CHECK(m.hi() == 8.0);
    CHECK_THROWS_AS(Interval(1, 1) / Interval(-1, 1), DomainError);
    CHECK_THROWS_AS(Interval(2, 1), DomainError);
}

TEST_CASE("elementary functions on the spec examples")
{
    const Interval c = cos(Interval(0.0));
    CHECK(c.contains(1.0));
    CHECK(c.hi() - c.lo() <= 2 * std::ldexp(1.0, -52));

    const Interval quadrant(0.0, ConstantPool::get(Constant::half_pi).hi());
    const Interval s = sin(quadrant);
    CHECK(s.lo() <= 0.0);
    CHECK(s.hi() >= 1.0);
    CHECK(s.lo() > -1e-15);
    CHECK(s.hi() < 1.0 + 1e-15);

    CHECK(log(ConstantPool::get(Constant::e)).contains(1.0));
}

TEST_CASE("rational powers")
{
    CHECK(pow_rational(Interval(8.0), BigRational(1, 3)).contains(2.0));
    const Interval c = pow_rational(Interval(0.5403, 0.5404), BigRational(1, 3));
    CHECK(c.contains(std::cbrt(std::cos(1.0))));
    const Interval r = pow_rational(Interval(4, 9), BigRational(1, 2));
    CHECK(r.lo() <= 2.0);
    CHECK(r.hi() >= 3.0);
    CHECK(r.lo() > 2.0 - 1e-14);
    CHECK(r.hi() < 3.0 + 1e-14);
    CHECK_THROWS_AS(pow_rational(Interval(-1, 1), BigRational(1, 2)), DomainError);
}

TEST_CASE("containment fuzzing against MPFR, 10^5 samples")
{
    const oracle::FuzzResult r = oracle::containment_fuzz(100000, 20240917);
    CHECK(r.samples == 100000);
    CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("inclusion isotonicity on nested operands")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t failures = 0;
    for (int i = 0; i < 20000; ++i) {
        const auto op = static_cast<oracle::Op>(i % static_cast<int>(oracle::Op::count));
        const Interval big = oracle::random_operand(op, rng);
        const Interval big2 = oracle::random_operand(op, rng, true);
        const double a = oracle::random_in(big, rng);
        const double b = oracle::random_in(big, rng);
        const Interval small(std::min(a, b), std::max(a, b));
        const double c = oracle::random_in(big2, rng);
        const double d = oracle::random_in(big2, rng);
        const Interval small2(std::min(c, d), std::max(c, d));
        const Interval outer = oracle::apply(op, big, big2);
        const Interval inner = oracle::apply(op, small, small2);
        if (!outer.contains(inner)) {
            ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("point inputs through monotone functions stay within 4 ulp")
{
    for (double x : {0.1, 0.5, 1.0, 2.0, 3.7, 10.0, 123.25}) {
        for (const Interval& y : {exp(Interval(x)), log(Interval(x)), sqrt(Interval(x)), atan(Interval(x))}) {
            const double ulp = std::nextafter(std::abs(y.hi()), INFINITY) - std::abs(y.hi());
            CHECK(y.hi() - y.lo() <= 4 * ulp);
        }
    }
}

TEST_CASE("extended tier agrees with the double tier")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.05, 1.5);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        const MpInterval X(x);
        const Interval d = to_double_interval(sin(X) / X + log(cos(X)) * tan(X));
        const Interval e = sin(Interval(x)) / Interval(x) + log(cos(Interval(x))) * tan(Interval(x));
        CHECK(overlaps(d, e));
        CHECK(width_as_double(sin(X)) < 1e-70);
    }
}

TEST_CASE("concurrent evaluation is consistent")
{
    auto work = [] {
        double acc = 0.0;
        for (int i = 1; i < 2000; ++i) {
            acc += sin(Interval(i * 0.01)).hi();
        }
        return acc;
    };
    const double expected = work();
    std::vector<std::thread> pool;
    std::vector<double> got(4);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] { got[t] = work(); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (double g : got) {
        CHECK(g == expected);
    }
}
