#include "trigcert/constants.hpp"
#include "trigcert/expression.hpp"
#include "trigcert/functions.hpp"
#include "trigcert/suite.hpp"

#include <doctest.h>

#include <random>

using namespace trigcert;

namespace {

Params p_of(const std::string& text) { return Params::with_p(expression_scalar(text)); }

Params p1_params() { return Params::with_p(Scalar::enclosure(to_double_interval(p1_enclosure()), p1_enclosure())); }

const Interval& half_pi() { return ConstantPool::get(Constant::half_pi); }

} // namespace

TEST_CASE("catalog values")
{
    CHECK(eval_fn(FnId::f_p, p1_params(), from_double_interval<MpReal>(half_pi())).contains(MpReal(0.0)));
    CHECK(eval_fn(FnId::f_p, p1_params(), half_pi()).contains(0.0));
    CHECK(eval_fn(FnId::U, Params::zero_limit(), Interval(1.0)).contains(Interval::from_rational(BigRational(-1, 6))));
    CHECK(eval_fn(FnId::g_prime, Params{}, Interval(0.0)).contains(0.0));
    CHECK(eval_fn(FnId::sinc, Params{}, Interval(0.0)).contains(1.0));
    CHECK(limit_value(FnId::F_p, p_of("1"), LimitPoint::zero_plus).contains(Interval::from_rational(BigRational(1, 3))));
}

TEST_CASE("endpoint limits at p = 1/sqrt(5)")
{
    const Params p = p_of("1/sqrt(5)");
    const Interval at0 = limit_value(FnId::F_p, p, LimitPoint::zero_plus);
    CHECK(at0.contains(Interval::from_rational(BigRational(5, 3))));
    const Interval alpha = limit_value(FnId::F_p, p, LimitPoint::half_pi_minus);
    CHECK(std::abs(alpha.mid() - 1.6714) < 5e-5);
    CHECK(alpha.width() < 1e-10);
    CHECK(limit_value(FnId::f_p, p, LimitPoint::zero_plus, 4).contains(0.0));
    // f_p / x^4 -> p^2/36 - 1/180 in general
    const Interval q = limit_value(FnId::f_p, p_of("1/2"), LimitPoint::zero_plus, 4);
    CHECK(q.contains(Interval::from_rational(BigRational(1, 144) - BigRational(1, 180))));
}

TEST_CASE("values approach the catalogued limits")
{
    const Params p = p_of("1/sqrt(5)");
    const Interval at0 = limit_value(FnId::F_p, p, LimitPoint::zero_plus);
    const Interval at_half_pi = limit_value(FnId::F_p, p, LimitPoint::half_pi_minus);
    double prev0 = INFINITY;
    double prev1 = INFINITY;
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double d0 = std::abs(eval_fn(FnId::F_p, p, Interval(h)).mid() - at0.mid());
        const double d1 = std::abs(eval_fn(FnId::F_p, p, Interval(half_pi().lo() - h)).mid() - at_half_pi.mid());
        CHECK(d0 < prev0);
        CHECK(d1 < prev1);
        prev0 = d0;
        prev1 = d1;
    }
    CHECK(prev0 < 1e-7);
    CHECK(prev1 < 1e-3);
}

TEST_CASE("even functions are even")
{
    for (FnId id : kAllFunctions) {
        if (!is_even(id)) {
            continue;
        }
        CAPTURE(fn_name(id));
        const Params pr = p_of("1/2");
        for (double x : {0.01, 0.3, 1.1}) {
            CHECK(overlaps(eval_fn(id, pr, Interval(x)), eval_fn(id, pr, Interval(-x))));
        }
    }
}

TEST_CASE("double and extended tiers overlap")
{
    std::mt19937_64 rng(3);
    std::size_t compared = 0;
    for (FnId id : kAllFunctions) {
        const FnDomain d = natural_domain(id);
        const double lo = std::max(d.lo, 0.1);
        const double hi = std::min(d.hi, 1.5);
        if (!(lo < hi)) {
            continue;
        }
        std::uniform_real_distribution<double> u(lo, hi);
        const Params pr = p_of("1/2");
        for (int i = 0; i < 20; ++i) {
            const double x = u(rng);
            if (std::abs(x - 1.0) < 1e-3) {
                continue;
            }
            CAPTURE(fn_name(id));
            CAPTURE(x);
            const Interval a = eval_fn(id, pr, Interval(x));
            const Interval b = to_double_interval(eval_fn(id, pr, MpInterval(x)));
            CHECK(overlaps(a, b));
            CHECK(b.width() <= a.width() + 1e-300);
            ++compared;
        }
    }
    CHECK(compared > 300);
}

TEST_CASE("sampled chain order with the extended tier")
{
    const Manifest m = bundled_manifest("theorems");
    const TaskSpec* chain = nullptr;
    for (const TaskSpec& t : m.tasks) {
        if (t.kind == TaskKind::chain) {
            chain = &t;
        }
    }
    REQUIRE(chain != nullptr);
    std::vector<Member> members;
    for (const MemberSpec& s : chain->members) {
        members.push_back(build_member(s));
    }
    const double lo = expression_interval(chain->domain_lo).hi();
    const double hi = expression_interval(chain->domain_hi).lo();
    std::size_t violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / 1000.0;
        const MpInterval X(x);
        MpInterval prev = eval_fn(members[0].id, members[0].params, X);
        for (std::size_t j = 1; j < members.size(); ++j) {
            const MpInterval cur = eval_fn(members[j].id, members[j].params, X);
            if (!certainly_less(prev, cur)) {
                ++violations;
            }
            prev = cur;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("unknown names and domains")
{
    CHECK_THROWS_AS(parse_fn("nope"), UsageError);
    CHECK(parse_fn("f_p") == FnId::f_p);
    CHECK_THROWS(eval_fn(FnId::log_sin, Params{}, Interval(-1.0, -0.5)));
}
