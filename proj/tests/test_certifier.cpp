#include "trigcert/certifier.hpp"
#include "trigcert/constants.hpp"
#include "trigcert/expression.hpp"
#include "trigcert/suite.hpp"

#include <doctest.h>

#include <future>
#include <random>

using namespace trigcert;

namespace {

Member f_at(const std::string& p) { return {FnId::f_p, Params::with_p(expression_scalar(p))}; }

const Interval upper_end() { return expression_interval("pi/2 - 1/1024"); }

std::vector<Member> chain_members(const std::string& suite, const std::string& id)
{
    for (const TaskSpec& t : bundled_manifest(suite).tasks) {
        if (t.id == id) {
            std::vector<Member> out;
            for (const MemberSpec& s : t.members) {
                out.push_back(build_member(s));
            }
            return out;
        }
    }
    throw UsageError("no task " + id);
}

MpInterval reference(const std::string& v, const std::string& unit)
{
    const MpReal c = MpReal::from_string(v, MPFR_RNDN);
    const MpReal u = MpReal::from_string(unit, MPFR_RNDU);
    return MpInterval(c, c) + MpInterval(-u, u);
}

} // namespace

TEST_CASE("sign of f_p on both sides of p1")
{
    const SignTarget neg = SignTarget::fn(f_at("1/sqrt(5)"));
    const Certificate a = certify_sign(neg, Interval(0.0), upper_end(), -1);
    CHECK(a.verdict == Verdict::proved);
    CHECK(replay(neg, a));

    const SignTarget pos = SignTarget::fn(f_at("1/2"));
    const Certificate b = certify_sign(pos, Interval(0.0), upper_end(), 1);
    CHECK(b.verdict == Verdict::proved);

    const Certificate c = certify_sign(pos, Interval(0.0), upper_end(), -1);
    CHECK(c.verdict == Verdict::unproved);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->lo() >= 0.0);
    CHECK(c.witness->hi() <= upper_end().hi());
}

TEST_CASE("g and g' on [0, 10]")
{
    for (FnId id : {FnId::g, FnId::g_prime}) {
        const Certificate c = certify_sign(SignTarget::fn({id, Params{}}), Interval(0.0), Interval(10.0), 1);
        CHECK(c.verdict == Verdict::proved);
        CHECK(c.leaves.size() > 0);
    }
}

TEST_CASE("p1 root")
{
    const RootEnclosure r = certify_root(root_problem_p1(), MpInterval(MpReal(1.0 / 3), MpReal(0.5)), 1e-14);
    CHECK(r.sign_lo != r.sign_hi);
    CHECK(width_as_double(r.bracket) <= 1e-14);
    CHECK(r.bracket.lo().to_fixed(14, MPFR_RNDD).substr(0, 15) == "0.4534683097706");
    const MpInterval again = certify_root(root_problem_p1(), MpInterval(MpReal(0.4), MpReal(0.5)), 1e-14).bracket;
    CHECK(overlaps(again, r.bracket));
    CHECK(overlaps(p1_enclosure(), reference("0.45346830977067338850", "1e-20")));
    CHECK_THROWS_AS(certify_root(root_problem_p1(), MpInterval(MpReal(0.1), MpReal(0.2)), 1e-10), NoSignChange);
}

TEST_CASE("x0 root against an independent value")
{
    const MpInterval& x0 = x0_enclosure();
    CHECK(width_as_double(x0) < 1e-20);
    // reference from a separate high-precision solve
    CHECK(overlaps(x0, reference("1.3118787361576094358", "1e-19")));
    CHECK_FALSE(overlaps(x0, reference("1.3118787361572763", "1e-16")));
}

TEST_CASE("root brackets shrink with the width goal")
{
    MpInterval prev(MpReal(1.0 / 3), MpReal(0.5));
    for (double w : {1e-4, 1e-8, 1e-12, 1e-16}) {
        const MpInterval b = certify_root(root_problem_p1(), MpInterval(MpReal(1.0 / 3), MpReal(0.5)), w).bracket;
        CHECK(prev.contains(b));
        CHECK(width_as_double(b) <= w);
        prev = b;
    }
}

TEST_CASE("chains")
{
    const auto klen = chain_members("prior-work", "prior_chain_3");
    const ChainResult ok = certify_chain(klen, expression_interval("1/1024"), upper_end());
    CHECK(ok.certificate.verdict == Verdict::proved);
    CHECK(ok.links.size() == klen.size() - 1);

    auto swapped = klen;
    std::swap(swapped[0], swapped[1]);
    const ChainResult bad = certify_chain(swapped, expression_interval("1/1024"), upper_end());
    CHECK(bad.certificate.verdict == Verdict::unproved);
}

TEST_CASE("logdiff needs chain members")
{
    CHECK_THROWS_AS(SignTarget::logdiff({FnId::log_sin, Params{}}, {FnId::sinc, Params{}}), UsageError);
}

TEST_CASE("replay is deterministic and detects tampering")
{
    const SignTarget t = SignTarget::fn({FnId::g_prime, Params{}});
    const Certificate a = certify_sign(t, Interval(0.0), Interval(10.0), 1);
    const Certificate b = certify_sign(t, Interval(0.0), Interval(10.0), 1);
    REQUIRE(a.leaves.size() == b.leaves.size());
    for (std::size_t i = 0; i < a.leaves.size(); ++i) {
        CHECK(a.leaves[i].lo == b.leaves[i].lo);
        CHECK(a.leaves[i].enclosure.lo() == b.leaves[i].enclosure.lo());
    }
    CHECK(replay(t, a));
    Certificate tampered = a;
    tampered.leaves[0].enclosure = Interval(5.0, 6.0);
    CHECK_FALSE(replay(t, tampered));
}

TEST_CASE("soundness spot check on 10^4 points")
{
    const Member m = f_at("1/sqrt(5)");
    const SignTarget t = SignTarget::fn(m);
    const Certificate c = certify_sign(t, Interval(0.0), upper_end(), -1);
    REQUIRE(c.proved());
    std::mt19937_64 rng(5);
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const Leaf& leaf = c.leaves[rng() % c.leaves.size()];
        std::uniform_real_distribution<double> u(leaf.lo, leaf.hi);
        const double x = u(rng);
        if (x <= 0.05) {
            continue; // values below the double tier's resolution
        }
        const MpInterval v = eval_fn(m.id, m.params, MpInterval(x));
        if (!(v.hi() < MpReal(0.0))) {
            ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("depth budget")
{
    const SignTarget t = SignTarget::fn(f_at("1/sqrt(5)"));
    Budget tight;
    tight.max_depth = 1;
    const Certificate shallow = certify_sign(t, Interval(0.0), upper_end(), -1, tight);
    CHECK(shallow.verdict != Verdict::proved);
    const Certificate full = certify_sign(t, Interval(0.0), upper_end(), -1);
    CHECK(full.proved());
    CHECK(full.depth > 1);
}

TEST_CASE("concurrent certification agrees with sequential")
{
    const SignTarget t = SignTarget::fn(f_at("1/2"));
    const Certificate ref = certify_sign(t, Interval(0.0), upper_end(), 1);
    std::vector<std::future<Certificate>> futs;
    for (int i = 0; i < 4; ++i) {
        futs.push_back(std::async(std::launch::async, [&] { return certify_sign(t, Interval(0.0), upper_end(), 1); }));
    }
    for (auto& f : futs) {
        const Certificate c = f.get();
        CHECK(c.verdict == ref.verdict);
        CHECK(c.leaves.size() == ref.leaves.size());
        CHECK(c.evaluations == ref.evaluations);
    }
}
