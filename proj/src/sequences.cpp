#include "trigcert/sequences.hpp"

#include "trigcert/functions.hpp"
#include "trigcert/series.hpp"

#include <array>

namespace trigcert {

namespace {

struct SeqEntry {
    SeqId id;
    std::string_view name;
    bool rational;
};

constexpr std::array<SeqEntry, 9> kSeqs = {{
    {SeqId::a_n, "a_n", true},
    {SeqId::b_n, "b_n", true},
    {SeqId::ratio_diff, "ratio_diff", true},
    {SeqId::ratio_diff_direct, "ratio_diff_direct", true},
    {SeqId::u_n, "u_n", true},
    {SeqId::h1_n, "h1_n", false},
    {SeqId::k_n, "k_n", false},
    {SeqId::s_n, "s_n", false},
    {SeqId::t_n, "t_n", false},
}};

const SeqEntry& seq_entry(SeqId id)
{
    for (const auto& e : kSeqs) {
        if (e.id == id) {
            return e;
        }
    }
    throw UsageError("unknown sequence id");
}

BigRational four_pow(unsigned n) { return BigRational(mpz_class(pow2(2 * n))); }

BigRational a_term(unsigned n)
{
    return four_pow(n) * bernoulli_abs(n) / BigRational(mpz_class(factorial(2 * n)));
}

BigRational b_term(unsigned n, const BigRational& p2)
{
    return (four_pow(n) - BigRational(1)) * a_term(n) * p2.pow(static_cast<long>(n) - 1);
}

void need_n(unsigned n, unsigned min, SeqId id)
{
    if (n < min) {
        throw DomainError(std::string(seq_name(id)) + ": n must be >= " + std::to_string(min));
    }
}

Interval k_enclosure(unsigned n)
{
    need_n(n, 2, SeqId::k_n);
    const BigRational base = BigRational(3) / (four_pow(n) - BigRational(1));
    return pow_rational(Interval::from_rational(base), BigRational(1, static_cast<long>(2 * n - 2)));
}

} // namespace

std::string_view seq_name(SeqId id) { return seq_entry(id).name; }

SeqId parse_seq(std::string_view name)
{
    for (const auto& e : kSeqs) {
        if (e.name == name) {
            return e.id;
        }
    }
    throw UsageError("unknown sequence '" + std::string(name) + "'");
}

bool is_rational_seq(SeqId id) { return seq_entry(id).rational; }

BigRational eval_seq(SeqId id, unsigned n, const BigRational& p2)
{
    need_n(n, 1, id);
    if (p2.sign() <= 0) {
        throw DomainError("eval_seq: p^2 must be positive");
    }
    switch (id) {
    case SeqId::a_n: return a_term(n);
    case SeqId::b_n: return b_term(n, p2);
    case SeqId::ratio_diff: {
        const BigRational m = four_pow(n + 1) - BigRational(1);
        return m * p2.pow(static_cast<long>(n) - 1) *
               (p2 - BigRational(1, 4) + BigRational(3) / (BigRational(4) * m));
    }
    case SeqId::ratio_diff_direct:
        return b_term(n + 1, p2) / a_term(n + 1) - b_term(n, p2) / a_term(n);
    case SeqId::u_n: {
        const BigRational two_n(static_cast<long>(2 * n));
        return (four_pow(n) - BigRational(1)) * (two_n - BigRational(10)) * p2.pow(static_cast<long>(n) - 1) -
               BigRational(3) * (two_n - BigRational(1));
    }
    default: break;
    }
    throw UsageError(std::string(seq_name(id)) + " is not rational; use eval_seq_enclosure");
}

Interval eval_seq_enclosure(SeqId id, unsigned n, const Interval& p)
{
    need_n(n, 1, id);
    switch (id) {
    case SeqId::a_n: return Interval::from_rational(a_term(n));
    case SeqId::b_n:
        return Interval::from_rational(a_term(n) * (four_pow(n) - BigRational(1))) *
               pow(sqr(p), static_cast<long>(n) - 1);
    case SeqId::ratio_diff:
    case SeqId::ratio_diff_direct: {
        const Interval m = Interval::from_rational(four_pow(n + 1) - BigRational(1));
        const Interval p2 = sqr(p);
        return m * pow(p2, static_cast<long>(n) - 1) *
               (p2 - Interval(0.25) + Interval(3.0) / (Interval(4.0) * m));
    }
    case SeqId::u_n: {
        const double two_n = 2.0 * n;
        return Interval::from_rational(four_pow(n) - BigRational(1)) * Interval(two_n - 10.0) *
                   pow(sqr(p), static_cast<long>(n) - 1) -
               Interval(3.0 * (two_n - 1.0));
    }
    case SeqId::h1_n: {
        need_n(n, 6, id);
        const BigRational base = BigRational(static_cast<long>(3 * (2 * n - 1))) /
                                 ((four_pow(n) - BigRational(1)) * BigRational(static_cast<long>(2 * n - 10)));
        return pow_rational(Interval::from_rational(base), BigRational(1, static_cast<long>(2 * n - 2)));
    }
    case SeqId::k_n: return k_enclosure(n);
    case SeqId::t_n: return p - k_enclosure(n);
    case SeqId::s_n: {
        need_n(n, 2, id);
        const BigRational m = four_pow(n) - BigRational(1);
        const Interval lead = Interval::from_rational(m * a_term(n) / BigRational(3));
        const Interval num = pow(p, static_cast<long>(2 * n - 2)) - Interval::from_rational(BigRational(3) / m);
        return lead * num / (p - k_enclosure(n));
    }
    }
    throw UsageError("unknown sequence id");
}

Certificate certify_seq_negative(const Interval& p)
{
    Certificate cert;
    cert.task = "u_n < 0 for all n >= 1, p in " + p.str(17);
    if (!(p.lo() > 0.0 && p.hi() < 0.5)) {
        throw UsageError("certify_seq_negative: p must lie inside (0, 1/2), got " + p.str(17));
    }
    bool ok = true;
    // (i) prefix n = 1..5; u_n is monotone in p^2, so both endpoints cover P
    for (const double end : {p.lo(), p.hi()}) {
        const BigRational q = BigRational::from_double(end);
        const BigRational q2 = q * q;
        for (unsigned n = 1; n <= 5; ++n) {
            const BigRational u = eval_seq(SeqId::u_n, n, q2);
            ++cert.evaluations;
            const bool neg = u.sign() < 0;
            ok = ok && neg;
            cert.evidence.push_back("u_" + std::to_string(n) + "(p=" + Interval(end).str(17) + ") = " +
                                    Interval::from_rational(u).str(12) + (neg ? " < 0" : " NOT < 0"));
        }
    }
    // (ii) gate p.hi < k(6) = 1365^(-1/10)
    const Interval k6_fn = eval_fn(FnId::k, Params{}, Interval(6.0));
    const Interval k6_closed = pow_rational(Interval(1365.0), BigRational(-1, 10));
    cert.evaluations += 2;
    const auto k6 = intersect(k6_fn, k6_closed);
    if (!k6) {
        cert.verdict = Verdict::error;
        cert.error = "k(6) enclosures disagree: " + k6_fn.str() + " vs " + k6_closed.str();
        return cert;
    }
    const bool gate = p.hi() < k6->lo();
    cert.evidence.push_back("k(6) = " + k6->str(17) + (gate ? " > p.hi" : " NOT > p.hi"));
    cert.enclosure = from_double_interval<MpReal>(*k6);
    ok = ok && gate;
    // (iii) monotone-k tail instantiated on n = 6..64: h1(n) > k(n) >= k(6) > p.hi
    if (gate) {
        for (unsigned n = 6; n <= 64; ++n) {
            const Interval h1 = eval_seq_enclosure(SeqId::h1_n, n, p);
            const Interval kn = k_enclosure(n);
            cert.evaluations += 2;
            if (!(certainly_less(kn, h1) && !certainly_less(kn, *k6) && certainly_less(p, kn))) {
                ok = false;
                cert.evidence.push_back("tail check failed at n = " + std::to_string(n));
                break;
            }
        }
        if (ok) {
            cert.evidence.push_back("tail: h1(n) > k(n) >= k(6) > p.hi checked for n = 6..64; k increasing beyond");
        }
    }
    cert.verdict = ok ? Verdict::proved : Verdict::unproved;
    if (!ok) {
        cert.witness = p;
    }
    return cert;
}

Certificate certify_ratio_identity(const std::vector<BigRational>& p_squared, unsigned n_max)
{
    Certificate cert;
    cert.task = "ratio_diff closed form == direct difference for n <= " + std::to_string(n_max);
    bool ok = true;
    for (const auto& p2 : p_squared) {
        unsigned mismatches = 0;
        bool pattern = true;
        for (unsigned n = 1; n <= n_max; ++n) {
            const BigRational closed = eval_seq(SeqId::ratio_diff, n, p2);
            const BigRational direct = eval_seq(SeqId::ratio_diff_direct, n, p2);
            ++cert.evaluations;
            if (!(closed == direct)) {
                ++mismatches;
            }
            if (p2 <= BigRational(1, 5) && closed.sign() > 0) {
                pattern = false;
            }
            if (p2 >= BigRational(1, 4) && closed.sign() <= 0) {
                pattern = false;
            }
        }
        ok = ok && mismatches == 0 && pattern;
        cert.evidence.push_back("p^2 = " + p2.to_string() + ": " + std::to_string(mismatches) + " mismatches, sign " +
                                (pattern ? "as claimed" : "VIOLATED"));
    }
    cert.verdict = ok ? Verdict::proved : Verdict::unproved;
    return cert;
}

} // namespace trigcert
