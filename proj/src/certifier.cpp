#include "trigcert/certifier.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/taylor.hpp"

#include <sstream>

namespace trigcert {

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::proved: return "PROVED";
    case Verdict::unproved: return "UNPROVED";
    case Verdict::error: return "ERROR";
    }
    return "ERROR";
}

namespace {

int sign_of(const Interval& x)
{
    if (x.positive()) {
        return 1;
    }
    if (x.negative()) {
        return -1;
    }
    return 0;
}

int sign_of(const MpInterval& x)
{
    if (x.positive()) {
        return 1;
    }
    if (x.negative()) {
        return -1;
    }
    return 0;
}

bool series_form_is_scalable(NearZeroForm f)
{
    return f == NearZeroForm::value || f == NearZeroForm::x_times_s1 || f == NearZeroForm::s2;
}

} // namespace

std::string member_text(const Member& m)
{
    switch (m.id) {
    case FnId::sinc: case FnId::g: case FnId::g_prime: case FnId::cusa: case FnId::gauss_env:
    case FnId::x_over_sin: case FnId::x2_over_sin2: case FnId::log_sin: case FnId::log_2sin:
    case FnId::cos_over_poly: case FnId::one: case FnId::k: case FnId::k1: case FnId::sec6_third:
        return std::string(fn_name(m.id));
    default: break;
    }
    const std::string d = m.params.describe();
    return std::string(fn_name(m.id)) + (d.empty() ? "" : "[" + d + "]");
}

SignTarget::SignTarget(TargetKind kind, Member a, std::optional<Member> b)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), pa_(ParamValues<double>::from(a_.params))
{
    if (b_) {
        pb_ = ParamValues<double>::from(b_->params);
    }
    auto use_series = [&](EvenSeries s) {
        if (auto m = s.leading_index()) {
            shift_ = *m;
            near_ = std::move(s);
        }
    };
    switch (kind_) {
    case TargetKind::fn: {
        fa_.emplace(a_.id, a_.params);
        const auto form = fa_->near_zero_form();
        if (series_form_is_scalable(form)) {
            use_series(*fa_->series());
        } else if (form != NearZeroForm::none) {
            near_direct_ = true;
        }
        break;
    }
    case TargetKind::diff: {
        fa_.emplace(a_.id, a_.params);
        fb_.emplace(b_->id, b_->params);
        const auto fa = fa_->near_zero_form();
        const auto fb = fb_->near_zero_form();
        if (fa == NearZeroForm::value && fb == NearZeroForm::value) {
            use_series(*fa_->series() - *fb_->series());
        } else if (fa != NearZeroForm::none || fb != NearZeroForm::none) {
            near_direct_ = true;
        }
        break;
    }
    case TargetKind::logdiff:
        use_series(log_member_series(a_.id, a_.params) - log_member_series(b_->id, b_->params));
        break;
    }
}

SignTarget SignTarget::fn(Member f) { return SignTarget(TargetKind::fn, std::move(f), std::nullopt); }

SignTarget SignTarget::diff(Member f, Member g) { return SignTarget(TargetKind::diff, std::move(f), std::move(g)); }

SignTarget SignTarget::logdiff(Member f, Member g)
{
    if (!is_chain_member(f.id) || !is_chain_member(g.id)) {
        throw UsageError("logdiff needs chain members, got " + member_text(f) + " and " + member_text(g));
    }
    return SignTarget(TargetKind::logdiff, std::move(f), std::move(g));
}

std::string SignTarget::describe() const
{
    switch (kind_) {
    case TargetKind::fn: return member_text(a_);
    case TargetKind::diff: return member_text(a_) + " - " + member_text(*b_);
    case TargetKind::logdiff: return "ln " + member_text(a_) + " - ln " + member_text(*b_);
    }
    return "";
}

bool SignTarget::has_near_zero() const { return near_.has_value() || near_direct_; }

Interval SignTarget::eval_naive(const Interval& x) const
{
    switch (kind_) {
    case TargetKind::fn: return expr::eval(a_.id, x, pa_);
    case TargetKind::diff: return expr::eval(a_.id, x, pa_) - expr::eval(b_->id, x, *pb_);
    case TargetKind::logdiff: return expr::log_member(a_.id, x, pa_) - expr::log_member(b_->id, x, *pb_);
    }
    throw UsageError("sign target: unknown kind");
}

Interval SignTarget::eval_direct(const Interval& x) const
{
    if (kind_ == TargetKind::fn) {
        return fa_->eval_direct(x);
    }
    const Interval naive = eval_naive(x);
    if (x.is_point()) {
        return naive;
    }
    try {
        const Interval tf = taylor_enclose<kTaylorOrder>(
            [&](const auto& xx) {
                using S = std::decay_t<decltype(xx)>;
                if (kind_ == TargetKind::diff) {
                    return S(expr::eval(a_.id, xx, pa_) - expr::eval(b_->id, xx, *pb_));
                }
                return S(expr::log_member(a_.id, xx, pa_) - expr::log_member(b_->id, xx, *pb_));
            },
            x);
        if (auto both = intersect(naive, tf)) {
            return *both;
        }
    } catch (const Error&) {
    }
    return naive;
}

Interval SignTarget::eval_scaled_near_zero(const Interval& x) const
{
    if (near_) {
        return near_->eval_scaled(sqr(x), shift_);
    }
    if (near_direct_) {
        if (kind_ == TargetKind::fn) {
            return fa_->eval_near_zero(x);
        }
        return fa_->eval(x) - fb_->eval(x);
    }
    throw UsageError("sign target: no near-zero form for " + describe());
}

namespace {

struct Cell {
    double lo;
    double hi;
    unsigned depth;
};

} // namespace

Certificate certify_sign(const SignTarget& target, const Interval& lo, const Interval& hi, int claimed_sign,
                         const Budget& budget)
{
    Certificate cert;
    {
        std::ostringstream os;
        os << "sign(" << target.describe() << ") " << (claimed_sign > 0 ? "> 0" : "< 0") << " on ["
           << lo.str(10) << ", " << hi.str(10) << "]";
        cert.task = os.str();
    }
    if (claimed_sign != 1 && claimed_sign != -1) {
        throw UsageError("certify_sign: claimed sign must be +1 or -1");
    }
    const double a = lo.lo();
    const double b = hi.hi();
    if (!(a < b)) {
        throw UsageError("certify_sign: empty domain");
    }
    auto check_domain = [&](FnId id) {
        const FnDomain d = natural_domain(id);
        const bool lo_ok = a > d.lo || (a == d.lo && (!d.open_lo || a == 0.0));
        const bool hi_ok = b < d.hi || (b == d.hi && !d.open_hi);
        if (!lo_ok || !hi_ok) {
            throw DomainError("[" + lo.str(10) + ", " + hi.str(10) + "] leaves the natural domain of " +
                              std::string(fn_name(id)));
        }
    };
    try {
        check_domain(target.first().id);
        if (target.second()) {
            check_domain(target.second()->id);
        }
    } catch (const DomainError& e) {
        cert.verdict = Verdict::error;
        cert.error = e.what();
        return cert;
    }

    std::vector<Cell> stack;
    const bool split = target.has_near_zero() && a < kNearZero && kNearZero < b;
    if (split) {
        stack.push_back({kNearZero, b, 0});
        stack.push_back({a, kNearZero, 0});
    } else {
        stack.push_back({a, b, 0});
    }
    const bool near_possible = target.has_near_zero();

    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        cert.depth = std::max(cert.depth, c.depth);
        const Interval x(c.lo, c.hi);
        const bool near = near_possible && c.hi <= kNearZero;
        Interval enc;
        bool ok = true;
        std::string failure;
        try {
            ++cert.evaluations;
            enc = near ? target.eval_scaled_near_zero(x) : target.eval_direct(x);
        } catch (const Error& e) {
            ok = false;
            failure = e.what();
        }
        const int s = ok ? sign_of(enc) : 0;
        if (ok && s == claimed_sign) {
            cert.leaves.push_back({c.lo, c.hi, enc, near ? "series" : "taylor", s});
            continue;
        }
        if (ok && s == -claimed_sign) {
            cert.verdict = Verdict::unproved;
            cert.witness = x;
            cert.evidence.push_back("counter-signed cell " + x.str(17) + " -> " + enc.str(17));
            return cert;
        }
        const double mid = 0.5 * c.lo + 0.5 * c.hi;
        const bool can_split = mid > c.lo && mid < c.hi;
        if (c.depth >= budget.max_depth || cert.evaluations >= budget.max_evaluations || !can_split) {
            cert.witness = x;
            if (!ok) {
                cert.verdict = Verdict::error;
                cert.error = failure;
            } else {
                cert.verdict = Verdict::unproved;
                cert.evidence.push_back("undecided cell " + x.str(17) + " -> " + enc.str(17));
            }
            return cert;
        }
        stack.push_back({mid, c.hi, c.depth + 1});
        stack.push_back({c.lo, mid, c.depth + 1});
    }
    cert.verdict = Verdict::proved;
    return cert;
}

bool replay(const SignTarget& target, const Certificate& cert)
{
    if (!cert.proved()) {
        return false;
    }
    for (const auto& leaf : cert.leaves) {
        const Interval x(leaf.lo, leaf.hi);
        Interval enc;
        try {
            enc = leaf.method == "series" ? target.eval_scaled_near_zero(x) : target.eval_direct(x);
        } catch (const Error&) {
            return false;
        }
        if (enc.lo() != leaf.enclosure.lo() || enc.hi() != leaf.enclosure.hi() || sign_of(enc) != leaf.sign) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

using MpT = RoundingTraits<MpReal>;

std::optional<double> exact_double(const MpReal& x)
{
    const double d = x.to_double(MPFR_RNDN);
    if (MpReal(d) == x) {
        return d;
    }
    return std::nullopt;
}

} // namespace

RootEnclosure certify_root(const RootProblem& problem, const MpInterval& bracket, double width_goal,
                           std::size_t max_steps)
{
    RootEnclosure out;
    Certificate& cert = out.certificate;
    cert.task = "root of " + problem.name + " in " + bracket.str(20);
    std::size_t double_evals = 0;
    std::size_t mp_evals = 0;

    auto sign_at = [&](const MpReal& x) {
        ++cert.evaluations;
        if (auto d = exact_double(x)) {
            ++double_evals;
            const int s = sign_of(problem.at_double(Interval(*d)));
            if (s != 0) {
                return s;
            }
        }
        ++mp_evals;
        return sign_of(problem.at_mp(MpInterval(x)));
    };

    MpReal lo = bracket.lo();
    MpReal hi = bracket.hi();
    const int s_lo = sign_at(lo);
    const int s_hi = sign_at(hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
        throw NoSignChange("no certified sign change of " + problem.name + " on " + bracket.str(20) +
                           " (endpoint signs " + std::to_string(s_lo) + ", " + std::to_string(s_hi) + ")");
    }
    out.sign_lo = s_lo;
    out.sign_hi = s_hi;
    const MpReal goal(width_goal);
    std::size_t steps = 0;
    while (MpT::sub(hi, lo, Rounding::up) > goal) {
        if (steps++ >= max_steps) {
            throw PrecisionError("root of " + problem.name + ": width goal not reached in " +
                                 std::to_string(max_steps) + " steps");
        }
        const MpInterval cur(lo, hi);
        const MpReal mid = cur.mid();
        if (!(lo < mid && mid < hi)) {
            throw PrecisionError("root of " + problem.name + ": bracket cannot be split at " +
                                 std::to_string(MpReal::default_precision()) + " bits");
        }
        const int s = sign_at(mid);
        if (s == 0) {
            throw PrecisionError("root of " + problem.name + ": sign undecided at " + mid.to_string(40, MPFR_RNDN) +
                                 " with bracket width " + MpInterval(lo, hi).str(3));
        }
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.bracket = MpInterval(lo, hi);
    cert.enclosure = out.bracket;
    cert.verdict = Verdict::proved;
    cert.depth = static_cast<unsigned>(steps);
    cert.evidence.push_back("bisection steps: " + std::to_string(steps));
    cert.evidence.push_back("evaluations: double tier " + std::to_string(double_evals) + ", extended tier " +
                            std::to_string(mp_evals) + " (" + std::to_string(MpReal::default_precision()) +
                            " bits)");
    cert.evidence.push_back("endpoint signs: " + std::to_string(s_lo) + " at lo, " + std::to_string(s_hi) + " at hi");
    return out;
}

namespace {

template <class R>
BasicInterval<R> f_at_half_pi(const BasicInterval<R>& p)
{
    using I = BasicInterval<R>;
    const I half_pi = constant<R>(Constant::half_pi);
    // ln(sin(pi/2) / (pi/2)) = -ln(pi/2)
    return -log(half_pi) - log(cos(p * half_pi)) / (I(3.0) * sqr(p));
}

template <class R>
BasicInterval<R> h_at(const BasicInterval<R>& x, const BasicInterval<R>& p)
{
    ParamValues<R> pv;
    pv.p = p;
    pv.r = BasicInterval<R>(1.0) / (BasicInterval<R>(3.0) * sqr(p));
    pv.rp2 = BasicInterval<R>::from_rational(BigRational(1, 3));
    return expr::eval(FnId::h, x, pv);
}

} // namespace

RootProblem root_problem_p1()
{
    return {"p -> f_p(pi/2)", [](const Interval& p) { return f_at_half_pi(p); },
            [](const MpInterval& p) { return f_at_half_pi(p); }};
}

RootProblem root_problem_h(const MpInterval& p)
{
    const Interval pd = to_double_interval(p);
    return {"x -> h(x)", [pd](const Interval& x) { return h_at(x, pd); },
            [p](const MpInterval& x) { return h_at(x, p); }};
}

// ---------------------------------------------------------------------------

ChainResult certify_chain(const std::vector<Member>& members, const Interval& lo, const Interval& hi,
                          const Budget& budget)
{
    ChainResult out;
    Certificate& cert = out.certificate;
    cert.task = "chain of " + std::to_string(members.size()) + " members on [" + lo.str(10) + ", " + hi.str(10) + "]";
    if (members.size() < 2) {
        throw UsageError("chain needs at least two members");
    }
    cert.verdict = Verdict::proved;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        Certificate link;
        try {
            link = certify_sign(SignTarget::logdiff(members[i + 1], members[i]), lo, hi, 1, budget);
        } catch (const Error& e) {
            link.task = member_text(members[i]) + " < " + member_text(members[i + 1]);
            link.verdict = Verdict::error;
            link.error = e.what();
        }
        cert.evaluations += link.evaluations;
        cert.depth = std::max(cert.depth, link.depth);
        const std::string text = member_text(members[i]) + " < " + member_text(members[i + 1]);
        cert.evidence.push_back(text + ": " + std::string(verdict_name(link.verdict)) + " (" +
                                std::to_string(link.leaves.size()) + " cells)");
        if (!link.proved() && cert.verdict == Verdict::proved) {
            cert.verdict = link.verdict == Verdict::error ? Verdict::error : Verdict::unproved;
            cert.witness = link.witness;
            cert.error = "first failing link: " + text + (link.error.empty() ? "" : ": " + link.error);
        }
        out.links.push_back(std::move(link));
    }
    return out;
}

} // namespace trigcert
