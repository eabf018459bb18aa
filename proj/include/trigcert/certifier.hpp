#pragma once

#include "trigcert/functions.hpp"
#include "trigcert/interval.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trigcert {

enum class Verdict { proved, unproved, error };
std::string_view verdict_name(Verdict v);

/// One closed cell of a sign proof.
struct Leaf {
    double lo = 0.0;
    double hi = 0.0;
    Interval enclosure;
    std::string method; // "series" or "taylor"
    int sign = 0;       // certified sign of the enclosure, 0 if undecided
};

struct Certificate {
    std::string task;
    Verdict verdict = Verdict::error;
    std::vector<Leaf> leaves;
    std::optional<Interval> witness;
    std::optional<MpInterval> enclosure; // root, integral or constant result
    std::vector<std::string> evidence;    // root trace, prefix tables, bound values
    std::size_t evaluations = 0;
    unsigned depth = 0;
    std::string error;

    bool proved() const { return verdict == Verdict::proved; }
};

struct Budget {
    unsigned max_depth = 40;
    std::size_t max_evaluations = 1000000;
};

/// Distance of the open-endpoint inset from 0 and from pi/2.
inline constexpr double kEndpointInset = 1.0 / 1024.0;

// ---------------------------------------------------------------------------
// sign targets

struct Member {
    FnId id;
    Params params;
};

enum class TargetKind {
    fn,      // f
    diff,    // f - g
    logdiff, // ln f - ln g
};

class SignTarget {
public:
    static SignTarget fn(Member f);
    static SignTarget diff(Member f, Member g);
    static SignTarget logdiff(Member f, Member g);

    TargetKind kind() const { return kind_; }
    const Member& first() const { return a_; }
    const std::optional<Member>& second() const { return b_; }
    std::string describe() const;

    /// Enclosure over X >= kNearZero region (naive intersected with Taylor form).
    Interval eval_direct(const Interval& x) const;
    /// Enclosure with the same sign as the target, for X inside [0, kNearZero].
    /// Divides out the leading power of x where the target vanishes at 0.
    Interval eval_scaled_near_zero(const Interval& x) const;
    /// True when eval_scaled_near_zero is available.
    bool has_near_zero() const;

private:
    SignTarget(TargetKind kind, Member a, std::optional<Member> b);

    Interval eval_naive(const Interval& x) const;

    TargetKind kind_;
    Member a_;
    std::optional<Member> b_;
    ParamValues<double> pa_;
    std::optional<ParamValues<double>> pb_;
    std::optional<CatalogFunction> fa_;
    std::optional<CatalogFunction> fb_;
    // near-zero series and the power of t divided out
    std::optional<EvenSeries> near_;
    std::size_t shift_ = 0;
    bool near_direct_ = false; // catalog near-zero form used as is
};

/// Proves sign(target) == claimed_sign on D = [lo, hi]. A lower endpoint of
/// exactly 0 is treated as open and covered by near-zero cells.
Certificate certify_sign(const SignTarget& target, const Interval& lo, const Interval& hi, int claimed_sign,
                         const Budget& budget = {});

/// Re-evaluates every leaf; true iff all reproduce the recorded enclosure and sign.
bool replay(const SignTarget& target, const Certificate& cert);

// ---------------------------------------------------------------------------
// roots

struct RootProblem {
    std::string name;
    std::function<Interval(const Interval&)> at_double;
    std::function<MpInterval(const MpInterval&)> at_mp;
};

struct RootEnclosure {
    MpInterval bracket;
    int sign_lo = 0;
    int sign_hi = 0;
    Certificate certificate;
};

/// Bisection keeping certified opposite signs at the bracket endpoints.
/// Throws NoSignChange / PrecisionError.
RootEnclosure certify_root(const RootProblem& problem, const MpInterval& bracket, double width_goal,
                           std::size_t max_steps = 400);

/// p -> f_p(pi/2)
RootProblem root_problem_p1();
/// x -> h(x) for f_p with p fixed to the given enclosure
RootProblem root_problem_h(const MpInterval& p);

// ---------------------------------------------------------------------------
// chains

struct ChainResult {
    Certificate certificate;
    std::vector<Certificate> links;
};

/// members[i] < members[i+1] on D for every i.
ChainResult certify_chain(const std::vector<Member>& members, const Interval& lo, const Interval& hi,
                          const Budget& budget = {});

std::string member_text(const Member& m);

} // namespace trigcert
