#include "trigcert/suite.hpp"

#include "trigcert/constants.hpp"
#include "trigcert/expression.hpp"
#include "trigcert/quadrature.hpp"
#include "trigcert/sequences.hpp"

#include <gmp.h>
#include <json.hpp>
#include <sys/utsname.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace trigcert {

namespace {

using json = nlohmann::ordered_json;
using MT = RoundingTraits<MpReal>;

std::string verdict_text(Verdict v)
{
    switch (v) {
    case Verdict::proved: return "PROVED";
    case Verdict::unproved: return "UNPROVED";
    case Verdict::error: return "ERROR";
    }
    return "ERROR";
}

MpInterval mp_of(const std::string& text) { return evaluate_expression(text).mp; }

/// [q - u, q + u] for u one unit in the last printed digit.
MpInterval mp_reading(const std::string& decimal)
{
    const BigRational q = BigRational::parse(decimal);
    const auto dot = decimal.find('.');
    long digits = 0;
    if (dot != std::string::npos) {
        for (std::size_t i = dot + 1; i < decimal.size() && std::isdigit(static_cast<unsigned char>(decimal[i])); ++i) {
            ++digits;
        }
    }
    const BigRational unit = BigRational(1) / BigRational(10).pow(digits);
    return MpInterval(MpReal::from_rational(q - unit, MPFR_RNDD), MpReal::from_rational(q + unit, MPFR_RNDU));
}

long decimals_of(const std::string& decimal)
{
    const auto dot = decimal.find('.');
    return dot == std::string::npos ? 0 : static_cast<long>(decimal.size() - dot - 1);
}

Budget budget_for(const TaskSpec& t, const RunOptions& o)
{
    Budget b;
    if (o.max_depth) {
        b.max_depth = *o.max_depth;
    }
    if (t.max_depth) {
        b.max_depth = *t.max_depth;
    }
    if (t.max_evaluations) {
        b.max_evaluations = *t.max_evaluations;
    }
    return b;
}

void absorb(TaskResult& r, const Certificate& c)
{
    r.verdict = verdict_text(c.verdict);
    r.witness = c.witness;
    r.evaluations += c.evaluations;
    if (c.enclosure) {
        r.enclosure = c.enclosure;
    }
    r.evidence.insert(r.evidence.end(), c.evidence.begin(), c.evidence.end());
    if (!c.error.empty()) {
        r.detail = c.error;
    }
}

void run_sign(const TaskSpec& t, const RunOptions& o, TaskResult& r)
{
    std::vector<Member> ms;
    for (const auto& m : t.members) {
        ms.push_back(build_member(m));
    }
    const SignTarget target = t.target == "fn"     ? SignTarget::fn(ms[0])
                              : t.target == "diff" ? SignTarget::diff(ms[0], ms[1])
                                                   : SignTarget::logdiff(ms[0], ms[1]);
    const int sign = t.sign == "positive" ? 1 : -1;
    const Certificate c = certify_sign(target, expression_interval(t.domain_lo), expression_interval(t.domain_hi),
                                       sign, budget_for(t, o));
    absorb(r, c);
    r.detail = c.task + ": " + std::to_string(c.leaves.size()) + " cells, depth " + std::to_string(c.depth);
    if (!c.error.empty()) {
        r.detail += "; " + c.error;
    }
    if (c.proved() && !replay(target, c)) {
        r.verdict = "ERROR";
        r.detail += "; replay mismatch";
    }
}

void run_chain(const TaskSpec& t, const RunOptions& o, TaskResult& r)
{
    std::vector<Member> ms;
    for (const auto& m : t.members) {
        ms.push_back(build_member(m));
    }
    const ChainResult c =
        certify_chain(ms, expression_interval(t.domain_lo), expression_interval(t.domain_hi), budget_for(t, o));
    absorb(r, c.certificate);
    r.detail = c.certificate.task + ": " + std::to_string(c.links.size()) + " link(s)";
    for (const auto& link : c.links) {
        r.evidence.push_back(link.task + " " + verdict_text(link.verdict) + " (" + std::to_string(link.leaves.size()) +
                             " cells)");
    }
    if (!c.certificate.error.empty()) {
        r.detail += "; " + c.certificate.error;
    }
}

bool fixed_prefix_ok(const MpInterval& x, const std::string& prefix)
{
    const int decimals = static_cast<int>(decimals_of(prefix)) + 4;
    const std::string lo = x.lo().to_fixed(decimals, MPFR_RNDD);
    const std::string hi = x.hi().to_fixed(decimals, MPFR_RNDU);
    return lo.rfind(prefix, 0) == 0 && hi.rfind(prefix, 0) == 0;
}

ConstantResult reading_check(const std::string& name, const std::string& paper, const MpInterval& value)
{
    ConstantResult c;
    c.name = name;
    c.paper_decimal = paper;
    c.enclosure = value;
    const MpInterval reading = mp_reading(paper);
    const MpReal tol = MpReal::from_rational(BigRational(1) / BigRational(10).pow(decimals_of(paper)), MPFR_RNDD);
    c.pass = overlaps(reading, value) && value.width() <= tol;
    c.note = c.pass ? "reading +-1 in the last digit meets the enclosure"
                    : "reading " + reading.str(static_cast<int>(decimals_of(paper)) + 3) + " misses the enclosure";
    return c;
}

void run_root(const TaskSpec& t, TaskResult& r, ConstantResult* constant)
{
    const RootProblem problem = t.problem == "p1" ? root_problem_p1() : root_problem_h(p1_enclosure());
    const MpInterval bracket(mp_of(t.bracket_lo).lo(), mp_of(t.bracket_hi).hi());
    const double goal = expression_interval(t.width).lo();
    const RootEnclosure root = certify_root(problem, bracket, goal);
    absorb(r, root.certificate);
    r.enclosure = root.bracket;
    bool ok = root.certificate.proved();
    const MpReal goal_mp(goal);
    if (!(root.bracket.width() <= goal_mp)) {
        ok = false;
        r.evidence.push_back("width above goal " + t.width);
    }
    r.detail = problem.name + ": " + root.bracket.str(24);
    if (!t.prefix.empty()) {
        const bool pre = fixed_prefix_ok(root.bracket, t.prefix);
        r.evidence.push_back(std::string("decimal prefix ") + t.prefix + (pre ? " matches" : " does not match"));
        ok = ok && pre;
    }
    if (!t.expect_lo.empty()) {
        const MpInterval expect(MpReal::from_rational(BigRational::parse(t.expect_lo), MPFR_RNDD),
                                MpReal::from_rational(BigRational::parse(t.expect_hi), MPFR_RNDU));
        bool inside = expect.contains(root.bracket);
        bool agrees = false;
        if (!inside && !t.agree.empty()) {
            const MpReal tol = mp_of(t.agree).lo();
            const MpReal lo_gap = MT::sub(expect.lo(), root.bracket.lo(), Rounding::up);
            const MpReal hi_gap = MT::sub(root.bracket.hi(), expect.hi(), Rounding::up);
            agrees = lo_gap <= tol && hi_gap <= tol;
        }
        const MpReal gap = MT::sub(root.bracket.mid(), expect.mid(), Rounding::down);
        r.evidence.push_back("expected [" + t.expect_lo + ", " + t.expect_hi + "]: " +
                             (inside ? "contained" : agrees ? "agrees within " + t.agree : "not contained") +
                             ", midpoint gap " + gap.to_string(3, MPFR_RNDN));
        if (!inside && !agrees) {
            ok = false;
            r.witness = to_double_interval(root.bracket);
        }
    }
    if (r.verdict == "PROVED" && !ok) {
        r.verdict = "UNPROVED";
    }
    if (constant != nullptr && !t.paper_decimal.empty()) {
        *constant = reading_check(t.id, t.paper_decimal, root.bracket);
        constant->pass = constant->pass && ok;
    }
}

void run_seq(const TaskSpec& t, TaskResult& r)
{
    if (t.check == "u_negative") {
        absorb(r, certify_seq_negative(expression_interval(t.p)));
        r.detail = "u_n < 0 for all n >= 1 at p = " + t.p;
        return;
    }
    std::vector<BigRational> p2;
    for (const auto& s : t.p2) {
        p2.push_back(*evaluate_expression(s).exact);
    }
    absorb(r, certify_ratio_identity(p2, t.n_max));
    r.detail = "closed-form ratio difference, n <= " + std::to_string(t.n_max) + ", " + std::to_string(p2.size()) +
               " value(s) of p^2";
}

/// width (upper - lower) of a catalogued pair or of "lo : hi"
std::pair<Interval, std::string> bound_width(const std::string& item)
{
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
        const BoundPair b = bound_pair(item);
        return {expression_interval(b.upper) - expression_interval(b.lower), b.id};
    }
    const std::string lo = item.substr(0, colon);
    const std::string hi = item.substr(colon + 1);
    return {expression_interval(hi) - expression_interval(lo), "(" + lo + "," + hi + ")"};
}

void run_integral(const TaskSpec& t, TaskResult& r)
{
    bool ok = true;
    if (!t.bound.empty()) {
        const BoundPair pair = bound_pair(t.bound, t.arg);
        const Certificate c = t.decimal.empty() ? check_integral_bounds(pair) : check_decimal_bounds(pair, t.decimal);
        absorb(r, c);
        r.detail = c.task;
        ok = c.proved();
        if (c.enclosure && !t.width.empty()) {
            const MpReal w = mp_of(t.width).lo();
            const bool narrow = c.enclosure->width() <= w;
            r.evidence.push_back("width " + c.enclosure->width().to_string(3, MPFR_RNDU) + (narrow ? " <= " : " > ") +
                                 t.width);
            ok = ok && narrow;
        }
        if (c.enclosure && !t.contains.empty()) {
            const MpInterval want = mp_of(t.contains);
            const bool in = c.enclosure->contains(want);
            r.evidence.push_back("closed form " + t.contains + " = " + want.str(20) + (in ? " lies inside" : " is not inside") +
                                 " the enclosure");
            ok = ok && in;
        }
        if (c.enclosure && !t.contains_decimal.empty()) {
            const bool in = overlaps(*c.enclosure, mp_reading(t.contains_decimal));
            r.evidence.push_back("reference " + t.contains_decimal + " (+-1 in the last digit)" + (in ? " meets" : " misses") + " the enclosure");
            ok = ok && in;
        }
    }
    if (t.bound.empty() && !t.members.empty()) {
        const Member m = build_member(t.members.front());
        IntegralTask task{m.id, m.params, expression_interval(t.domain_lo), expression_interval(t.domain_hi),
                          t.width.empty() ? 1e-10 : expression_interval(t.width).lo()};
        const IntegralResult ir = integrate_enclose(task);
        r.enclosure = from_double_interval<MpReal>(ir.enclosure);
        r.evaluations += ir.evaluations;
        r.verdict = "PROVED";
        r.detail = "int " + member_text(m) + " over [" + t.domain_lo + ", " + t.domain_hi + "] in " +
                   std::to_string(ir.cells) + " cells";
        if (!t.contains.empty()) {
            const MpInterval want = mp_of(t.contains);
            const bool in = r.enclosure->contains(want);
            r.evidence.push_back("closed form " + t.contains + " = " + want.str(20) + (in ? " lies inside" : " is not inside") +
                                 " the enclosure " + r.enclosure->str(20));
            ok = ok && in;
        }
    }
    if (!t.compare_width.empty()) {
        const auto [first, first_name] = bound_width(t.compare_width.front());
        for (std::size_t i = 1; i < t.compare_width.size(); ++i) {
            const auto [other, other_name] = bound_width(t.compare_width[i]);
            const bool narrower = certainly_less(first, other);
            r.evidence.push_back("width " + first_name + " = " + first.str(6) + (narrower ? " < " : " not < ") +
                                 "width " + other_name + " = " + other.str(6));
            ok = ok && narrower;
        }
        if (r.detail.empty()) {
            r.detail = "width comparison of " + first_name + " against " +
                       std::to_string(t.compare_width.size() - 1) + " prior bound(s)";
        }
        if (r.verdict.empty()) {
            r.verdict = "PROVED";
        }
    }
    if (r.verdict == "PROVED" && !ok) {
        r.verdict = "UNPROVED";
    }
}

void run_constant(const TaskSpec& t, TaskResult& r, ConstantResult* constant)
{
    const MpInterval value = mp_of(t.expr);
    r.enclosure = value;
    r.evaluations = 1;
    ConstantResult c;
    c.name = t.id;
    c.paper_decimal = t.paper_decimal;
    c.enclosure = value;
    bool pass = true;
    std::vector<std::string> notes;
    if (!t.paper_decimal.empty()) {
        if (t.compare == "round") {
            const int d = static_cast<int>(decimals_of(t.paper_decimal));
            const std::string lo = value.lo().to_fixed(d, MPFR_RNDN);
            const std::string hi = value.hi().to_fixed(d, MPFR_RNDN);
            c.approximate = true;
            const bool ok = lo == t.paper_decimal && hi == t.paper_decimal;
            notes.push_back("approximate: enclosure rounds to " + (lo == hi ? lo : lo + " .. " + hi) +
                            " at " + std::to_string(d) + " decimals");
            pass = pass && ok;
        } else {
            const ConstantResult rc = reading_check(t.id, t.paper_decimal, value);
            notes.push_back(rc.note);
            pass = pass && rc.pass;
        }
    }
    if (!t.alt_expr.empty()) {
        const MpInterval alt = mp_of(t.alt_expr);
        const MpReal limit = t.width.empty() ? MpReal(1e-10) : mp_of(t.width).lo();
        const bool ok = overlaps(value, alt) && value.width() <= limit && alt.width() <= limit;
        notes.push_back("closed form " + t.alt_expr + " = " + alt.str(20) + (ok ? " overlaps" : " does not overlap"));
        pass = pass && ok;
        r.evaluations = 2;
    }
    c.pass = pass;
    for (const auto& n : notes) {
        c.note += (c.note.empty() ? "" : "; ") + n;
    }
    r.verdict = pass ? "PASS" : "FAIL";
    r.detail = t.expr + " = " + value.str(20);
    r.evidence = notes;
    if (constant != nullptr) {
        *constant = c;
    }
}

void run_observe(const TaskSpec& t, TaskResult& r)
{
    const Member m = build_member(t.members.front());
    std::vector<Interval> values;
    std::string table;
    for (const auto& s : t.samples) {
        const Interval x = expression_interval(s);
        const Interval v = eval_fn(m.id, m.params, x);
        values.push_back(v);
        r.evidence.push_back(member_text(m) + "(" + s + ") = " + v.str(12));
        ++r.evaluations;
    }
    int up = 0;
    int down = 0;
    int unclear = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (certainly_less(values[i - 1], values[i])) {
            ++up;
        } else if (certainly_less(values[i], values[i - 1])) {
            ++down;
        } else {
            ++unclear;
        }
    }
    std::string trend = "mixed";
    if (up > 0 && down == 0 && unclear == 0) {
        trend = "increasing on the samples";
    } else if (down > 0 && up == 0 && unclear == 0) {
        trend = "decreasing on the samples";
    } else if (unclear > 0 && up == 0 && down == 0) {
        trend = "unresolved";
    }
    r.verdict = "OBSERVED";
    r.detail = "observed, not certified: " + trend + " (" + std::to_string(up) + " up, " + std::to_string(down) +
               " down, " + std::to_string(unclear) + " unresolved steps)";
}

bool is_passing(const std::string& verdict) { return verdict == "PROVED" || verdict == "PASS" || verdict == "OBSERVED"; }

std::string environment_os()
{
    utsname u{};
    if (uname(&u) == 0) {
        return std::string(u.sysname) + " " + u.release + " " + u.machine;
    }
    return "unknown";
}

json interval_json(const MpInterval& x, int digits)
{
    json j;
    j["lo"] = x.lo().to_string(digits, MPFR_RNDD);
    j["hi"] = x.hi().to_string(digits, MPFR_RNDU);
    j["rounding"] = "outward";
    return j;
}

} // namespace

TaskResult run_task(const TaskSpec& task, const RunOptions& options, ConstantResult* constant_out)
{
    TaskResult r;
    r.id = task.id;
    r.kind = task.kind;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (task.kind) {
        case TaskKind::sign: run_sign(task, options, r); break;
        case TaskKind::chain: run_chain(task, options, r); break;
        case TaskKind::root: run_root(task, r, constant_out); break;
        case TaskKind::seq: run_seq(task, r); break;
        case TaskKind::integral: run_integral(task, r); break;
        case TaskKind::constant: run_constant(task, r, constant_out); break;
        case TaskKind::observe: run_observe(task, r); break;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        r.verdict = task.kind == TaskKind::constant ? "FAIL" : "ERROR";
        r.detail = e.what();
        if (constant_out != nullptr && (task.kind == TaskKind::constant || !task.paper_decimal.empty())) {
            constant_out->name = task.id;
            constant_out->paper_decimal = task.paper_decimal;
            constant_out->pass = false;
            constant_out->note = e.what();
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report run_manifest(const Manifest& manifest, const RunOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = manifest.tasks.size();
    std::vector<TaskResult> results(n);
    std::vector<std::optional<ConstantResult>> constants(n);
    std::vector<std::exception_ptr> failures(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            const TaskSpec& t = manifest.tasks[i];
            const bool wants_constant = t.kind == TaskKind::constant || !t.paper_decimal.empty();
            ConstantResult c;
            try {
                results[i] = run_task(t, options, wants_constant ? &c : nullptr);
            } catch (...) {
                failures[i] = std::current_exception();
                continue;
            }
            if (wants_constant) {
                constants[i] = c;
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    Report report;
    report.suite = manifest.name;
    report.tasks = std::move(results);
    for (auto& c : constants) {
        if (c) {
            report.constants.push_back(std::move(*c));
        }
    }
    bool pass = true;
    for (const auto& t : report.tasks) {
        pass = pass && is_passing(t.verdict);
    }
    report.status = pass ? "PASS" : "FAIL";
    report.precision_tier = "double (directed rounding) + MPFR " + std::to_string(MpReal::default_precision()) + " bits";
    report.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
#if defined(__clang__)
    report.environment["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
    report.environment["compiler"] = "gcc " __VERSION__;
#endif
    report.environment["mpfr"] = mpfr_get_version();
    report.environment["gmp"] = gmp_version;
    report.environment["os"] = environment_os();
    report.environment["hardware_threads"] = std::to_string(std::thread::hardware_concurrency());
    report.environment["jobs"] = std::to_string(jobs);
    return report;
}

std::string report_json(const Report& report, int digits)
{
    json doc;
    doc["version"] = report.version;
    doc["suite"] = report.suite;
    doc["status"] = report.status;
    json tasks = json::array();
    for (const auto& t : report.tasks) {
        json j;
        j["id"] = t.id;
        j["kind"] = std::string(task_kind_name(t.kind));
        j["verdict"] = t.verdict;
        if (t.enclosure) {
            j["enclosure"] = interval_json(*t.enclosure, digits);
        }
        if (t.witness) {
            j["witness"] = interval_json(from_double_interval<MpReal>(*t.witness), 17);
        }
        j["evaluations"] = t.evaluations;
        j["seconds"] = t.seconds;
        j["detail"] = t.detail;
        j["evidence"] = t.evidence;
        tasks.push_back(j);
    }
    doc["tasks"] = tasks;
    json constants = json::array();
    for (const auto& c : report.constants) {
        json j;
        j["name"] = c.name;
        j["paper_decimal"] = c.paper_decimal;
        j["enclosure_lo"] = c.enclosure ? c.enclosure->lo().to_string(digits, MPFR_RNDD) : "";
        j["enclosure_hi"] = c.enclosure ? c.enclosure->hi().to_string(digits, MPFR_RNDU) : "";
        j["rounding"] = "outward";
        j["pass"] = c.pass;
        j["approximate"] = c.approximate;
        j["note"] = c.note;
        constants.push_back(j);
    }
    doc["constants"] = constants;
    doc["precision_tier"] = report.precision_tier;
    doc["wall_clock_seconds"] = report.wall_clock;
    json env = json::object();
    for (const auto& [k, v] : report.environment) {
        env[k] = v;
    }
    doc["environment"] = env;
    return doc.dump(2) + "\n";
}

std::string report_text(const Report& report, int digits)
{
    std::ostringstream os;
    os << "suite " << (report.suite.empty() ? "(manifest)" : report.suite) << ": " << report.status << "\n";
    for (const auto& t : report.tasks) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3fs", t.seconds);
        os << "  " << t.verdict << "  " << t.id << " [" << task_kind_name(t.kind) << ", " << secs << "] " << t.detail
           << "\n";
        if (t.enclosure) {
            os << "      enclosure " << t.enclosure->str(digits) << "\n";
        }
        if (t.witness) {
            os << "      witness " << t.witness->str(17) << "\n";
        }
        if (!is_passing(t.verdict)) {
            for (const auto& e : t.evidence) {
                os << "      " << e << "\n";
            }
        }
    }
    if (!report.constants.empty()) {
        os << "constants:\n";
        for (const auto& c : report.constants) {
            os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  printed " << c.paper_decimal;
            if (c.enclosure) {
                os << "  enclosure " << c.enclosure->str(digits);
            }
            os << "  " << c.note << "\n";
        }
    }
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.2fs", report.wall_clock);
    os << "precision " << report.precision_tier << ", wall clock " << wall << "\n";
    return os.str();
}

void write_atomically(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw UsageError("cannot write '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            throw UsageError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw UsageError("cannot rename onto '" + path + "': " + ec.message());
    }
}

} // namespace trigcert
