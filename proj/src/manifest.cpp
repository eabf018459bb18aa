#include "trigcert/suite.hpp"

#include "trigcert/expression.hpp"
#include "trigcert/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace trigcert {

// generated from manifests/*.json
const std::vector<std::pair<std::string, std::string>>& bundled_manifest_sources();

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ManifestError("manifest field " + path + ": " + what);
}

const std::vector<std::pair<TaskKind, std::string_view>> kKinds = {
    {TaskKind::sign, "sign"},         {TaskKind::root, "root"},         {TaskKind::seq, "seq"},
    {TaskKind::chain, "chain"},       {TaskKind::integral, "integral"}, {TaskKind::constant, "constant"},
    {TaskKind::observe, "observe"},
};

const std::set<std::string> kTaskKeys = {
    "id",     "kind",   "note",     "target",   "members",          "domain",        "sign",    "problem",
    "bracket", "width", "prefix",   "expect",   "agree",            "check",         "p",       "p2",
    "n_max",  "bound",  "arg",      "decimal",  "contains",         "contains_decimal", "compare_width",
    "expr",   "alt_expr", "paper_decimal", "compare", "samples",    "budget",
};

std::string get_string(const json& obj, const char* key, const std::string& path)
{
    if (!obj.contains(key)) {
        return {};
    }
    const json& v = obj.at(key);
    if (!v.is_string()) {
        fail(path + "." + key, "expected a string (decimal values are written as strings)");
    }
    return v.get<std::string>();
}

std::vector<std::string> get_strings(const json& obj, const char* key, const std::string& path)
{
    std::vector<std::string> out;
    if (!obj.contains(key)) {
        return out;
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
        fail(path + "." + key, "expected an array of strings");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) {
            fail(path + "." + key + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

std::pair<std::string, std::string> get_pair(const json& obj, const char* key, const std::string& path)
{
    const auto v = get_strings(obj, key, path);
    if (v.empty()) {
        return {};
    }
    if (v.size() != 2) {
        fail(path + "." + key, "expected [lo, hi]");
    }
    return {v[0], v[1]};
}

unsigned get_unsigned(const json& v, const std::string& path)
{
    if (!v.is_number_unsigned()) {
        fail(path, "expected a non-negative integer");
    }
    return v.get<unsigned>();
}

void check_expression(const std::string& text, const std::string& path)
{
    try {
        (void)evaluate_expression(text);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

MemberSpec parse_member(const json& m, const std::string& path)
{
    if (!m.is_object()) {
        fail(path, "expected an object {fn, params}");
    }
    for (const auto& [k, v] : m.items()) {
        if (k != "fn" && k != "params") {
            fail(path + "." + k, "unknown key");
        }
    }
    MemberSpec out;
    out.fn = get_string(m, "fn", path);
    if (out.fn.empty()) {
        fail(path + ".fn", "missing function name");
    }
    if (!is_known_fn(out.fn)) {
        fail(path + ".fn", "unknown function '" + out.fn + "'");
    }
    if (m.contains("params")) {
        const json& ps = m.at("params");
        if (!ps.is_object()) {
            fail(path + ".params", "expected an object");
        }
        for (const auto& [k, v] : ps.items()) {
            const std::string fp = path + ".params." + k;
            if (k != "p" && k != "r" && k != "c" && k != "a") {
                fail(fp, "unknown parameter (expected p, r, c or a)");
            }
            if (!v.is_string()) {
                fail(fp, "expected a string");
            }
            out.params[k] = v.get<std::string>();
            if (!(k == "p" && out.params[k] == "0+")) {
                check_expression(out.params[k], fp);
            }
        }
    }
    return out;
}

void require(bool ok, const std::string& path, const std::string& what)
{
    if (!ok) {
        fail(path, what);
    }
}

TaskSpec parse_task(const json& t, const std::string& path)
{
    if (!t.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto& [k, v] : t.items()) {
        if (!kTaskKeys.count(k)) {
            fail(path + "." + k, "unknown key");
        }
    }
    TaskSpec s;
    s.id = get_string(t, "id", path);
    require(!s.id.empty(), path + ".id", "missing task id");
    const std::string kind = get_string(t, "kind", path);
    bool found = false;
    for (const auto& [k, name] : kKinds) {
        if (name == kind) {
            s.kind = k;
            found = true;
        }
    }
    require(found, path + ".kind", "unknown kind '" + kind + "'");
    s.note = get_string(t, "note", path);
    if (t.contains("target")) {
        s.target = get_string(t, "target", path);
    }
    if (t.contains("members")) {
        const json& ms = t.at("members");
        require(ms.is_array(), path + ".members", "expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            s.members.push_back(parse_member(ms[i], path + ".members[" + std::to_string(i) + "]"));
        }
    }
    std::tie(s.domain_lo, s.domain_hi) = get_pair(t, "domain", path);
    s.sign = get_string(t, "sign", path);
    s.problem = get_string(t, "problem", path);
    std::tie(s.bracket_lo, s.bracket_hi) = get_pair(t, "bracket", path);
    s.width = get_string(t, "width", path);
    s.prefix = get_string(t, "prefix", path);
    std::tie(s.expect_lo, s.expect_hi) = get_pair(t, "expect", path);
    s.agree = get_string(t, "agree", path);
    s.check = get_string(t, "check", path);
    s.p = get_string(t, "p", path);
    s.p2 = get_strings(t, "p2", path);
    if (t.contains("n_max")) {
        s.n_max = get_unsigned(t.at("n_max"), path + ".n_max");
    }
    s.bound = get_string(t, "bound", path);
    s.arg = get_string(t, "arg", path);
    s.decimal = get_string(t, "decimal", path);
    s.contains = get_string(t, "contains", path);
    s.contains_decimal = get_string(t, "contains_decimal", path);
    s.compare_width = get_strings(t, "compare_width", path);
    s.expr = get_string(t, "expr", path);
    s.alt_expr = get_string(t, "alt_expr", path);
    s.paper_decimal = get_string(t, "paper_decimal", path);
    s.compare = get_string(t, "compare", path);
    s.samples = get_strings(t, "samples", path);
    if (t.contains("budget")) {
        const json& b = t.at("budget");
        require(b.is_object(), path + ".budget", "expected an object");
        for (const auto& [k, v] : b.items()) {
            if (k == "max_depth") {
                s.max_depth = get_unsigned(v, path + ".budget.max_depth");
            } else if (k == "max_evaluations") {
                if (!v.is_number_unsigned()) {
                    fail(path + ".budget.max_evaluations", "expected a non-negative integer");
                }
                s.max_evaluations = v.get<std::size_t>();
            } else {
                fail(path + ".budget." + k, "unknown key");
            }
        }
    }
    return s;
}

void check_decimal(const std::string& text, const std::string& path)
{
    try {
        (void)BigRational::parse(text);
    } catch (const Error& e) {
        fail(path, "not a decimal string: " + std::string(e.what()));
    }
}

void validate(const TaskSpec& s, const std::string& path)
{
    auto need = [&](const std::string& v, const char* key) { require(!v.empty(), path + "." + key, "required"); };
    auto expr_ok = [&](const std::string& v, const char* key) {
        if (!v.empty()) {
            check_expression(v, path + "." + key);
        }
    };
    auto domain = [&]() {
        need(s.domain_lo, "domain");
        expr_ok(s.domain_lo, "domain[0]");
        expr_ok(s.domain_hi, "domain[1]");
    };
    switch (s.kind) {
    case TaskKind::sign: {
        const std::size_t want = s.target == "fn" ? 1 : 2;
        require(s.target == "fn" || s.target == "diff" || s.target == "logdiff", path + ".target",
                "expected fn, diff or logdiff");
        require(s.members.size() == want, path + ".members", "expected " + std::to_string(want) + " member(s)");
        domain();
        require(s.sign == "positive" || s.sign == "negative", path + ".sign", "expected positive or negative");
        if (s.target == "logdiff") {
            for (std::size_t i = 0; i < s.members.size(); ++i) {
                require(is_chain_member(parse_fn(s.members[i].fn)), path + ".members[" + std::to_string(i) + "].fn",
                        "not usable in a log difference");
            }
        }
        break;
    }
    case TaskKind::chain:
        require(s.members.size() >= 2, path + ".members", "a chain needs at least two members");
        for (std::size_t i = 0; i < s.members.size(); ++i) {
            require(is_chain_member(parse_fn(s.members[i].fn)), path + ".members[" + std::to_string(i) + "].fn",
                    "not a chain member");
        }
        domain();
        break;
    case TaskKind::root:
        require(s.problem == "p1" || s.problem == "x0", path + ".problem", "expected p1 or x0");
        need(s.bracket_lo, "bracket");
        expr_ok(s.bracket_lo, "bracket[0]");
        expr_ok(s.bracket_hi, "bracket[1]");
        need(s.width, "width");
        expr_ok(s.width, "width");
        if (!s.expect_lo.empty()) {
            check_decimal(s.expect_lo, path + ".expect[0]");
            check_decimal(s.expect_hi, path + ".expect[1]");
        }
        expr_ok(s.agree, "agree");
        if (!s.prefix.empty()) {
            check_decimal(s.prefix, path + ".prefix");
        }
        if (!s.paper_decimal.empty()) {
            check_decimal(s.paper_decimal, path + ".paper_decimal");
        }
        break;
    case TaskKind::seq:
        if (s.check == "u_negative") {
            need(s.p, "p");
            expr_ok(s.p, "p");
        } else if (s.check == "ratio_identity") {
            require(!s.p2.empty(), path + ".p2", "required");
            for (std::size_t i = 0; i < s.p2.size(); ++i) {
                const std::string fp = path + ".p2[" + std::to_string(i) + "]";
                check_expression(s.p2[i], fp);
                require(evaluate_expression(s.p2[i]).exact.has_value(), fp, "p^2 must be an exact rational");
            }
        } else {
            fail(path + ".check", "expected u_negative or ratio_identity");
        }
        break;
    case TaskKind::integral:
        require(!s.bound.empty() || !s.compare_width.empty() || s.members.size() == 1, path + ".bound",
                "required (or one integrand member with a domain)");
        if (s.bound.empty() && !s.members.empty()) {
            domain();
        }
        if (!s.bound.empty()) {
            try {
                (void)bound_pair(s.bound, s.arg);
            } catch (const Error& e) {
                fail(path + ".bound", e.what());
            }
        }
        for (std::size_t i = 0; i < s.compare_width.size(); ++i) {
            const std::string& c = s.compare_width[i];
            const std::string fp = path + ".compare_width[" + std::to_string(i) + "]";
            const auto colon = c.find(':');
            if (colon == std::string::npos) {
                try {
                    (void)bound_pair(c);
                } catch (const Error& e) {
                    fail(fp, e.what());
                }
            } else {
                check_expression(c.substr(0, colon), fp);
                check_expression(c.substr(colon + 1), fp);
            }
        }
        if (!s.decimal.empty()) {
            check_decimal(s.decimal, path + ".decimal");
        }
        if (!s.contains_decimal.empty()) {
            check_decimal(s.contains_decimal, path + ".contains_decimal");
        }
        expr_ok(s.contains, "contains");
        expr_ok(s.width, "width");
        break;
    case TaskKind::constant:
        need(s.expr, "expr");
        expr_ok(s.expr, "expr");
        expr_ok(s.alt_expr, "alt_expr");
        expr_ok(s.width, "width");
        require(!s.paper_decimal.empty() || !s.alt_expr.empty(), path, "needs paper_decimal or alt_expr");
        if (!s.paper_decimal.empty()) {
            check_decimal(s.paper_decimal, path + ".paper_decimal");
        }
        require(s.compare.empty() || s.compare == "reading" || s.compare == "round", path + ".compare",
                "expected reading or round");
        break;
    case TaskKind::observe:
        require(s.members.size() == 1, path + ".members", "expected 1 member");
        require(!s.samples.empty(), path + ".samples", "required");
        for (std::size_t i = 0; i < s.samples.size(); ++i) {
            check_expression(s.samples[i], path + ".samples[" + std::to_string(i) + "]");
        }
        break;
    }
}

json member_json(const MemberSpec& m)
{
    json out;
    out["fn"] = m.fn;
    if (!m.params.empty()) {
        json ps = json::object();
        for (const auto& [k, v] : m.params) {
            ps[k] = v;
        }
        out["params"] = ps;
    }
    return out;
}

json task_json(const TaskSpec& s)
{
    json t;
    t["id"] = s.id;
    t["kind"] = std::string(task_kind_name(s.kind));
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) {
            t[key] = v;
        }
    };
    auto put_pair = [&](const char* key, const std::string& lo, const std::string& hi) {
        if (!lo.empty() || !hi.empty()) {
            t[key] = json::array({lo, hi});
        }
    };
    auto put_list = [&](const char* key, const std::vector<std::string>& v) {
        if (!v.empty()) {
            t[key] = v;
        }
    };
    put("note", s.note);
    if (s.target != "fn") {
        t["target"] = s.target;
    }
    if (!s.members.empty()) {
        json ms = json::array();
        for (const auto& m : s.members) {
            ms.push_back(member_json(m));
        }
        t["members"] = ms;
    }
    put_pair("domain", s.domain_lo, s.domain_hi);
    put("sign", s.sign);
    put("problem", s.problem);
    put_pair("bracket", s.bracket_lo, s.bracket_hi);
    put("width", s.width);
    put("prefix", s.prefix);
    put_pair("expect", s.expect_lo, s.expect_hi);
    put("agree", s.agree);
    put("check", s.check);
    put("p", s.p);
    put_list("p2", s.p2);
    if (s.n_max != 50) {
        t["n_max"] = s.n_max;
    }
    put("bound", s.bound);
    put("arg", s.arg);
    put("decimal", s.decimal);
    put("contains", s.contains);
    put("contains_decimal", s.contains_decimal);
    put_list("compare_width", s.compare_width);
    put("expr", s.expr);
    put("alt_expr", s.alt_expr);
    put("paper_decimal", s.paper_decimal);
    put("compare", s.compare);
    put_list("samples", s.samples);
    if (s.max_depth || s.max_evaluations) {
        json b = json::object();
        if (s.max_depth) {
            b["max_depth"] = *s.max_depth;
        }
        if (s.max_evaluations) {
            b["max_evaluations"] = *s.max_evaluations;
        }
        t["budget"] = b;
    }
    return t;
}

Manifest parse_impl(const std::string& text, int include_depth)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t upto = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ManifestError("manifest line " + std::to_string(line) + " column " + std::to_string(col) +
                            ": malformed JSON");
    }
    if (!doc.is_object()) {
        fail("$", "expected a JSON object");
    }
    for (const auto& [k, v] : doc.items()) {
        if (k != "format_version" && k != "name" && k != "include" && k != "tasks") {
            fail(k, "unknown key");
        }
    }
    Manifest m;
    if (!doc.contains("format_version")) {
        fail("format_version", "required");
    }
    if (!doc.at("format_version").is_number_integer() || doc.at("format_version").get<int>() != kManifestFormat) {
        fail("format_version", "expected " + std::to_string(kManifestFormat));
    }
    m.name = get_string(doc, "name", "$");
    for (const auto& inc : get_strings(doc, "include", "$")) {
        if (include_depth > 4) {
            fail("include", "nested too deeply");
        }
        const auto& sources = bundled_manifest_sources();
        auto it = std::find_if(sources.begin(), sources.end(), [&](const auto& s) { return s.first == inc; });
        if (it == sources.end()) {
            fail("include", "unknown bundled suite '" + inc + "'");
        }
        Manifest sub = parse_impl(it->second, include_depth + 1);
        m.tasks.insert(m.tasks.end(), sub.tasks.begin(), sub.tasks.end());
    }
    if (doc.contains("tasks")) {
        const json& ts = doc.at("tasks");
        if (!ts.is_array()) {
            fail("tasks", "expected an array");
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
            m.tasks.push_back(parse_task(ts[i], "tasks[" + std::to_string(i) + "]"));
        }
    }
    if (include_depth == 0) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < m.tasks.size(); ++i) {
            const std::string path = "tasks[" + std::to_string(i) + "] (" + m.tasks[i].id + ")";
            if (!ids.insert(m.tasks[i].id).second) {
                fail(path + ".id", "duplicate task id");
            }
            validate(m.tasks[i], path);
        }
    }
    return m;
}

} // namespace

std::string_view task_kind_name(TaskKind k)
{
    for (const auto& [kind, name] : kKinds) {
        if (kind == k) {
            return name;
        }
    }
    return "?";
}

Manifest parse_manifest(const std::string& json_text) { return parse_impl(json_text, 0); }

Manifest load_manifest_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read manifest '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

std::string serialize_manifest(const Manifest& m)
{
    json doc;
    doc["format_version"] = m.format_version;
    if (!m.name.empty()) {
        doc["name"] = m.name;
    }
    json ts = json::array();
    for (const auto& t : m.tasks) {
        ts.push_back(task_json(t));
    }
    doc["tasks"] = ts;
    return doc.dump(2) + "\n";
}

std::vector<std::string> bundled_suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, text] : bundled_manifest_sources()) {
        out.push_back(name);
    }
    return out;
}

std::string bundled_manifest_text(const std::string& name)
{
    for (const auto& [n, text] : bundled_manifest_sources()) {
        if (n == name) {
            return text;
        }
    }
    std::string known;
    for (const auto& n : bundled_suite_names()) {
        known += (known.empty() ? "" : ", ") + n;
    }
    throw UsageError("unknown suite '" + name + "' (known: " + known + ")");
}

Manifest bundled_manifest(const std::string& name) { return parse_manifest(bundled_manifest_text(name)); }

Member build_member(const MemberSpec& spec)
{
    if (!is_known_fn(spec.fn)) {
        throw ManifestError("unknown function '" + spec.fn + "'");
    }
    Member m{parse_fn(spec.fn), Params{}};
    for (const auto& [k, v] : spec.params) {
        if (k == "p") {
            if (v == "0+") {
                m.params.p_to_zero = true;
            } else {
                m.params.p = expression_scalar(v);
            }
        } else if (k == "r") {
            m.params.r = expression_scalar(v);
        } else if (k == "c") {
            m.params.c = expression_scalar(v);
        } else if (k == "a") {
            m.params.a = expression_scalar(v);
        } else {
            throw ManifestError("unknown parameter '" + k + "'");
        }
    }
    return m;
}

} // namespace trigcert
