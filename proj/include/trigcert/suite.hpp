#pragma once

#include "trigcert/certifier.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trigcert {

inline constexpr int kManifestFormat = 1;
inline constexpr int kReportVersion = 1;

/// Malformed manifest; the message names the line or field.
class ManifestError : public UsageError {
public:
    using UsageError::UsageError;
};

enum class TaskKind { sign, root, seq, chain, integral, constant, observe };
std::string_view task_kind_name(TaskKind k);

/// A catalog function plus textual parameters (decimal strings / closed forms).
/// Keys: p ("0+" selects the p -> 0+ limit), r, c, a.
struct MemberSpec {
    std::string fn;
    std::map<std::string, std::string> params;
    bool operator==(const MemberSpec&) const = default;
};

struct TaskSpec {
    std::string id;
    TaskKind kind = TaskKind::sign;
    std::string note;

    // sign: target kind fn | diff | logdiff over members[0], members[1]
    // chain: members in increasing order; observe: members[0]
    std::string target = "fn";
    std::vector<MemberSpec> members;
    std::string domain_lo;
    std::string domain_hi;
    std::string sign; // positive | negative

    // root: problem p1 | x0
    std::string problem;
    std::string bracket_lo;
    std::string bracket_hi;
    std::string width;       // also: integral tolerance, constant width limit
    std::string prefix;      // expected leading decimal digits
    std::string expect_lo;   // expected enclosing interval
    std::string expect_hi;
    std::string agree;       // or agreement tolerance with [expect_lo, expect_hi]

    // seq: check u_negative | ratio_identity
    std::string check;
    std::string p;                 // u_negative
    std::vector<std::string> p2;   // ratio_identity
    unsigned n_max = 50;

    // integral: bound (+ arg) | integrand over [domain_lo, domain_hi]
    std::string bound;
    std::string arg;
    std::string decimal;  // check a decimal reference against the bound pair
    std::string contains; // closed form expected inside the enclosure
    std::string contains_decimal;
    std::vector<std::string> compare_width; // bound pair ids: first must be narrower than the rest

    // constant
    std::string expr;
    std::string alt_expr;
    std::string paper_decimal;
    std::string compare; // reading (default) | round

    // observe: sample points for F_p style trend reports
    std::vector<std::string> samples;

    std::optional<unsigned> max_depth;
    std::optional<std::size_t> max_evaluations;

    bool operator==(const TaskSpec&) const = default;
};

struct Manifest {
    int format_version = kManifestFormat;
    std::string name;
    std::vector<TaskSpec> tasks;
    bool operator==(const Manifest&) const = default;
};

/// Parses and validates; throws ManifestError with a line or field path.
Manifest parse_manifest(const std::string& json_text);
Manifest load_manifest_file(const std::string& path);
std::string serialize_manifest(const Manifest& m);

std::vector<std::string> bundled_suite_names();
/// Throws UsageError for unknown names.
Manifest bundled_manifest(const std::string& name);
std::string bundled_manifest_text(const std::string& name);

/// Builds the certifier-side member; throws UsageError / ManifestError.
Member build_member(const MemberSpec& spec);

// ---------------------------------------------------------------------------

struct TaskResult {
    std::string id;
    TaskKind kind = TaskKind::sign;
    std::string verdict; // PROVED UNPROVED ERROR PASS FAIL OBSERVED
    std::optional<MpInterval> enclosure;
    std::optional<Interval> witness;
    std::size_t evaluations = 0;
    double seconds = 0.0;
    std::string detail;
    std::vector<std::string> evidence;
};

struct ConstantResult {
    std::string name;
    std::string paper_decimal;
    std::optional<MpInterval> enclosure;
    bool pass = false;
    bool approximate = false;
    std::string note;
};

struct Report {
    int version = kReportVersion;
    std::string suite;
    std::string status; // PASS | FAIL
    std::vector<TaskResult> tasks;
    std::vector<ConstantResult> constants;
    std::string precision_tier;
    double wall_clock = 0.0;
    std::map<std::string, std::string> environment;
};

struct RunOptions {
    int digits = 17;
    std::optional<unsigned> max_depth;
    unsigned jobs = 1;
};

TaskResult run_task(const TaskSpec& task, const RunOptions& options, ConstantResult* constant_out = nullptr);
Report run_manifest(const Manifest& manifest, const RunOptions& options);

std::string report_json(const Report& report, int digits);
std::string report_text(const Report& report, int digits);
/// Writes via a temporary file and rename.
void write_atomically(const std::string& path, const std::string& content);

} // namespace trigcert
