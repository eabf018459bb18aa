#include "trigcert/suite.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace trigcert;
using nlohmann::json;

namespace {

std::string source_path(const std::string& rel) { return std::string(TRIGCERT_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_verify(const std::string& args)
{
    const std::string cmd = std::string("\"") + TRIGCERT_VERIFY_BIN + "\" " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// enough of draft-07 for the report schema
void validate(const json& value, const json& schema, const json& root, const std::string& path,
              std::vector<std::string>& errors)
{
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"];
        const std::string name = ref.substr(ref.rfind('/') + 1);
        validate(value, root["definitions"][name], root, path, errors);
        return;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
                        (t == "integer" && value.is_number_integer()) || (t == "number" && value.is_number());
        if (!ok) {
            errors.push_back(path + ": expected " + t);
            return;
        }
    }
    if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), value) == schema["enum"].end()) {
        errors.push_back(path + ": value not in enum");
    }
    if (schema.contains("minimum") && value.is_number() && value.get<double>() < schema["minimum"].get<double>()) {
        errors.push_back(path + ": below minimum");
    }
    if (value.is_object()) {
        for (const auto& r : schema.value("required", json::array())) {
            if (!value.contains(r.get<std::string>())) {
                errors.push_back(path + ": missing " + r.get<std::string>());
            }
        }
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                validate(it.value(), props[it.key()], root, path + "." + it.key(), errors);
            } else if (schema.contains("additionalProperties")) {
                const json& extra = schema["additionalProperties"];
                if (extra.is_boolean() && !extra.get<bool>()) {
                    errors.push_back(path + ": unexpected " + it.key());
                } else if (extra.is_object()) {
                    validate(it.value(), extra, root, path + "." + it.key(), errors);
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            validate(value[i], schema["items"], root, path + "[" + std::to_string(i) + "]", errors);
        }
    }
}

std::vector<std::string> schema_errors(const json& value, const std::string& schema_file)
{
    const json schema = json::parse(slurp(source_path(schema_file)));
    std::vector<std::string> errors;
    validate(value, schema, schema, "$", errors);
    return errors;
}

} // namespace

TEST_CASE("bundled manifests round-trip")
{
    const auto names = bundled_suite_names();
    CHECK(names.size() >= 5);
    for (const std::string& n : names) {
        CAPTURE(n);
        const Manifest m = bundled_manifest(n);
        CHECK(!m.tasks.empty());
        const Manifest again = parse_manifest(serialize_manifest(m));
        CHECK(again == m);
        CHECK(schema_errors(json::parse(serialize_manifest(m)), "schemas/manifest.schema.json").empty());
    }
    CHECK(bundled_manifest("paper-full").tasks.size() ==
          bundled_manifest("theorems").tasks.size() + bundled_manifest("applications").tasks.size() +
              bundled_manifest("constants").tasks.size() + bundled_manifest("prior-work").tasks.size());
    CHECK_THROWS_AS(bundled_manifest("nope"), UsageError);
}

TEST_CASE("manifest validation errors name the location")
{
    auto message = [](const std::string& text) {
        try {
            parse_manifest(text);
        } catch (const ManifestError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("{\n  \"format_version\": 1,\n  \"tasks\": [,]\n}").find("line 3") != std::string::npos);
    CHECK(message(slurp(source_path("tests/data/unknown_fn.json"))).find("tasks[0].members[0].fn") != std::string::npos);
    CHECK(message(R"({"format_version": 1, "name": "x", "tasks": [{"id": "a", "kind": "sign", "members": [{"fn": "g"}],
        "domain": ["0", "1"], "sign": "sideways"}]})")
              .find("tasks[0]") != std::string::npos);
    CHECK(message(R"({"format_version": 2, "name": "x", "tasks": []})").find("format_version") != std::string::npos);
    CHECK(message(R"({"format_version": 1, "name": "x", "tasks": [{"id": "a", "kind": "chain",
        "members": [{"fn": "g"}], "domain": ["0", "1"], "colour": 1}]})")
              .find("colour") != std::string::npos);
    const std::string dup = R"({"format_version": 1, "name": "x", "tasks": [
        {"id": "a", "kind": "sign", "members": [{"fn": "g"}], "domain": ["0", "1"], "sign": "positive"},
        {"id": "a", "kind": "sign", "members": [{"fn": "g"}], "domain": ["0", "1"], "sign": "positive"}]})";
    CHECK(message(dup).find("duplicate") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    CHECK(run_verify("--manifest \"" + source_path("tests/data/pass.json") + "\"") == 0);
    CHECK(run_verify("--manifest \"" + source_path("tests/data/flipped.json") + "\"") == 1);
    CHECK(run_verify("--manifest \"" + source_path("tests/data/unknown_fn.json") + "\"") == 2);
    CHECK(run_verify("--suite no-such-suite") == 2);
    CHECK(run_verify("--suite theorems --format yaml") == 2);
    CHECK(run_verify("--list") == 0);
}

TEST_CASE("report structure and content")
{
    const Report r = run_manifest(bundled_manifest("constants"), RunOptions{});
    const json j = json::parse(report_json(r, 17));
    const auto errors = schema_errors(j, "schemas/report.schema.json");
    CHECK_MESSAGE(errors.empty(), (errors.empty() ? "" : errors.front()));
    CHECK(j["constants"].size() == r.constants.size());
    CHECK(!r.constants.empty());
    for (const auto& c : j["constants"]) {
        CHECK(c["enclosure_lo"].get<std::string>() <= c["enclosure_hi"].get<std::string>());
    }
    CHECK(j["precision_tier"].get<std::string>().find("MPFR") != std::string::npos);
    CHECK(j["environment"].contains("compiler"));
    CHECK(report_text(r, 17).find("suite constants: FAIL") == 0);
}

TEST_CASE("flipped claim fails with a witness")
{
    const Manifest m = load_manifest_file(source_path("tests/data/flipped.json"));
    const Report r = run_manifest(m, RunOptions{});
    CHECK(r.status == "FAIL");
    REQUIRE(r.tasks.size() == 1);
    CHECK(r.tasks[0].verdict == "UNPROVED");
    CHECK(r.tasks[0].witness.has_value());
}

TEST_CASE("result order does not depend on the worker count")
{
    const Manifest m = bundled_manifest("applications");
    RunOptions one;
    RunOptions four;
    four.jobs = 4;
    const Report a = run_manifest(m, one);
    const Report b = run_manifest(m, four);
    REQUIRE(a.tasks.size() == b.tasks.size());
    for (std::size_t i = 0; i < a.tasks.size(); ++i) {
        CHECK(a.tasks[i].id == b.tasks[i].id);
        CHECK(a.tasks[i].verdict == b.tasks[i].verdict);
        CHECK(a.tasks[i].evaluations == b.tasks[i].evaluations);
    }
    CHECK(a.status == b.status);
}

TEST_CASE("atomic report write")
{
    const auto dir = std::filesystem::temp_directory_path() / "trigcert_atomic_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "report.json").string();
    write_atomically(path, "first");
    write_atomically(path, "second");
    CHECK(slurp(path) == "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) {
        ++files;
    }
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(write_atomically("/nonexistent-dir/x/report.json", "x"));
}
