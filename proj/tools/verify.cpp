#include "trigcert/suite.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Certify the catalogued inequalities, constants and integral bounds"};
    std::string suite;
    std::string manifest_path;
    int digits = 17;
    unsigned max_depth = 0;
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    bool list = false;

    auto* suite_opt = app.add_option("--suite", suite, "bundled suite name");
    auto* manifest_opt = app.add_option("--manifest", manifest_path, "manifest JSON file");
    suite_opt->excludes(manifest_opt);
    app.add_option("--digits", digits, "significant digits for printed enclosures")->check(CLI::Range(3, 80));
    app.add_option("--max-depth", max_depth, "bisection depth limit for sign and chain tasks")
        ->check(CLI::Range(1u, 200u));
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out, "write the report here (atomically) instead of stdout");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--list", list, "list bundled suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list) {
        for (const auto& name : trigcert::bundled_suite_names()) {
            std::cout << name << "\n";
        }
        return 0;
    }
    if (suite.empty() && manifest_path.empty()) {
        std::cerr << "verify: one of --suite or --manifest is required\n";
        return 2;
    }

    try {
        const trigcert::Manifest manifest =
            suite.empty() ? trigcert::load_manifest_file(manifest_path) : trigcert::bundled_manifest(suite);
        trigcert::RunOptions options;
        options.digits = digits;
        options.jobs = jobs;
        if (max_depth > 0) {
            options.max_depth = max_depth;
        }
        const trigcert::Report report = trigcert::run_manifest(manifest, options);
        const std::string text =
            format == "json" ? trigcert::report_json(report, digits) : trigcert::report_text(report, digits);
        if (out.empty()) {
            std::cout << text;
        } else {
            trigcert::write_atomically(out, text);
        }
        return report.status == "PASS" ? 0 : 1;
    } catch (const trigcert::UsageError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 1;
    }
}
