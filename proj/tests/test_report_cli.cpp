#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffineq/cli.hpp"
#include "ffineq/commands.hpp"

using namespace ffineq;

namespace {

RunSpec verify_spec() {
    RunSpec spec;
    spec.command = "verify";
    spec.primes = {3, 5};
    spec.dims = {1, 2};
    spec.norms = {NormSpec::l1(), NormSpec::sup()};
    spec.inequalities = {InequalityId::rt, InequalityId::tm1, InequalityId::tm2};
    spec.format = ReportFormat::json;
    return spec;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("real snapping and formatting") {
    CHECK(fmt_real(0.0) == "0");
    CHECK(fmt_real(-0.0) == "0");
    CHECK(fmt_real(2.0) == "2");
    CHECK(fmt_real(-3.0) == "-3");
    CHECK(fmt_real(2.2360679774997896) == "2.2360679775");
    CHECK(snap_real(2.2360679774997896) == 2.2360679775);
    CHECK(join_residues(std::vector<std::uint64_t>{1, 2, 0}) == "1:2:0");
}

TEST_CASE("run spec validation catches usage errors") {
    RunSpec spec = verify_spec();
    CHECK_NOTHROW(validate_run_spec(spec));

    spec.primes = {4};
    CHECK_THROWS_WITH_AS(validate_run_spec(spec), doctest::Contains("factor 2"),
                         std::invalid_argument);

    spec = verify_spec();
    spec.primes.clear();
    CHECK_THROWS_AS(validate_run_spec(spec), std::invalid_argument);

    spec = verify_spec();
    spec.dims = {0};
    CHECK_THROWS_AS(validate_run_spec(spec), std::invalid_argument);

    spec = verify_spec();
    spec.command = "sharpness";
    spec.inequalities = {InequalityId::rt};
    CHECK_THROWS_AS(validate_run_spec(spec), std::invalid_argument);

    spec = verify_spec();
    spec.full_dump = true; // json + full dump
    CHECK_THROWS_AS(validate_run_spec(spec), std::invalid_argument);

    spec = verify_spec();
    spec.command = "bogus";
    CHECK_THROWS_AS(validate_run_spec(spec), std::invalid_argument);
}

TEST_CASE("cells come out in cross-product order with skip notices") {
    RunSpec spec = verify_spec();
    spec.primes = {2, 3};
    spec.dims = {1};
    spec.norms = {NormSpec::l1()};
    spec.inequalities = {InequalityId::rt, InequalityId::tm1};
    const BatchReport report = cmd_verify(spec);

    REQUIRE(report.cells.size() == 4);
    CHECK(report.cells[0].id == "p2-d1-l1-rt");
    CHECK(report.cells[1].id == "p2-d1-l1-tm1");
    CHECK(report.cells[2].id == "p3-d1-l1-rt");
    CHECK(report.cells[3].id == "p3-d1-l1-tm1");

    CHECK_FALSE(report.cells[0].skipped);
    CHECK(report.cells[1].skipped); // tm needs 2 != 0
    CHECK(report.cells[1].skip_reason == "theorem requires 2 != 0 (p = 2 rejected)");
    CHECK(report.cells[3].finding);

    CHECK(report.cells_skipped() == 1);
    CHECK(report.cells_with_findings() == 1);
    CHECK(report.cells_passed() == 2);
}

TEST_CASE("axioms batch covers field and space cells") {
    RunSpec spec;
    spec.command = "axioms";
    spec.primes = {3, 5};
    spec.dims = {1, 2};
    spec.norms = {NormSpec::l1()};
    const BatchReport report = cmd_axioms(spec);
    REQUIRE(report.cells.size() == 6); // 2 field cells + 4 space cells
    CHECK(report.cells[0].id == "p3-axioms");
    CHECK(report.cells[1].id == "p3-d1-l1-axioms");
    CHECK(report.cells[2].id == "p3-d2-l1-axioms");
    CHECK(report.cells[3].id == "p5-axioms");
    CHECK(report.any_finding() == false);
}

TEST_CASE("resource overruns skip cells without tripping findings") {
    RunSpec spec;
    spec.command = "axioms";
    spec.primes = {3};
    spec.dims = {1, 9}; // 3^9 = 19683 vectors > cap below
    spec.norms = {NormSpec::l1()};
    spec.caps.max_vectors = 100;
    const BatchReport report = cmd_axioms(spec);
    REQUIRE(report.cells.size() == 3);
    CHECK_FALSE(report.cells[1].skipped);
    CHECK(report.cells[2].skipped);
    CHECK(report.cells[2].skip_reason.find("cap") != std::string::npos);
    CHECK(report.any_finding() == false);
}

TEST_CASE("json report is deterministic and round-trips byte-identically") {
    const RunSpec spec = verify_spec();
    const BatchReport first = run_command(spec);
    const BatchReport second = run_command(spec);

    const std::string canon1 = render_canonical(first, ReportFormat::json);
    const std::string canon2 = render_canonical(second, ReportFormat::json);
    CHECK(canon1 == canon2);

    // Parse and re-serialize: identical canonical bytes.
    const auto parsed = nlohmann::ordered_json::parse(canon1);
    CHECK(parsed.dump(2) + "\n" == canon1);

    // The full report (with footer) still parses when comments are allowed.
    const std::string full = render_report(first, ReportFormat::json);
    const auto parsed_full =
        nlohmann::ordered_json::parse(full, nullptr, true, /*ignore_comments=*/true);
    CHECK(parsed_full == parsed);

    CHECK(parsed["version"].get<std::string>() == kToolVersion);
    CHECK(parsed["spec"]["command"].get<std::string>() == "verify");
    CHECK(parsed["cells"].size() == 24);
    CHECK(parsed["summary"]["cells_with_findings"].get<int>() == 8); // all tm1 cells
}

TEST_CASE("text and csv formats are deterministic") {
    const RunSpec spec = verify_spec();
    const BatchReport report = run_command(spec);
    CHECK(render_canonical(report, ReportFormat::text) ==
          render_canonical(report, ReportFormat::text));
    const std::string csv = render_canonical(report, ReportFormat::csv);
    CHECK(csv.rfind("cell_id,x,y,lhs,rhs,slack,violation\n", 0) == 0);
    CHECK(csv.find("p3-d1-l1-tm1,1,2,1,-1,-2,1") != std::string::npos);
}

TEST_CASE("full csv dump emits one row per pair") {
    RunSpec spec;
    spec.command = "verify";
    spec.primes = {3};
    spec.dims = {1};
    spec.norms = {NormSpec::l1()};
    spec.inequalities = {InequalityId::rt, InequalityId::tm1};
    spec.format = ReportFormat::csv;
    spec.full_dump = true;
    const BatchReport report = run_command(spec);
    const std::string dump = render_full_dump_csv(report);

    std::istringstream lines(dump);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "cell_id,x,y,lhs,rhs,slack,violation");
    std::size_t rt_rows = 0, tm1_rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("p3-d1-l1-rt,", 0) == 0) ++rt_rows;
        if (line.rfind("p3-d1-l1-tm1,", 0) == 0) ++tm1_rows;
    }
    CHECK(rt_rows == 9);
    CHECK(tm1_rows == 9);
    CHECK(dump.find("p3-d1-l1-tm1,2,2,0,-3,-3,1") != std::string::npos);
}

TEST_CASE("cli exit codes follow the contract") {
    std::string out, err;

    CHECK(run({"verify", "--primes", "3", "--dims", "1", "--norms", "l1", "--ineqs", "rt,tm2"},
              &out) == 0);

    CHECK(run({"verify", "--primes", "3", "--dims", "1", "--norms", "l1", "--ineqs", "tm1",
               "--format", "json"},
              &out) == 1);
    CHECK(out.find("\"violation_count\": 3") != std::string::npos);

    CHECK(run({"verify", "--primes", "4", "--dims", "1", "--norms", "l1", "--ineqs", "rt"}, &out,
              &err) == 2);
    CHECK(err.find("factor 2") != std::string::npos);

    CHECK(run({"sharpness", "--primes", "3", "--ineqs", "rt"}, &out, &err) == 2);
    CHECK(run({"verify", "--primes", "3", "--ineqs", "rt", "--norms", "lp:0.5"}, &out, &err) == 2);
    CHECK(run({"bogus"}, &out, &err) == 2);
    CHECK(run({"verify", "--primes", "3"}, &out, &err) == 2); // missing --ineqs
    CHECK(run({}, &out, &err) == 2);

    // Skips alone leave a clean exit.
    CHECK(run({"verify", "--primes", "2", "--dims", "1", "--norms", "l1", "--ineqs", "tm1"},
              &out) == 0);
    CHECK(run({"audit-proof", "--primes", "5", "--dims", "1", "--norms", "l1"}, &out) == 1);
    CHECK(run({"axioms", "--primes", "2,3,5", "--dims", "1,2", "--norms", "l1,l2,sup"}, &out) ==
          0);
    CHECK(run({"--help"}, &out, &err) == 0);
}

TEST_CASE("cli byte determinism across runs") {
    const std::vector<std::string> args{"verify", "--primes", "3,5",  "--dims",   "1,2",
                                        "--norms", "l1,sup",  "--ineqs", "rt,tm1,tm2",
                                        "--format", "json"};
    std::string out1, out2;
    CHECK(run(args, &out1) == 1);
    CHECK(run(args, &out2) == 1);
    const auto canon = [](const std::string& s) {
        return s.substr(0, s.find("// ---- non-canonical footer ----"));
    };
    CHECK(canon(out1) == canon(out2));
    CHECK(out1.find("// ---- non-canonical footer ----") != std::string::npos);
}

TEST_CASE("cli writes reports to files") {
    const std::string path = "cli_out_test.json";
    std::string out, err;
    CHECK(run({"sharpness", "--primes", "3", "--dims", "1", "--norms", "l1", "--ineqs", "tm1",
               "--format", "json", "--out", path},
              &out, &err) == 1); // c_star 4 > paper coefficient 1
    CHECK(out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str().find("\"c_star\": 4") != std::string::npos);
    CHECK(content.str().find("\"comparison\": \"greater\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("sharpness command compares against the paper coefficient") {
    RunSpec spec;
    spec.command = "sharpness";
    spec.primes = {3, 5};
    spec.dims = {1};
    spec.norms = {NormSpec::l1()};
    spec.inequalities = {InequalityId::tm1, InequalityId::tm2};
    const BatchReport report = cmd_sharpness(spec);
    REQUIRE(report.cells.size() == 4);

    const Cell& tm1_cell = report.cells[0];
    REQUIRE(tm1_cell.sharpness.has_value());
    CHECK(tm1_cell.sharpness->c_star == 4.0);
    CHECK(tm1_cell.paper_comparison == "greater");
    CHECK(tm1_cell.finding);

    const Cell& tm2_cell = report.cells[1];
    REQUIRE(tm2_cell.sharpness.has_value());
    CHECK(tm2_cell.sharpness->c_star == 0.0);
    CHECK(tm2_cell.paper_comparison == "less");
    CHECK_FALSE(tm2_cell.finding);
}

TEST_CASE("audit-proof command reports step failures per cell") {
    RunSpec spec;
    spec.command = "audit-proof";
    spec.primes = {2, 5};
    spec.dims = {1};
    spec.norms = {NormSpec::l1()};
    const BatchReport report = cmd_audit_proof(spec);
    REQUIRE(report.cells.size() == 2);
    CHECK(report.cells[0].skipped); // p = 2
    REQUIRE(report.cells[1].audit.has_value());
    CHECK(report.cells[1].finding);
    const std::string text = render_canonical(report, ReportFormat::text);
    CHECK(text.find("step A1_equality: passes=15 failures=10 first-failure x=3 y=0") !=
          std::string::npos);
}
