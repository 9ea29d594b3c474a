#include "ffineq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ffineq/commands.hpp"

namespace ffineq {

namespace {

std::vector<std::string> split_commas(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::uint64_t parse_u64(const std::string& token, const char* what) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + token + "'");
    }
    if (used != token.size()) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + token + "'");
    }
    return value;
}

struct RawArgs {
    std::string primes;
    std::string dims = "1";
    std::string norms = "l1";
    std::string ineqs;
    std::string outer_mode = "field";
    std::string format = "text";
    std::string out_path;
    std::uint64_t max_vectors = EnumerationCaps{}.max_vectors;
    std::uint64_t max_violations = EnumerationCaps{}.max_violations;
    bool full_dump = false;
};

RunSpec to_run_spec(const std::string& command, const RawArgs& raw, bool wants_ineqs) {
    RunSpec spec;
    spec.command = command;
    for (const std::string& tok : split_commas(raw.primes)) {
        spec.primes.push_back(parse_u64(tok, "prime"));
    }
    spec.dims.clear();
    for (const std::string& tok : split_commas(raw.dims)) {
        spec.dims.push_back(static_cast<std::size_t>(parse_u64(tok, "dimension")));
    }
    spec.norms.clear();
    for (const std::string& tok : split_commas(raw.norms)) {
        spec.norms.push_back(NormSpec::parse(tok));
    }
    if (wants_ineqs) {
        for (const std::string& tok : split_commas(raw.ineqs)) {
            spec.inequalities.push_back(parse_inequality(tok));
        }
    }
    spec.outer_mode = parse_outer_mode(raw.outer_mode);
    spec.format = parse_format(raw.format);
    spec.out_path = raw.out_path;
    spec.caps.max_vectors = raw.max_vectors;
    spec.caps.max_violations = static_cast<std::size_t>(raw.max_violations);
    spec.full_dump = raw.full_dump;
    return spec;
}

void add_common_options(CLI::App* cmd, RawArgs& raw, bool with_ineqs) {
    cmd->add_option("--primes", raw.primes, "comma-separated primes, e.g. 3,5,7")->required();
    cmd->add_option("--dims", raw.dims, "comma-separated dimensions (default 1)");
    cmd->add_option("--norms", raw.norms, "comma-separated norms: l1,l2,sup,lp:<q> (default l1)");
    if (with_ineqs) {
        cmd->add_option("--ineqs", raw.ineqs,
                        "comma-separated inequalities: ti,te,mi1,mi2,rt,tm1,tm2")
            ->required();
    }
    cmd->add_option("--outer-mode", raw.outer_mode,
                    "outer absolute value for ti: real|field (default field)");
    cmd->add_option("--format", raw.format, "report format: json|csv|text (default text)");
    cmd->add_option("--out", raw.out_path, "output file (default stdout)");
    cmd->add_option("--max-vectors", raw.max_vectors, "enumeration cap per vector space");
    cmd->add_option("--max-violations", raw.max_violations, "violation listing cap per cell");
    cmd->add_flag("--full-dump", raw.full_dump, "csv only: one row per enumerated pair");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exhaustive checker for triangle-inequality variants over prime fields"};
    app.require_subcommand(1);

    RawArgs raw;
    CLI::App* axioms = app.add_subcommand("axioms", "audit sub-modulus and sub-norm axioms");
    add_common_options(axioms, raw, false);
    CLI::App* verify = app.add_subcommand("verify", "exhaustively verify inequalities");
    add_common_options(verify, raw, true);
    CLI::App* sharpness =
        app.add_subcommand("sharpness", "probe the minimal coefficient for tm1/tm2");
    add_common_options(sharpness, raw, true);
    CLI::App* audit =
        app.add_subcommand("audit-proof", "check each derivation step on every pair");
    add_common_options(audit, raw, false);

    std::vector<const char*> argv;
    argv.push_back("ffineq");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    BatchReport report;
    try {
        std::string command;
        bool wants_ineqs = false;
        if (axioms->parsed()) {
            command = "axioms";
        } else if (verify->parsed()) {
            command = "verify";
            wants_ineqs = true;
        } else if (sharpness->parsed()) {
            command = "sharpness";
            wants_ineqs = true;
        } else {
            command = "audit-proof";
        }
        const RunSpec spec = to_run_spec(command, raw, wants_ineqs);
        report = run_command(spec);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::string rendered;
    if (report.spec.full_dump) {
        rendered = render_full_dump_csv(report) + render_footer(report, ReportFormat::csv);
    } else {
        rendered = render_report(report, report.spec.format);
    }

    if (report.spec.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(report.spec.out_path, std::ios::binary | std::ios::trunc);
        if (!file.good()) {
            err << "io error: cannot open " << report.spec.out_path << "\n";
            return 2;
        }
        file << rendered;
        if (!file.good()) {
            err << "io error: failed writing " << report.spec.out_path << "\n";
            return 2;
        }
    }

    return report.any_finding() ? 1 : 0;
}

} // namespace ffineq
