#include "ffineq/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ffineq {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& token) {
    if (token == "json") return ReportFormat::json;
    if (token == "csv") return ReportFormat::csv;
    if (token == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown format '" + token + "' (expected json, csv, text)");
}

std::string format_name(ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::json: return "json";
        case ReportFormat::csv: return "csv";
        case ReportFormat::text: return "text";
    }
    return "?";
}

void validate_run_spec(const RunSpec& spec) {
    if (spec.command != "axioms" && spec.command != "verify" && spec.command != "sharpness" &&
        spec.command != "audit-proof") {
        throw std::invalid_argument("unknown command '" + spec.command + "'");
    }
    if (spec.primes.empty()) {
        throw std::invalid_argument("at least one prime is required (--primes)");
    }
    for (std::uint64_t p : spec.primes) {
        PrimeField check(p); // throws with the smallest factor when composite
        (void)check;
    }
    if (spec.dims.empty()) {
        throw std::invalid_argument("at least one dimension is required");
    }
    for (std::size_t d : spec.dims) {
        if (d == 0) throw std::invalid_argument("dimensions must be >= 1");
    }
    if (spec.norms.empty()) {
        throw std::invalid_argument("at least one norm is required");
    }
    for (const NormSpec& n : spec.norms) n.validate();

    if (spec.command == "verify" || spec.command == "sharpness") {
        if (spec.inequalities.empty()) {
            throw std::invalid_argument("at least one inequality is required (--ineqs)");
        }
    }
    if (spec.command == "sharpness") {
        for (InequalityId id : spec.inequalities) {
            if (!has_coefficient(id)) {
                throw std::invalid_argument("sharpness applies to tm1/tm2 only, got " +
                                            inequality_name(id));
            }
        }
    }
    if (spec.full_dump &&
        (spec.format != ReportFormat::csv || spec.command != "verify")) {
        throw std::invalid_argument("--full-dump requires the verify command with --format csv");
    }
}

std::uint64_t BatchReport::cells_passed() const {
    std::uint64_t n = 0;
    for (const Cell& c : cells) {
        if (!c.skipped && !c.finding) ++n;
    }
    return n;
}

std::uint64_t BatchReport::cells_with_findings() const {
    std::uint64_t n = 0;
    for (const Cell& c : cells) {
        if (!c.skipped && c.finding) ++n;
    }
    return n;
}

std::uint64_t BatchReport::cells_skipped() const {
    std::uint64_t n = 0;
    for (const Cell& c : cells) {
        if (c.skipped) ++n;
    }
    return n;
}

double snap_real(double v) {
    if (v == 0.0) return 0.0; // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", snap_real(v));
    return buf;
}

std::string join_residues(std::span<const std::uint64_t> coords) {
    std::string out;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) out += ':';
        out += std::to_string(coords[j]);
    }
    return out;
}

namespace {

std::string cell_kind_name(Cell::Kind kind) {
    switch (kind) {
        case Cell::Kind::field_axioms: return "field_axioms";
        case Cell::Kind::subnorm_axioms: return "subnorm_axioms";
        case Cell::Kind::verification: return "verification";
        case Cell::Kind::sharpness: return "sharpness";
        case Cell::Kind::proof_audit: return "proof_audit";
    }
    return "?";
}

// ---------------------------------------------------------------- json

ordered_json spec_to_json(const RunSpec& spec) {
    ordered_json j;
    j["command"] = spec.command;
    j["primes"] = spec.primes;
    j["dims"] = spec.dims;
    ordered_json norms = ordered_json::array();
    for (const NormSpec& n : spec.norms) norms.push_back(n.name());
    j["norms"] = norms;
    ordered_json ineqs = ordered_json::array();
    for (InequalityId id : spec.inequalities) ineqs.push_back(inequality_name(id));
    j["inequalities"] = ineqs;
    j["outer_mode"] = outer_mode_name(spec.outer_mode);
    j["format"] = format_name(spec.format);
    j["out"] = spec.out_path;
    j["full_dump"] = spec.full_dump;
    j["caps"] = {{"max_vectors", spec.caps.max_vectors},
                 {"max_pairs", spec.caps.max_pairs},
                 {"max_violations", spec.caps.max_violations}};
    return j;
}

ordered_json axioms_to_json(const AxiomReport& report) {
    ordered_json j;
    ordered_json checked = ordered_json::array();
    for (const AxiomCheck& c : report.axioms_checked) {
        checked.push_back({{"axiom", c.axiom}, {"cases", c.cases}});
    }
    j["axioms_checked"] = checked;
    j["violation_count"] = report.violation_count;
    ordered_json violations = ordered_json::array();
    for (const AxiomViolation& v : report.violations) {
        ordered_json inputs = ordered_json::array();
        for (const auto& in : v.inputs) inputs.push_back(join_residues(in));
        violations.push_back({{"axiom", v.axiom},
                              {"inputs", inputs},
                              {"lhs", snap_real(v.lhs)},
                              {"rhs", snap_real(v.rhs)}});
    }
    j["violations"] = violations;
    j["pass"] = report.pass();
    return j;
}

ordered_json slack_record_to_json(const SlackRecord& rec) {
    return {{"x", join_residues(rec.x)}, {"y", join_residues(rec.y)},
            {"lhs", snap_real(rec.lhs)}, {"rhs", snap_real(rec.rhs)},
            {"slack", snap_real(rec.slack)}};
}

ordered_json cell_to_json(const Cell& cell) {
    ordered_json j;
    j["kind"] = cell_kind_name(cell.kind);
    j["id"] = cell.id;
    j["prime"] = cell.prime;
    if (cell.dim) j["dim"] = *cell.dim;
    if (cell.norm) j["norm"] = cell.norm->name();
    if (cell.inequality) j["inequality"] = inequality_name(*cell.inequality);
    if (cell.skipped) {
        j["status"] = "skipped";
        j["skip_reason"] = cell.skip_reason;
        return j;
    }
    j["status"] = "ok";
    j["finding"] = cell.finding;

    if (cell.axioms) {
        for (auto& [key, value] : axioms_to_json(*cell.axioms).items()) j[key] = value;
    }
    if (cell.verification) {
        const VerificationReport& r = *cell.verification;
        if (r.inequality == InequalityId::ti) j["outer_mode"] = outer_mode_name(r.outer_mode);
        if (r.coefficient) {
            j["coefficient"] = snap_real(r.coefficient->to_double());
            j["coefficient_exact"] = r.coefficient->str();
        }
        if (r.coefficient_real) j["coefficient"] = snap_real(*r.coefficient_real);
        j["scalar_sweep"] = r.scalar_sweep;
        j["pairs_checked"] = r.pairs_checked;
        j["violation_count"] = r.violation_count;
        j["equality_count"] = r.equality_count;
        j["min_slack"] = snap_real(r.min_slack);
        j["min_slack_witness"] = {{"x", join_residues(r.min_slack_x)},
                                  {"y", join_residues(r.min_slack_y)}};
        ordered_json violations = ordered_json::array();
        for (const SlackRecord& rec : r.violations) violations.push_back(slack_record_to_json(rec));
        j["violations"] = violations;
    }
    if (cell.sharpness) {
        const SharpnessResult& s = *cell.sharpness;
        j["c_star"] = snap_real(s.c_star);
        if (s.c_star_exact) j["c_star_exact"] = s.c_star_exact->str();
        j["witness"] = {{"x", join_residues(s.witness_x)}, {"y", join_residues(s.witness_y)}};
        j["skipped_pairs"] = s.skipped_pairs;
        j["pairs_checked"] = s.pairs_checked;
        if (cell.paper_coefficient) {
            j["paper_coefficient"] = snap_real(cell.paper_coefficient->to_double());
            j["paper_coefficient_exact"] = cell.paper_coefficient->str();
        }
        if (cell.paper_comparison) j["comparison"] = *cell.paper_comparison;
    }
    if (cell.audit) {
        const ProofStepReport& a = *cell.audit;
        j["pairs_checked"] = a.pairs_checked;
        ordered_json steps = ordered_json::array();
        for (const StepOutcome& out : a.steps) {
            ordered_json s;
            s["step"] = proof_step_name(out.step);
            s["passes"] = out.passes;
            s["failures"] = out.failures;
            if (out.first_failure) {
                s["first_failure"] = {{"x", join_residues(out.first_failure->x)},
                                      {"y", join_residues(out.first_failure->y)},
                                      {"lhs", snap_real(out.first_failure->lhs)},
                                      {"rhs", snap_real(out.first_failure->rhs)}};
            }
            steps.push_back(s);
        }
        j["steps"] = steps;
    }
    return j;
}

std::string render_json(const BatchReport& report) {
    ordered_json j;
    j["version"] = report.version;
    j["spec"] = spec_to_json(report.spec);
    ordered_json cells = ordered_json::array();
    for (const Cell& cell : report.cells) cells.push_back(cell_to_json(cell));
    j["cells"] = cells;
    j["summary"] = {{"cells_total", report.cells.size()},
                    {"cells_passed", report.cells_passed()},
                    {"cells_with_findings", report.cells_with_findings()},
                    {"cells_skipped", report.cells_skipped()}};
    return j.dump(2) + "\n";
}

// ----------------------------------------------------------------- csv

void csv_row(std::ostringstream& os, const std::string& cell_id, const std::string& x,
             const std::string& y, const std::string& lhs, const std::string& rhs,
             const std::string& slack, const std::string& violation) {
    os << cell_id << ',' << x << ',' << y << ',' << lhs << ',' << rhs << ',' << slack << ','
       << violation << '\n';
}

// Non-pair rows reuse the pair schema; the discriminator (axiom id, proof
// step, skip marker) is folded into the cell id after a colon.
std::string render_csv(const BatchReport& report) {
    std::ostringstream os;
    os << "cell_id,x,y,lhs,rhs,slack,violation\n";
    for (const Cell& cell : report.cells) {
        if (cell.skipped) {
            csv_row(os, cell.id + ":skipped", "", "", "", "", "", "");
            continue;
        }
        if (cell.axioms) {
            for (const AxiomViolation& v : cell.axioms->violations) {
                const std::string x = v.inputs.empty() ? "" : join_residues(v.inputs[0]);
                const std::string y = v.inputs.size() > 1 ? join_residues(v.inputs[1]) : "";
                csv_row(os, cell.id + ":" + v.axiom, x, y, fmt_real(v.lhs), fmt_real(v.rhs),
                        fmt_real(v.rhs - v.lhs), "1");
            }
        }
        if (cell.verification) {
            for (const SlackRecord& rec : cell.verification->violations) {
                csv_row(os, cell.id, join_residues(rec.x), join_residues(rec.y),
                        fmt_real(rec.lhs), fmt_real(rec.rhs), fmt_real(rec.slack), "1");
            }
        }
        if (cell.sharpness) {
            const double paper =
                cell.paper_coefficient ? cell.paper_coefficient->to_double() : 0.0;
            csv_row(os, cell.id, join_residues(cell.sharpness->witness_x),
                    join_residues(cell.sharpness->witness_y), fmt_real(cell.sharpness->c_star),
                    fmt_real(paper), fmt_real(paper - cell.sharpness->c_star),
                    cell.finding ? "1" : "0");
        }
        if (cell.audit) {
            for (const StepOutcome& out : cell.audit->steps) {
                std::string x, y, lhs, rhs;
                if (out.first_failure) {
                    x = join_residues(out.first_failure->x);
                    y = join_residues(out.first_failure->y);
                    lhs = fmt_real(out.first_failure->lhs);
                    rhs = fmt_real(out.first_failure->rhs);
                }
                csv_row(os, cell.id + ":" + proof_step_name(out.step), x, y, lhs, rhs, "",
                        out.failures > 0 ? "1" : "0");
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- text

std::string render_text(const BatchReport& report) {
    std::ostringstream os;
    const RunSpec& spec = report.spec;
    os << "ffineq report\n";
    os << "version: " << report.version << "\n";
    os << "command: " << spec.command << "\n";
    os << "primes:";
    for (std::uint64_t p : spec.primes) os << ' ' << p;
    os << "\ndims:";
    for (std::size_t d : spec.dims) os << ' ' << d;
    os << "\nnorms:";
    for (const NormSpec& n : spec.norms) os << ' ' << n.name();
    if (!spec.inequalities.empty()) {
        os << "\ninequalities:";
        for (InequalityId id : spec.inequalities) os << ' ' << inequality_name(id);
    }
    os << "\nouter-mode: " << outer_mode_name(spec.outer_mode);
    os << "\ncaps: max-vectors=" << spec.caps.max_vectors << " max-pairs=" << spec.caps.max_pairs
       << " max-violations=" << spec.caps.max_violations << "\n\n";

    for (const Cell& cell : report.cells) {
        os << "cell " << cell.id << " [" << cell_kind_name(cell.kind) << "]:";
        if (cell.skipped) {
            os << " SKIPPED (" << cell.skip_reason << ")\n";
            continue;
        }
        if (cell.axioms) {
            os << " cases";
            for (const AxiomCheck& c : cell.axioms->axioms_checked) {
                os << ' ' << c.axiom << '=' << c.cases;
            }
            os << " violations=" << cell.axioms->violation_count << "\n";
            for (const AxiomViolation& v : cell.axioms->violations) {
                os << "  violation axiom " << v.axiom << ":";
                for (const auto& in : v.inputs) os << ' ' << join_residues(in);
                os << " lhs=" << fmt_real(v.lhs) << " rhs=" << fmt_real(v.rhs) << "\n";
            }
        }
        if (cell.verification) {
            const VerificationReport& r = *cell.verification;
            os << " pairs=" << r.pairs_checked << " violations=" << r.violation_count
               << " equalities=" << r.equality_count << " min-slack=" << fmt_real(r.min_slack)
               << " at x=" << join_residues(r.min_slack_x) << " y="
               << join_residues(r.min_slack_y);
            if (r.coefficient) {
                os << " coefficient=" << fmt_real(r.coefficient->to_double()) << " (exact "
                   << r.coefficient->str() << ")";
            }
            if (r.coefficient_real) os << " coefficient=" << fmt_real(*r.coefficient_real);
            if (r.inequality == InequalityId::ti) {
                os << " outer-mode=" << outer_mode_name(r.outer_mode);
            }
            os << "\n";
            for (const SlackRecord& rec : r.violations) {
                os << "  violation x=" << join_residues(rec.x) << " y=" << join_residues(rec.y)
                   << ": lhs=" << fmt_real(rec.lhs) << " rhs=" << fmt_real(rec.rhs)
                   << " slack=" << fmt_real(rec.slack) << "\n";
            }
            if (r.violation_count > r.violations.size()) {
                os << "  (+" << r.violation_count - r.violations.size()
                   << " more violations beyond listing cap)\n";
            }
        }
        if (cell.sharpness) {
            const SharpnessResult& s = *cell.sharpness;
            os << " c-star=" << fmt_real(s.c_star);
            if (s.c_star_exact) os << " (exact " << s.c_star_exact->str() << ")";
            os << " witness x=" << join_residues(s.witness_x) << " y="
               << join_residues(s.witness_y) << " skipped=" << s.skipped_pairs
               << " pairs=" << s.pairs_checked;
            if (cell.paper_coefficient) {
                os << " paper-coefficient=" << cell.paper_coefficient->str();
            }
            if (cell.paper_comparison) os << " comparison=" << *cell.paper_comparison;
            os << "\n";
        }
        if (cell.audit) {
            os << " pairs=" << cell.audit->pairs_checked << "\n";
            for (const StepOutcome& out : cell.audit->steps) {
                os << "  step " << proof_step_name(out.step) << ": passes=" << out.passes
                   << " failures=" << out.failures;
                if (out.first_failure) {
                    os << " first-failure x=" << join_residues(out.first_failure->x)
                       << " y=" << join_residues(out.first_failure->y)
                       << " lhs=" << fmt_real(out.first_failure->lhs)
                       << " rhs=" << fmt_real(out.first_failure->rhs);
                }
                os << "\n";
            }
        }
    }

    os << "\nsummary: cells=" << report.cells.size() << " passed=" << report.cells_passed()
       << " findings=" << report.cells_with_findings() << " skipped=" << report.cells_skipped()
       << "\n";
    return os.str();
}

} // namespace

std::string render_canonical(const BatchReport& report, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::json: return render_json(report);
        case ReportFormat::csv: return render_csv(report);
        case ReportFormat::text: return render_text(report);
    }
    throw std::logic_error("unknown format");
}

std::string render_footer(const BatchReport& report, ReportFormat fmt) {
    const char* prefix = fmt == ReportFormat::json ? "// "
                         : fmt == ReportFormat::csv ? "# "
                                                    : "";
    std::ostringstream os;
    if (fmt == ReportFormat::text) os << "---- non-canonical footer ----\n";
    else os << prefix << "---- non-canonical footer ----\n";
    char buf[64];
    for (const Cell& cell : report.cells) {
        if (cell.skipped) continue;
        std::snprintf(buf, sizeof buf, "%.3f", cell.runtime_ms);
        os << prefix << "runtime-ms " << cell.id << ": " << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "%.3f", report.total_runtime_ms);
    os << prefix << "runtime-ms total: " << buf << "\n";
    return os.str();
}

std::string render_report(const BatchReport& report, ReportFormat fmt) {
    return render_canonical(report, fmt) + render_footer(report, fmt);
}

} // namespace ffineq
