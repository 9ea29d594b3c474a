#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffineq/axioms.hpp"
#include "ffineq/inequalities.hpp"
#include "ffineq/verify.hpp"

namespace ffineq {

inline constexpr const char* kToolVersion = "1.0.0";

/**
 * Batch reporting with deterministic bytes.
 *
 * A report is the canonical body plus a clearly marked non-canonical
 * footer holding runtimes; the body is byte-identical across runs for
 * an identical RunSpec and tool version (no timestamps, fixed ordering,
 * reals snapped to 12 significant digits). JSON footers are comment
 * lines (`// ...`) after the object, CSV footers `# ...` lines, text
 * footers follow a marker line.
 */

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& token);
std::string format_name(ReportFormat fmt);

struct RunSpec {
    std::string command; // axioms | verify | sharpness | audit-proof
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> dims{1};
    std::vector<NormSpec> norms{NormSpec::l1()};
    std::vector<InequalityId> inequalities;
    OuterMode outer_mode = OuterMode::field_modulus;
    ReportFormat format = ReportFormat::text;
    std::string out_path; // empty = stdout
    EnumerationCaps caps;
    bool full_dump = false;
    unsigned workers = 0;
};

// Throws std::invalid_argument on anything the CLI should report as a
// usage error (unknown command, empty/composite primes, dim 0, bad
// exponent, non-tm inequality for sharpness, ...).
void validate_run_spec(const RunSpec& spec);

struct Cell {
    enum class Kind { field_axioms, subnorm_axioms, verification, sharpness, proof_audit };

    Kind kind = Kind::verification;
    std::string id;
    std::uint64_t prime = 0;
    std::optional<std::size_t> dim;
    std::optional<NormSpec> norm;
    std::optional<InequalityId> inequality;

    bool skipped = false;
    std::string skip_reason;
    bool finding = false;
    double runtime_ms = 0.0; // non-canonical

    std::optional<AxiomReport> axioms;
    std::optional<VerificationReport> verification;
    std::optional<SharpnessResult> sharpness;
    std::optional<Rational> paper_coefficient;      // sharpness cells
    std::optional<std::string> paper_comparison;    // "less" | "equal" | "greater"
    std::optional<ProofStepReport> audit;
};

struct BatchReport {
    std::string version = kToolVersion;
    RunSpec spec;
    std::vector<Cell> cells; // deterministic cross-product order
    double total_runtime_ms = 0.0;

    std::uint64_t cells_passed() const;
    std::uint64_t cells_with_findings() const;
    std::uint64_t cells_skipped() const;
    bool any_finding() const { return cells_with_findings() > 0; }
};

// Deterministic real formatting: round to 12 significant digits, fold
// negative zero to zero.
double snap_real(double v);
std::string fmt_real(double v);

// Residues as colon-joined text: (1,2,0) -> "1:2:0".
std::string join_residues(std::span<const std::uint64_t> coords);

std::string render_canonical(const BatchReport& report, ReportFormat fmt);
std::string render_footer(const BatchReport& report, ReportFormat fmt);

// canonical + footer
std::string render_report(const BatchReport& report, ReportFormat fmt);

} // namespace ffineq
