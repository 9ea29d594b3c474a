#pragma once

#include <string>

#include "ffineq/report.hpp"

namespace ffineq {

// Batch drivers behind the CLI subcommands. Each walks the RunSpec
// cross product (primes x dims x norms x inequalities) in order,
// converts per-cell resource overruns into skip notices, and marks
// findings for the exit-code contract (0 clean, 1 findings, 2 usage).

BatchReport cmd_axioms(const RunSpec& spec);
BatchReport cmd_verify(const RunSpec& spec);
BatchReport cmd_sharpness(const RunSpec& spec);
BatchReport cmd_audit_proof(const RunSpec& spec);

// Dispatch on spec.command; validates first.
BatchReport run_command(const RunSpec& spec);

// Streaming CSV dump with one row per enumerated pair for each verify
// cell (exactly pairs_checked rows per cell); canonical body only.
std::string render_full_dump_csv(const BatchReport& report);

} // namespace ffineq
