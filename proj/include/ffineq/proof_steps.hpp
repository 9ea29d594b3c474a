#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffineq/field.hpp"
#include "ffineq/norms.hpp"

namespace ffineq {

/**
 * Step-by-step audit of the derivation behind the tm inequalities.
 *
 * Writing N for the norm, t = |2|, A = N(x+y), Dxy = N(x-y),
 * Dyx = N(y-x), the labeled steps are checked per pair as stated:
 *
 *   FF1          Nx + Ny + abs(Nx-Ny) = 2 max{Nx, Ny}        (real identity)
 *   A1_triangle  N(2x) <= A + Dxy
 *   A1_equality  N(2x) = t Nx
 *   A2_triangle  N(2y) <= A + Dyx
 *   A2_equality  N(2y) = t Ny
 *   FF2          t max{Nx, Ny} <= A + max{Dxy, Dyx}
 *   E1           Nx + Ny - abs(Nx-Ny) = 2 min{Nx, Ny}        (real identity)
 *   F1           A - Dyx <= t Nx
 *   F2           A - Dxy <= t Ny
 *   F3           A - max{Dyx, Dxy} <= t min{Nx, Ny}
 *
 * FF1/E1 are identities on nonnegative reals and can never fail. The
 * triangle halves of A1/A2 and the conclusions F1/F2/F3 follow from the
 * sub-norm axioms alone. The equality halves of A1/A2 claim
 * N(2x) = t N(x) where the axioms only give <=, so they (and the FF2
 * bound derived from them) are the steps that genuinely can fail.
 * Requires 2 != 0.
 */

enum class ProofStep {
    ff1,
    a1_triangle,
    a1_equality,
    a2_triangle,
    a2_equality,
    ff2,
    e1,
    f1,
    f2,
    f3,
};

inline constexpr std::size_t kProofStepCount = 10;

std::string proof_step_name(ProofStep step);
std::array<ProofStep, kProofStepCount> all_proof_steps();

struct StepEval {
    bool pass = true;
    double lhs = 0.0;
    double rhs = 0.0;
};

// Verdicts for one input pair, one entry per step in enum order.
struct ProofStepEvaluation {
    std::array<StepEval, kProofStepCount> steps;

    const StepEval& at(ProofStep step) const { return steps[static_cast<std::size_t>(step)]; }
};

// Per-pair audit; pre: matching dimension/field, p != 2.
ProofStepEvaluation proof_step_audit(const Vector& x, const Vector& y, const NormSpec& spec);

struct StepWitness {
    std::vector<std::uint64_t> x;
    std::vector<std::uint64_t> y;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct StepOutcome {
    ProofStep step{};
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::optional<StepWitness> first_failure; // earliest pair in enumeration order
};

struct ProofStepReport {
    std::uint64_t prime = 0;
    std::size_t dim = 0;
    NormSpec norm;
    std::uint64_t pairs_checked = 0;
    std::array<StepOutcome, kProofStepCount> steps;

    const StepOutcome& outcome(ProofStep step) const {
        return steps[static_cast<std::size_t>(step)];
    }
};

// Internal per-pair evaluator mirroring SlackKernel; used by the sweep.
class ProofStepKernel {
public:
    static constexpr std::size_t kMaxDim = 64;

    ProofStepKernel(const PrimeField& f, std::size_t dim, const NormSpec& spec);

    ProofStepEvaluation eval(std::span<const std::uint64_t> x,
                             std::span<const std::uint64_t> y) const;

    bool exact() const { return exact_; }

private:
    std::uint64_t p_;
    std::size_t dim_;
    NormSpec norm_;
    std::uint64_t two_;
    bool exact_;
};

} // namespace ffineq
