#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffineq/enumeration.hpp"
#include "ffineq/inequalities.hpp"
#include "ffineq/proof_steps.hpp"

namespace ffineq {

/**
 * Exhaustive verification over enumerated spaces.
 *
 * verify_exhaustive scores one inequality on every ordered pair of
 * Z_p^d (ordered, because N(x-y) != N(y-x) in general), aggregating
 * violations, equality cases and the minimum slack with witness. The
 * pair grid may be split across workers; merging is an associative
 * reduction followed by the enumeration order's lexicographic sort, so
 * reports are identical for any worker count.
 */

struct VerifyOptions {
    OuterMode outer_mode = OuterMode::field_modulus; // ti only
    Coefficient coefficient{};                       // tm only; default 2/|2|
    EnumerationCaps caps{};
    unsigned workers = 0; // 0 = hardware concurrency
};

struct VerificationReport {
    std::uint64_t prime = 0;
    std::size_t dim = 0;
    NormSpec norm;
    InequalityId inequality = InequalityId::rt;
    OuterMode outer_mode = OuterMode::field_modulus;
    std::optional<Rational> coefficient;      // tm, exact path
    std::optional<double> coefficient_real;   // tm, float path
    bool scalar_sweep = false;                // ti/te sweep Z_p x Z_p

    std::uint64_t pairs_checked = 0;
    std::vector<SlackRecord> violations; // lexicographic by (x, y), capped
    std::uint64_t violation_count = 0;   // total, uncapped
    std::uint64_t equality_count = 0;
    // Snapped to 0 when within the active epsilon, so min_slack >= 0
    // exactly when the violation set is empty.
    double min_slack = 0.0;
    std::vector<std::uint64_t> min_slack_x;
    std::vector<std::uint64_t> min_slack_y;

    double runtime_ms = 0.0; // non-canonical

    bool pass() const { return violation_count == 0; }
};

VerificationReport verify_exhaustive(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                     InequalityId inequality, const VerifyOptions& opts = {});

/**
 * Minimal coefficient probe for the tm forms.
 *
 * Replaces the 2/|2| factor by a free parameter c and computes the
 * smallest c for which the form holds over the whole pair grid:
 * tm1 constrains c from below at every pair with N(x+y) + max > 0;
 * tm2 at every pair where the c-terms point downward. Pairs that put
 * no constraint on c (zero denominator) are skipped and counted.
 * Contract: re-verifying with c_star is clean, and the witness pair
 * violates at any c < c_star.
 */
struct SharpnessResult {
    std::uint64_t prime = 0;
    std::size_t dim = 0;
    NormSpec norm;
    InequalityId inequality = InequalityId::tm1;

    double c_star = 0.0;
    std::optional<Rational> c_star_exact; // integer-valued norms
    std::vector<std::uint64_t> witness_x;
    std::vector<std::uint64_t> witness_y;
    std::uint64_t skipped_pairs = 0;
    std::uint64_t pairs_checked = 0;

    double runtime_ms = 0.0; // non-canonical
};

SharpnessResult sharpness_probe(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                InequalityId which, const EnumerationCaps& caps = {},
                                unsigned workers = 0);

// Proof-step audit over every ordered pair of Z_p^d; p != 2.
ProofStepReport audit_proof_steps(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                  const EnumerationCaps& caps = {}, unsigned workers = 0);

} // namespace ffineq
