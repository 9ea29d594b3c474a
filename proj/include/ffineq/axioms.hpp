#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ffineq/enumeration.hpp"
#include "ffineq/field.hpp"
#include "ffineq/norms.hpp"

namespace ffineq {

/**
 * Exhaustive axiom audits.
 *
 * A sub-modulus map must satisfy, over all field scalars,
 *   (i)   |a| = 0  =>  a = 0
 *   (ii)  |a*b| <= |a||b|
 *   (iii) |a+b| <= |a|+|b|
 * and a sub-norm the analogous three over vectors (with (ii) ranging over
 * scalar/vector pairs). The auditors enumerate every case, collect every
 * violation with its witness, and sort witnesses lexicographically so the
 * report is independent of evaluation order.
 */

struct AxiomViolation {
    std::string axiom;                              // "i", "ii", "iii"
    std::vector<std::vector<std::uint64_t>> inputs; // witness inputs, scalars as 1-tuples
    double lhs = 0.0;
    double rhs = 0.0;

    bool operator==(const AxiomViolation& other) const = default;
};

struct AxiomCheck {
    std::string axiom;
    std::uint64_t cases = 0;
};

struct AxiomReport {
    std::vector<AxiomCheck> axioms_checked;
    std::vector<AxiomViolation> violations; // capped listing, lexicographic
    std::uint64_t violation_count = 0;      // total, uncapped

    bool pass() const { return violation_count == 0; }
};

// Audits the canonical-representative sub-modulus of Z_p over all scalars
// and all scalar pairs.
AxiomReport check_submodulus_axioms(const PrimeField& f, const EnumerationCaps& caps = {});

// Audits `spec` as a sub-norm on Z_p^dim. Exact comparisons for the
// integer-valued norms, tolerance 1e-9 otherwise.
AxiomReport check_subnorm_axioms(const PrimeField& f, std::size_t dim, const NormSpec& spec,
                                 const EnumerationCaps& caps = {});

// Same audit against an arbitrary norm candidate; lets tests feed in
// deliberately broken maps (a norm stub returning 0 everywhere must fail
// axiom (i)).
using NormFn = std::function<double(std::span<const std::uint64_t>)>;
AxiomReport check_subnorm_axioms_fn(const PrimeField& f, std::size_t dim, const NormFn& norm_fn,
                                    double epsilon, const EnumerationCaps& caps = {});

} // namespace ffineq
