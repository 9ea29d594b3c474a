#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ffineq/field.hpp"
#include "ffineq/norms.hpp"

namespace ffineq {

/**
 * Per-pair slack for the triangle-inequality family over sub-normed
 * spaces.
 *
 * Each inequality is scored as slack = rhs - lhs at a concrete input
 * pair; negative slack is a violation, zero slack an equality case.
 * Checked forms, writing N for the norm and |.| for the sub-modulus:
 *
 *   ti   (scalar)  lhs = outer|N/A| of (|r|-|s|), rhs = min{|r-s|, |r+s|}
 *   te   (scalar)  lhs = abs(|r|-|s|),  rhs = |r-s| + |r+s| - (|r|+|s|)
 *   mi1  (vector)  lhs = abs(Nx-Ny),   rhs = N(x+y) + N(x-y) - (Nx+Ny)
 *   mi2  (vector)  lhs = abs(Nx-Ny),   rhs = Nx + Ny - abs(N(x+y) - N(x-y))
 *   rt   (vector)  lhs = abs(Nx-Ny),   rhs = max{N(x-y), N(y-x)}
 *   tm1  (vector)  lhs = abs(Nx-Ny),   rhs = c*N(x+y) + c*max{N(x-y), N(y-x)} - (Nx+Ny)
 *   tm2  (vector)  lhs = abs(Nx-Ny),   rhs = Nx + Ny - c*N(x+y) + c*max{N(y-x), N(x-y)}
 *
 * with c = 2/|2| by default (requires 2 != 0, i.e. p != 2). mi1/mi2 are
 * the normed-linear-space forms evaluated verbatim as diagnostics; they
 * are expected to fail here because N(-z) != N(z) in general.
 *
 * The engine treats every form as a hypothesis: records carry the
 * verdict neutrally. Classification is exact (integer, epsilon 0) when
 * the norm is integer-valued and the coefficient is rational; otherwise
 * double with epsilon 1e-9.
 */

enum class InequalityId { ti, te, mi1, mi2, rt, tm1, tm2 };

InequalityId parse_inequality(const std::string& token); // throws invalid_argument
std::string inequality_name(InequalityId id);

// ti/te range over field scalars, everything else over vectors.
bool is_scalar_inequality(InequalityId id);
// tm1/tm2 carry the 2/|2| coefficient and require p != 2.
bool has_coefficient(InequalityId id);

// How the outer |.| in the scalar triangle check is read: as the real
// absolute value of |r|-|s|, or as the field sub-modulus of its
// canonical residue. Both readings are legitimate; field_modulus is the
// one behind the motivating Z_3 computation.
enum class OuterMode { real_abs, field_modulus };

OuterMode parse_outer_mode(const std::string& token);
std::string outer_mode_name(OuterMode mode);

// Exact rational, denominator always positive, reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational operator-(const Rational& other) const;
    static int compare(const Rational& a, const Rational& b); // -1/0/+1

    bool operator==(const Rational& other) const = default;
    std::string str() const;
};

// Coefficient replacing 2/|2| in the tm forms: default (monostate) means
// 2/|2| itself; a Rational keeps the exact-integer path; a double forces
// float classification.
using Coefficient = std::variant<std::monostate, Rational, double>;

constexpr double kSlackEpsilon = 1e-9;

struct SlackRecord {
    std::vector<std::uint64_t> x; // residues; scalars are 1-tuples
    std::vector<std::uint64_t> y;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool is_violation = false;
    bool is_equality = false;
};

// Stateless-per-pair evaluator bound to one (field, dim, norm,
// inequality) cell. Hot path for the exhaustive sweeps: eval() takes raw
// residue spans and does no allocation.
class SlackKernel {
public:
    static constexpr std::size_t kMaxDim = 64;

    SlackKernel(const PrimeField& f, std::size_t dim, const NormSpec& norm, InequalityId id,
                OuterMode outer_mode = OuterMode::field_modulus, const Coefficient& coeff = {});

    struct Eval {
        double lhs = 0.0;
        double rhs = 0.0;
        double slack = 0.0;
        bool violation = false;
        bool equality = false;
    };

    Eval eval(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) const;

    InequalityId id() const { return id_; }
    // 1 for the scalar checks regardless of the requested dimension.
    std::size_t operand_dim() const { return is_scalar_inequality(id_) ? 1 : dim_; }
    std::uint64_t prime() const { return p_; }
    bool exact() const { return exact_; }
    double epsilon() const { return exact_ ? 0.0 : kSlackEpsilon; }
    // Only meaningful for tm ids.
    Rational coefficient_rational() const;
    double coefficient_real() const { return coeff_real_; }

private:
    Eval eval_scalar(std::uint64_t r, std::uint64_t s) const;
    Eval eval_vector_exact(std::span<const std::uint64_t> x,
                           std::span<const std::uint64_t> y) const;
    Eval eval_vector_float(std::span<const std::uint64_t> x,
                           std::span<const std::uint64_t> y) const;

    std::uint64_t p_;
    std::size_t dim_;
    NormSpec norm_;
    InequalityId id_;
    OuterMode outer_mode_;
    bool exact_;
    bool coeff_is_rational_ = true;
    Rational coeff_rat_{1, 1};
    double coeff_real_ = 1.0;
};

// Spec-level single-pair operations.
SlackRecord ti_scalar_check(const FieldElement& r, const FieldElement& s, OuterMode outer_mode);
SlackRecord te_residual(const FieldElement& r, const FieldElement& s);
SlackRecord mi_slack(const Vector& x, const Vector& y, const NormSpec& spec, InequalityId which);
SlackRecord rt_slack(const Vector& x, const Vector& y, const NormSpec& spec);
SlackRecord tm_slack(const Vector& x, const Vector& y, const NormSpec& spec, InequalityId which,
                     const Coefficient& coeff = {});

} // namespace ffineq
