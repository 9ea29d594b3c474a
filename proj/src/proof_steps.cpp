#include "ffineq/proof_steps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffineq/inequalities.hpp"

namespace ffineq {

std::string proof_step_name(ProofStep step) {
    switch (step) {
        case ProofStep::ff1: return "FF1";
        case ProofStep::a1_triangle: return "A1_triangle";
        case ProofStep::a1_equality: return "A1_equality";
        case ProofStep::a2_triangle: return "A2_triangle";
        case ProofStep::a2_equality: return "A2_equality";
        case ProofStep::ff2: return "FF2";
        case ProofStep::e1: return "E1";
        case ProofStep::f1: return "F1";
        case ProofStep::f2: return "F2";
        case ProofStep::f3: return "F3";
    }
    return "?";
}

std::array<ProofStep, kProofStepCount> all_proof_steps() {
    return {ProofStep::ff1, ProofStep::a1_triangle, ProofStep::a1_equality,
            ProofStep::a2_triangle, ProofStep::a2_equality, ProofStep::ff2,
            ProofStep::e1, ProofStep::f1, ProofStep::f2, ProofStep::f3};
}

ProofStepKernel::ProofStepKernel(const PrimeField& f, std::size_t dim, const NormSpec& spec)
    : p_(f.prime()), dim_(dim), norm_(spec) {
    norm_.validate();
    if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
    if (dim_ > kMaxDim) {
        throw std::invalid_argument("dimension " + std::to_string(dim_) + " exceeds limit " +
                                    std::to_string(kMaxDim));
    }
    two_ = submodulus(field_two(f));
    if (two_ == 0) {
        throw std::domain_error("proof-step audit requires 2 != 0 (p = 2 rejected)");
    }
    exact_ = norm_.integer_valued();
}

ProofStepEvaluation ProofStepKernel::eval(std::span<const std::uint64_t> x,
                                          std::span<const std::uint64_t> y) const {
    std::uint64_t sum_buf[kMaxDim];
    std::uint64_t dxy_buf[kMaxDim];
    std::uint64_t dyx_buf[kMaxDim];
    std::uint64_t two_x[kMaxDim];
    std::uint64_t two_y[kMaxDim];
    for (std::size_t j = 0; j < dim_; ++j) {
        std::uint64_t s = x[j] + y[j];
        if (s >= p_) s -= p_;
        sum_buf[j] = s;
        dxy_buf[j] = x[j] >= y[j] ? x[j] - y[j] : x[j] + p_ - y[j];
        dyx_buf[j] = y[j] >= x[j] ? y[j] - x[j] : y[j] + p_ - x[j];
        std::uint64_t dx = 2 * x[j];
        if (dx >= p_) dx -= p_;
        two_x[j] = dx;
        std::uint64_t dy = 2 * y[j];
        if (dy >= p_) dy -= p_;
        two_y[j] = dy;
    }

    const double nx = norm_real(x, norm_);
    const double ny = norm_real(y, norm_);
    const double a = norm_real({sum_buf, dim_}, norm_);
    const double dxy = norm_real({dxy_buf, dim_}, norm_);
    const double dyx = norm_real({dyx_buf, dim_}, norm_);
    const double n2x = norm_real({two_x, dim_}, norm_);
    const double n2y = norm_real({two_y, dim_}, norm_);
    const double t = static_cast<double>(two_);

    const double eps = exact_ ? 0.0 : kSlackEpsilon;
    const auto le = [eps](double lhs, double rhs) {
        return StepEval{lhs <= rhs + eps, lhs, rhs};
    };
    const auto eq = [eps](double lhs, double rhs) {
        return StepEval{std::abs(lhs - rhs) <= eps, lhs, rhs};
    };

    ProofStepEvaluation out;
    out.steps[static_cast<std::size_t>(ProofStep::ff1)] =
        eq(nx + ny + std::abs(nx - ny), 2.0 * std::max(nx, ny));
    out.steps[static_cast<std::size_t>(ProofStep::a1_triangle)] = le(n2x, a + dxy);
    out.steps[static_cast<std::size_t>(ProofStep::a1_equality)] = eq(n2x, t * nx);
    out.steps[static_cast<std::size_t>(ProofStep::a2_triangle)] = le(n2y, a + dyx);
    out.steps[static_cast<std::size_t>(ProofStep::a2_equality)] = eq(n2y, t * ny);
    out.steps[static_cast<std::size_t>(ProofStep::ff2)] =
        le(t * std::max(nx, ny), a + std::max(dxy, dyx));
    out.steps[static_cast<std::size_t>(ProofStep::e1)] =
        eq(nx + ny - std::abs(nx - ny), 2.0 * std::min(nx, ny));
    out.steps[static_cast<std::size_t>(ProofStep::f1)] = le(a - dyx, t * nx);
    out.steps[static_cast<std::size_t>(ProofStep::f2)] = le(a - dxy, t * ny);
    out.steps[static_cast<std::size_t>(ProofStep::f3)] =
        le(a - std::max(dyx, dxy), t * std::min(nx, ny));
    return out;
}

ProofStepEvaluation proof_step_audit(const Vector& x, const Vector& y, const NormSpec& spec) {
    if (x.prime() != y.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(x.prime()) + " vs Z_" +
                                    std::to_string(y.prime()));
    }
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()));
    }
    ProofStepKernel kernel(x.field(), x.dim(), spec);
    return kernel.eval(x.residues(), y.residues());
}

} // namespace ffineq
