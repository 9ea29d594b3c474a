#include "ffineq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ffineq/sweep.hpp"

namespace ffineq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t checked_pair_count(std::uint64_t n_vectors, const EnumerationCaps& caps,
                                 std::uint64_t prime, std::size_t dim) {
    const unsigned __int128 pairs = static_cast<unsigned __int128>(n_vectors) * n_vectors;
    if (pairs > caps.max_pairs) {
        const std::uint64_t required = pairs > static_cast<unsigned __int128>(UINT64_MAX)
                                           ? UINT64_MAX
                                           : static_cast<std::uint64_t>(pairs);
        throw resource_error("pair sweep over Z_" + std::to_string(prime) + "^" +
                                 std::to_string(dim) + " needs " + std::to_string(required) +
                                 " pairs, cap is " + std::to_string(caps.max_pairs),
                             required);
    }
    return static_cast<std::uint64_t>(pairs);
}

struct VerifyAcc {
    std::vector<SlackRecord> violations;
    std::uint64_t violation_count = 0;
    std::uint64_t equality_count = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    bool has_min = false;
    SlackRecord min_record;
};

VerifyAcc merge_verify(VerifyAcc a, VerifyAcc b) {
    a.violation_count += b.violation_count;
    a.equality_count += b.equality_count;
    for (auto& rec : b.violations) a.violations.push_back(std::move(rec));
    // Strict < keeps the earliest chunk's witness on ties.
    if (b.has_min && (!a.has_min || b.min_slack < a.min_slack)) {
        a.min_slack = b.min_slack;
        a.min_record = std::move(b.min_record);
        a.has_min = true;
    }
    return a;
}

} // namespace

VerificationReport verify_exhaustive(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                     InequalityId inequality, const VerifyOptions& opts) {
    const auto start = Clock::now();

    SlackKernel kernel(f, dim, norm, inequality, opts.outer_mode, opts.coefficient);
    const std::size_t od = kernel.operand_dim();
    const std::uint64_t p = f.prime();
    const std::uint64_t n_vectors =
        is_scalar_inequality(inequality) ? p : vector_space_size(f, dim, opts.caps.max_vectors);
    const std::uint64_t total = checked_pair_count(n_vectors, opts.caps, p, od);
    const std::size_t cap = opts.caps.max_violations;

    const auto body = [&](std::uint64_t begin, std::uint64_t end) {
        VerifyAcc acc;
        std::vector<std::uint64_t> xc(od), yc(od);
        decode_vector(begin / n_vectors, p, xc);
        decode_vector(begin % n_vectors, p, yc);
        std::uint64_t j = begin % n_vectors;
        for (std::uint64_t k = begin; k < end; ++k) {
            const SlackKernel::Eval e = kernel.eval(xc, yc);
            if (e.violation) {
                ++acc.violation_count;
                if (acc.violations.size() < cap) {
                    SlackRecord rec;
                    rec.x = xc;
                    rec.y = yc;
                    rec.lhs = e.lhs;
                    rec.rhs = e.rhs;
                    rec.slack = e.slack;
                    rec.is_violation = true;
                    rec.is_equality = false;
                    acc.violations.push_back(std::move(rec));
                }
            }
            if (e.equality) ++acc.equality_count;
            if (!acc.has_min || e.slack < acc.min_slack) {
                acc.min_slack = e.slack;
                acc.has_min = true;
                acc.min_record.x = xc;
                acc.min_record.y = yc;
                acc.min_record.lhs = e.lhs;
                acc.min_record.rhs = e.rhs;
                acc.min_record.slack = e.slack;
                acc.min_record.is_violation = e.violation;
                acc.min_record.is_equality = e.equality;
            }
            increment_coords(yc, p);
            if (++j == n_vectors) {
                j = 0;
                increment_coords(xc, p);
            }
        }
        return acc;
    };

    VerifyAcc acc = sweep_reduce<VerifyAcc>(total, opts.workers, body, merge_verify);

    VerificationReport report;
    report.prime = p;
    report.dim = dim;
    report.norm = norm;
    report.inequality = inequality;
    report.outer_mode = opts.outer_mode;
    report.scalar_sweep = is_scalar_inequality(inequality);
    if (has_coefficient(inequality)) {
        if (kernel.exact()) {
            report.coefficient = kernel.coefficient_rational();
        } else {
            report.coefficient_real = kernel.coefficient_real();
        }
    }
    report.pairs_checked = total;
    report.violation_count = acc.violation_count;
    report.equality_count = acc.equality_count;
    // Chunks are contiguous index ranges, so the concatenation is already
    // in enumeration (lexicographic) order; truncate to the listing cap.
    if (acc.violations.size() > cap) acc.violations.resize(cap);
    report.violations = std::move(acc.violations);
    if (acc.has_min) {
        report.min_slack = std::abs(acc.min_slack) <= kernel.epsilon() ? 0.0 : acc.min_slack;
        report.min_slack_x = std::move(acc.min_record.x);
        report.min_slack_y = std::move(acc.min_record.y);
    }
    report.runtime_ms = elapsed_ms(start);
    return report;
}

namespace {

// Shared per-pair geometry for the sharpness accumulators.
struct PairTerms {
    double lhs, total, a, m;                   // float path
    std::int64_t ilhs, itotal, ia, im;         // exact path
};

class SharpnessSweep {
public:
    SharpnessSweep(const PrimeField& f, std::size_t dim, const NormSpec& norm)
        : p_(f.prime()), dim_(dim), norm_(norm), exact_(norm.integer_valued()) {
        norm_.validate();
        if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
        if (dim_ > SlackKernel::kMaxDim) {
            throw std::invalid_argument("dimension " + std::to_string(dim_) + " exceeds limit " +
                                        std::to_string(SlackKernel::kMaxDim));
        }
        if (submodulus(field_two(f)) == 0) {
            throw std::domain_error("sharpness probe requires 2 != 0 (p = 2 rejected)");
        }
    }

    bool exact() const { return exact_; }

    PairTerms terms(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) const {
        std::uint64_t sum_buf[SlackKernel::kMaxDim];
        std::uint64_t dxy_buf[SlackKernel::kMaxDim];
        std::uint64_t dyx_buf[SlackKernel::kMaxDim];
        for (std::size_t j = 0; j < dim_; ++j) {
            std::uint64_t s = x[j] + y[j];
            if (s >= p_) s -= p_;
            sum_buf[j] = s;
            dxy_buf[j] = x[j] >= y[j] ? x[j] - y[j] : x[j] + p_ - y[j];
            dyx_buf[j] = y[j] >= x[j] ? y[j] - x[j] : y[j] + p_ - x[j];
        }
        PairTerms t{};
        if (exact_) {
            const bool use_sup = norm_.kind == NormSpec::Kind::sup;
            const auto N = [&](std::span<const std::uint64_t> v) {
                return static_cast<std::int64_t>(use_sup ? norm_sup_int(v) : norm_l1_int(v));
            };
            const std::int64_t nx = N(x);
            const std::int64_t ny = N(y);
            t.ilhs = nx >= ny ? nx - ny : ny - nx;
            t.itotal = nx + ny;
            t.ia = N({sum_buf, dim_});
            t.im = std::max(N({dxy_buf, dim_}), N({dyx_buf, dim_}));
            t.lhs = static_cast<double>(t.ilhs);
            t.total = static_cast<double>(t.itotal);
            t.a = static_cast<double>(t.ia);
            t.m = static_cast<double>(t.im);
        } else {
            const double nx = norm_real(x, norm_);
            const double ny = norm_real(y, norm_);
            t.lhs = std::abs(nx - ny);
            t.total = nx + ny;
            t.a = norm_real({sum_buf, dim_}, norm_);
            t.m = std::max(norm_real({dxy_buf, dim_}, norm_),
                           norm_real({dyx_buf, dim_}, norm_));
        }
        return t;
    }

private:
    std::uint64_t p_;
    std::size_t dim_;
    NormSpec norm_;
    bool exact_;
};

struct SharpAcc {
    bool has_bound = false;
    // Exact path: bound = num/den with den > 0. Float path: bound_real.
    std::int64_t num = 0;
    std::int64_t den = 1;
    double bound_real = 0.0;
    std::vector<std::uint64_t> wx, wy;
    std::uint64_t skipped = 0;
};

bool rational_less(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
    // d1, d2 > 0
    return static_cast<__int128>(n1) * d2 < static_cast<__int128>(n2) * d1;
}

SharpAcc merge_sharp(SharpAcc a, SharpAcc b, bool exact) {
    a.skipped += b.skipped;
    if (b.has_bound) {
        bool take_b;
        if (!a.has_bound) {
            take_b = true;
        } else if (exact) {
            take_b = rational_less(a.num, a.den, b.num, b.den); // strict: earlier chunk wins ties
        } else {
            take_b = a.bound_real < b.bound_real;
        }
        if (take_b) {
            a.has_bound = true;
            a.num = b.num;
            a.den = b.den;
            a.bound_real = b.bound_real;
            a.wx = std::move(b.wx);
            a.wy = std::move(b.wy);
        }
    }
    return a;
}

} // namespace

SharpnessResult sharpness_probe(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                InequalityId which, const EnumerationCaps& caps,
                                unsigned workers) {
    if (!has_coefficient(which)) {
        throw std::invalid_argument("sharpness probe applies to tm1/tm2 only, got " +
                                    inequality_name(which));
    }
    const auto start = Clock::now();
    SharpnessSweep sweep(f, dim, norm);
    const std::uint64_t p = f.prime();
    const std::uint64_t n_vectors = vector_space_size(f, dim, caps.max_vectors);
    const std::uint64_t total = checked_pair_count(n_vectors, caps, p, dim);
    const bool exact = sweep.exact();
    const bool tm1 = which == InequalityId::tm1;

    const auto body = [&](std::uint64_t begin, std::uint64_t end) {
        SharpAcc acc;
        std::vector<std::uint64_t> xc(dim), yc(dim);
        decode_vector(begin / n_vectors, p, xc);
        decode_vector(begin % n_vectors, p, yc);
        std::uint64_t j = begin % n_vectors;
        const auto take = [&](std::int64_t n, std::int64_t d, double r) {
            const bool better = !acc.has_bound ||
                                (exact ? rational_less(acc.num, acc.den, n, d)
                                       : acc.bound_real < r);
            if (better) {
                acc.has_bound = true;
                acc.num = n;
                acc.den = d;
                acc.bound_real = r;
                acc.wx = xc;
                acc.wy = yc;
            }
        };
        for (std::uint64_t k = begin; k < end; ++k) {
            const PairTerms t = sweep.terms(xc, yc);
            if (tm1) {
                // c*(a+m) >= lhs + total: lower bound at every nonzero denominator.
                if (exact) {
                    const std::int64_t d = t.ia + t.im;
                    if (d == 0) {
                        ++acc.skipped;
                    } else {
                        take(t.ilhs + t.itotal, d, static_cast<double>(t.ilhs + t.itotal) / d);
                    }
                } else {
                    const double d = t.a + t.m;
                    if (d == 0.0) {
                        ++acc.skipped;
                    } else {
                        take(0, 1, (t.lhs + t.total) / d);
                    }
                }
            } else {
                // c*(a-m) <= total - lhs: a lower bound only where a-m < 0;
                // a-m = 0 puts no constraint on c and is skipped.
                if (exact) {
                    const std::int64_t d = t.ia - t.im;
                    if (d == 0) {
                        ++acc.skipped;
                    } else if (d < 0) {
                        take(-(t.itotal - t.ilhs), -d,
                             static_cast<double>(t.itotal - t.ilhs) / d);
                    }
                } else {
                    const double d = t.a - t.m;
                    if (d == 0.0) {
                        ++acc.skipped;
                    } else if (d < 0.0) {
                        take(0, 1, (t.total - t.lhs) / d);
                    }
                }
            }
            increment_coords(yc, p);
            if (++j == n_vectors) {
                j = 0;
                increment_coords(xc, p);
            }
        }
        return acc;
    };

    SharpAcc acc = sweep_reduce<SharpAcc>(
        total, workers, body, [exact](SharpAcc a, SharpAcc b) {
            return merge_sharp(std::move(a), std::move(b), exact);
        });

    if (!acc.has_bound) {
        throw std::logic_error("sharpness probe found no binding pair");
    }

    SharpnessResult result;
    result.prime = p;
    result.dim = dim;
    result.norm = norm;
    result.inequality = which;
    if (exact) {
        result.c_star_exact = Rational(acc.num, acc.den);
        result.c_star = result.c_star_exact->to_double();
    } else {
        result.c_star = acc.bound_real;
    }
    result.witness_x = std::move(acc.wx);
    result.witness_y = std::move(acc.wy);
    result.skipped_pairs = acc.skipped;
    result.pairs_checked = total;
    result.runtime_ms = elapsed_ms(start);
    return result;
}

namespace {

struct AuditAcc {
    struct PerStep {
        std::uint64_t failures = 0;
        bool has_witness = false;
        StepWitness witness;
    };
    std::array<PerStep, kProofStepCount> steps;
};

AuditAcc merge_audit(AuditAcc a, AuditAcc b) {
    for (std::size_t i = 0; i < kProofStepCount; ++i) {
        a.steps[i].failures += b.steps[i].failures;
        if (!a.steps[i].has_witness && b.steps[i].has_witness) {
            a.steps[i].has_witness = true;
            a.steps[i].witness = std::move(b.steps[i].witness);
        }
    }
    return a;
}

} // namespace

ProofStepReport audit_proof_steps(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                                  const EnumerationCaps& caps, unsigned workers) {
    ProofStepKernel kernel(f, dim, norm);
    const std::uint64_t p = f.prime();
    const std::uint64_t n_vectors = vector_space_size(f, dim, caps.max_vectors);
    const std::uint64_t total = checked_pair_count(n_vectors, caps, p, dim);

    const auto body = [&](std::uint64_t begin, std::uint64_t end) {
        AuditAcc acc;
        std::vector<std::uint64_t> xc(dim), yc(dim);
        decode_vector(begin / n_vectors, p, xc);
        decode_vector(begin % n_vectors, p, yc);
        std::uint64_t j = begin % n_vectors;
        for (std::uint64_t k = begin; k < end; ++k) {
            const ProofStepEvaluation e = kernel.eval(xc, yc);
            for (std::size_t i = 0; i < kProofStepCount; ++i) {
                if (!e.steps[i].pass) {
                    auto& slot = acc.steps[i];
                    ++slot.failures;
                    if (!slot.has_witness) {
                        slot.has_witness = true;
                        slot.witness = {xc, yc, e.steps[i].lhs, e.steps[i].rhs};
                    }
                }
            }
            increment_coords(yc, p);
            if (++j == n_vectors) {
                j = 0;
                increment_coords(xc, p);
            }
        }
        return acc;
    };

    AuditAcc acc = sweep_reduce<AuditAcc>(total, workers, body, merge_audit);

    ProofStepReport report;
    report.prime = p;
    report.dim = dim;
    report.norm = norm;
    report.pairs_checked = total;
    const auto steps = all_proof_steps();
    for (std::size_t i = 0; i < kProofStepCount; ++i) {
        StepOutcome& out = report.steps[i];
        out.step = steps[i];
        out.failures = acc.steps[i].failures;
        out.passes = total - out.failures;
        if (acc.steps[i].has_witness) {
            out.first_failure = std::move(acc.steps[i].witness);
        }
    }
    return report;
}

} // namespace ffineq
