#include "ffineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ffineq {

InequalityId parse_inequality(const std::string& token) {
    if (token == "ti") return InequalityId::ti;
    if (token == "te") return InequalityId::te;
    if (token == "mi1") return InequalityId::mi1;
    if (token == "mi2") return InequalityId::mi2;
    if (token == "rt") return InequalityId::rt;
    if (token == "tm1") return InequalityId::tm1;
    if (token == "tm2") return InequalityId::tm2;
    throw std::invalid_argument("unknown inequality '" + token +
                                "' (expected ti, te, mi1, mi2, rt, tm1, tm2)");
}

std::string inequality_name(InequalityId id) {
    switch (id) {
        case InequalityId::ti: return "ti";
        case InequalityId::te: return "te";
        case InequalityId::mi1: return "mi1";
        case InequalityId::mi2: return "mi2";
        case InequalityId::rt: return "rt";
        case InequalityId::tm1: return "tm1";
        case InequalityId::tm2: return "tm2";
    }
    return "?";
}

bool is_scalar_inequality(InequalityId id) {
    return id == InequalityId::ti || id == InequalityId::te;
}

bool has_coefficient(InequalityId id) {
    return id == InequalityId::tm1 || id == InequalityId::tm2;
}

OuterMode parse_outer_mode(const std::string& token) {
    if (token == "real") return OuterMode::real_abs;
    if (token == "field") return OuterMode::field_modulus;
    throw std::invalid_argument("unknown outer mode '" + token + "' (expected real or field)");
}

std::string outer_mode_name(OuterMode mode) {
    return mode == OuterMode::real_abs ? "real" : "field";
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        den = 1;
    } else {
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
    }
}

Rational Rational::operator-(const Rational& other) const {
    const __int128 n = static_cast<__int128>(num) * other.den -
                       static_cast<__int128>(other.num) * den;
    const __int128 d = static_cast<__int128>(den) * other.den;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
        throw std::overflow_error("rational subtraction overflow");
    }
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

int Rational::compare(const Rational& a, const Rational& b) {
    const __int128 left = static_cast<__int128>(a.num) * b.den;
    const __int128 right = static_cast<__int128>(b.num) * a.den;
    if (left < right) return -1;
    if (left > right) return 1;
    return 0;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Classification from a denominator-cleared integer slack; slack is
// reported as islack/den so its sign matches the exact comparison.
SlackKernel::Eval classify_exact(__int128 islack, std::int64_t den, double lhs, double rhs) {
    SlackKernel::Eval e;
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = static_cast<double>(islack) / static_cast<double>(den);
    e.violation = islack < 0;
    e.equality = islack == 0;
    return e;
}

SlackKernel::Eval classify_float(double lhs, double rhs) {
    SlackKernel::Eval e;
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = rhs - lhs;
    e.violation = e.slack < -kSlackEpsilon;
    e.equality = std::abs(e.slack) <= kSlackEpsilon;
    return e;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : b - a;
}

} // namespace

SlackKernel::SlackKernel(const PrimeField& f, std::size_t dim, const NormSpec& norm,
                         InequalityId id, OuterMode outer_mode, const Coefficient& coeff)
    : p_(f.prime()), dim_(dim), norm_(norm), id_(id), outer_mode_(outer_mode) {
    norm_.validate();
    if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
    if (dim_ > kMaxDim) {
        throw std::invalid_argument("dimension " + std::to_string(dim_) + " exceeds limit " +
                                    std::to_string(kMaxDim));
    }

    if (has_coefficient(id_)) {
        const std::uint64_t two = submodulus(field_two(f));
        if (std::holds_alternative<std::monostate>(coeff)) {
            if (two == 0) {
                throw std::domain_error("theorem requires 2 != 0 (p = 2 rejected)");
            }
            coeff_rat_ = Rational(2, static_cast<std::int64_t>(two));
            coeff_real_ = coeff_rat_.to_double();
            coeff_is_rational_ = true;
        } else if (const Rational* r = std::get_if<Rational>(&coeff)) {
            if (two == 0) {
                throw std::domain_error("theorem requires 2 != 0 (p = 2 rejected)");
            }
            coeff_rat_ = *r;
            coeff_real_ = r->to_double();
            coeff_is_rational_ = true;
        } else {
            if (two == 0) {
                throw std::domain_error("theorem requires 2 != 0 (p = 2 rejected)");
            }
            coeff_real_ = std::get<double>(coeff);
            coeff_is_rational_ = false;
        }
    }

    const bool integer_norm = is_scalar_inequality(id_) || norm_.integer_valued();
    exact_ = integer_norm && (!has_coefficient(id_) || coeff_is_rational_);
}

Rational SlackKernel::coefficient_rational() const {
    if (!has_coefficient(id_) || !coeff_is_rational_) {
        throw std::logic_error("no rational coefficient on this kernel");
    }
    return coeff_rat_;
}

SlackKernel::Eval SlackKernel::eval_scalar(std::uint64_t r, std::uint64_t s) const {
    // Sub-modulus of a canonical residue is the residue itself.
    const std::uint64_t diff = r >= s ? r - s : r + p_ - s; // |r-s|
    std::uint64_t sum = r + s;                              // |r+s|
    if (sum >= p_) sum -= p_;

    if (id_ == InequalityId::ti) {
        const std::uint64_t rhs = std::min(diff, sum);
        const std::uint64_t lhs = outer_mode_ == OuterMode::real_abs ? abs_diff(r, s) : diff;
        const __int128 islack =
            static_cast<__int128>(rhs) - static_cast<__int128>(lhs);
        return classify_exact(islack, 1, static_cast<double>(lhs), static_cast<double>(rhs));
    }

    // te: does |r-s| + |r+s| - (|r|+|s|) still equal abs(|r|-|s|)?
    const std::int64_t rhs = static_cast<std::int64_t>(diff) + static_cast<std::int64_t>(sum) -
                             static_cast<std::int64_t>(r + s);
    const std::int64_t lhs = static_cast<std::int64_t>(abs_diff(r, s));
    return classify_exact(static_cast<__int128>(rhs) - lhs, 1, static_cast<double>(lhs),
                          static_cast<double>(rhs));
}

SlackKernel::Eval SlackKernel::eval_vector_exact(std::span<const std::uint64_t> x,
                                                 std::span<const std::uint64_t> y) const {
    std::uint64_t sum_buf[kMaxDim];
    std::uint64_t dxy_buf[kMaxDim];
    std::uint64_t dyx_buf[kMaxDim];
    for (std::size_t j = 0; j < dim_; ++j) {
        std::uint64_t s = x[j] + y[j];
        if (s >= p_) s -= p_;
        sum_buf[j] = s;
        dxy_buf[j] = x[j] >= y[j] ? x[j] - y[j] : x[j] + p_ - y[j];
        dyx_buf[j] = y[j] >= x[j] ? y[j] - x[j] : y[j] + p_ - x[j];
    }
    const bool use_sup = norm_.kind == NormSpec::Kind::sup;
    const auto N = [&](std::span<const std::uint64_t> v) {
        return use_sup ? norm_sup_int(v) : norm_l1_int(v);
    };

    const std::int64_t nx = static_cast<std::int64_t>(N(x));
    const std::int64_t ny = static_cast<std::int64_t>(N(y));
    const std::int64_t a = static_cast<std::int64_t>(N({sum_buf, dim_}));
    const std::int64_t dxy = static_cast<std::int64_t>(N({dxy_buf, dim_}));
    const std::int64_t dyx = static_cast<std::int64_t>(N({dyx_buf, dim_}));

    const std::int64_t lhs = nx >= ny ? nx - ny : ny - nx;
    const std::int64_t total = nx + ny;

    switch (id_) {
        case InequalityId::rt: {
            const std::int64_t rhs = std::max(dxy, dyx);
            return classify_exact(static_cast<__int128>(rhs) - lhs, 1, static_cast<double>(lhs),
                                  static_cast<double>(rhs));
        }
        case InequalityId::mi1: {
            const std::int64_t rhs = a + dxy - total;
            return classify_exact(static_cast<__int128>(rhs) - lhs, 1, static_cast<double>(lhs),
                                  static_cast<double>(rhs));
        }
        case InequalityId::mi2: {
            const std::int64_t inner = a >= dxy ? a - dxy : dxy - a;
            const std::int64_t rhs = total - inner;
            return classify_exact(static_cast<__int128>(rhs) - lhs, 1, static_cast<double>(lhs),
                                  static_cast<double>(rhs));
        }
        case InequalityId::tm1: {
            const std::int64_t m = std::max(dxy, dyx);
            const __int128 islack = static_cast<__int128>(coeff_rat_.num) * (a + m) -
                                    static_cast<__int128>(coeff_rat_.den) * (lhs + total);
            const double rhs = coeff_real_ * static_cast<double>(a + m) -
                               static_cast<double>(total);
            return classify_exact(islack, coeff_rat_.den, static_cast<double>(lhs), rhs);
        }
        case InequalityId::tm2: {
            const std::int64_t m = std::max(dyx, dxy);
            const __int128 islack = static_cast<__int128>(coeff_rat_.den) * (total - lhs) +
                                    static_cast<__int128>(coeff_rat_.num) * (m - a);
            const double rhs = static_cast<double>(total) -
                               coeff_real_ * static_cast<double>(a) +
                               coeff_real_ * static_cast<double>(m);
            return classify_exact(islack, coeff_rat_.den, static_cast<double>(lhs), rhs);
        }
        default:
            throw std::logic_error("scalar inequality routed to vector path");
    }
}

SlackKernel::Eval SlackKernel::eval_vector_float(std::span<const std::uint64_t> x,
                                                 std::span<const std::uint64_t> y) const {
    std::uint64_t sum_buf[kMaxDim];
    std::uint64_t dxy_buf[kMaxDim];
    std::uint64_t dyx_buf[kMaxDim];
    for (std::size_t j = 0; j < dim_; ++j) {
        std::uint64_t s = x[j] + y[j];
        if (s >= p_) s -= p_;
        sum_buf[j] = s;
        dxy_buf[j] = x[j] >= y[j] ? x[j] - y[j] : x[j] + p_ - y[j];
        dyx_buf[j] = y[j] >= x[j] ? y[j] - x[j] : y[j] + p_ - x[j];
    }

    const double nx = norm_real(x, norm_);
    const double ny = norm_real(y, norm_);
    const double a = norm_real({sum_buf, dim_}, norm_);
    const double dxy = norm_real({dxy_buf, dim_}, norm_);
    const double dyx = norm_real({dyx_buf, dim_}, norm_);

    const double lhs = std::abs(nx - ny);
    const double total = nx + ny;

    switch (id_) {
        case InequalityId::rt:
            return classify_float(lhs, std::max(dxy, dyx));
        case InequalityId::mi1:
            return classify_float(lhs, a + dxy - total);
        case InequalityId::mi2:
            return classify_float(lhs, total - std::abs(a - dxy));
        case InequalityId::tm1:
            return classify_float(lhs, coeff_real_ * (a + std::max(dxy, dyx)) - total);
        case InequalityId::tm2:
            return classify_float(lhs, total - coeff_real_ * a + coeff_real_ * std::max(dyx, dxy));
        default:
            throw std::logic_error("scalar inequality routed to vector path");
    }
}

SlackKernel::Eval SlackKernel::eval(std::span<const std::uint64_t> x,
                                    std::span<const std::uint64_t> y) const {
    if (is_scalar_inequality(id_)) {
        return eval_scalar(x[0], y[0]);
    }
    return exact_ ? eval_vector_exact(x, y) : eval_vector_float(x, y);
}

namespace {

SlackRecord to_record(const SlackKernel::Eval& e, std::span<const std::uint64_t> x,
                      std::span<const std::uint64_t> y) {
    SlackRecord rec;
    rec.x.assign(x.begin(), x.end());
    rec.y.assign(y.begin(), y.end());
    rec.lhs = e.lhs;
    rec.rhs = e.rhs;
    rec.slack = e.slack;
    rec.is_violation = e.violation;
    rec.is_equality = e.equality;
    return rec;
}

void require_same_field(const FieldElement& r, const FieldElement& s) {
    if (r.prime() != s.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(r.prime()) + " vs Z_" +
                                    std::to_string(s.prime()));
    }
}

} // namespace

SlackRecord ti_scalar_check(const FieldElement& r, const FieldElement& s, OuterMode outer_mode) {
    require_same_field(r, s);
    SlackKernel kernel(r.field(), 1, NormSpec::l1(), InequalityId::ti, outer_mode);
    const std::uint64_t xs[1] = {r.value()};
    const std::uint64_t ys[1] = {s.value()};
    return to_record(kernel.eval(xs, ys), xs, ys);
}

SlackRecord te_residual(const FieldElement& r, const FieldElement& s) {
    require_same_field(r, s);
    SlackKernel kernel(r.field(), 1, NormSpec::l1(), InequalityId::te);
    const std::uint64_t xs[1] = {r.value()};
    const std::uint64_t ys[1] = {s.value()};
    return to_record(kernel.eval(xs, ys), xs, ys);
}

namespace {

SlackRecord vector_slack(const Vector& x, const Vector& y, const NormSpec& spec, InequalityId id,
                         const Coefficient& coeff) {
    if (x.prime() != y.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(x.prime()) + " vs Z_" +
                                    std::to_string(y.prime()));
    }
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()));
    }
    SlackKernel kernel(x.field(), x.dim(), spec, id, OuterMode::real_abs, coeff);
    return to_record(kernel.eval(x.residues(), y.residues()), x.residues(), y.residues());
}

} // namespace

SlackRecord mi_slack(const Vector& x, const Vector& y, const NormSpec& spec, InequalityId which) {
    if (which != InequalityId::mi1 && which != InequalityId::mi2) {
        throw std::invalid_argument("mi_slack expects mi1 or mi2");
    }
    return vector_slack(x, y, spec, which, {});
}

SlackRecord rt_slack(const Vector& x, const Vector& y, const NormSpec& spec) {
    return vector_slack(x, y, spec, InequalityId::rt, {});
}

SlackRecord tm_slack(const Vector& x, const Vector& y, const NormSpec& spec, InequalityId which,
                     const Coefficient& coeff) {
    if (which != InequalityId::tm1 && which != InequalityId::tm2) {
        throw std::invalid_argument("tm_slack expects tm1 or tm2");
    }
    return vector_slack(x, y, spec, which, coeff);
}

} // namespace ffineq
