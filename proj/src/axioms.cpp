#include "ffineq/axioms.hpp"

#include <algorithm>
#include <cmath>

namespace ffineq {

namespace {

void record(AxiomReport& report, const EnumerationCaps& caps, AxiomViolation v) {
    ++report.violation_count;
    if (report.violations.size() < caps.max_violations) {
        report.violations.push_back(std::move(v));
    }
}

void sort_violations(AxiomReport& report) {
    std::sort(report.violations.begin(), report.violations.end(),
              [](const AxiomViolation& a, const AxiomViolation& b) {
                  if (a.axiom != b.axiom) return a.axiom < b.axiom;
                  return a.inputs < b.inputs;
              });
}

} // namespace

AxiomReport check_submodulus_axioms(const PrimeField& f, const EnumerationCaps& caps) {
    const std::uint64_t p = f.prime();
    if (p > caps.max_vectors) {
        throw resource_error("sub-modulus audit of Z_" + std::to_string(p) + " needs " +
                                 std::to_string(p) + " scalars, cap is " +
                                 std::to_string(caps.max_vectors),
                             p);
    }
    const std::uint64_t pairs = p * p;
    if (pairs > caps.max_pairs) {
        throw resource_error("sub-modulus audit of Z_" + std::to_string(p) + " needs " +
                                 std::to_string(pairs) + " pairs, cap is " +
                                 std::to_string(caps.max_pairs),
                             pairs);
    }

    AxiomReport report;

    // (i) |a| = 0 => a = 0
    for (std::uint64_t a = 0; a < p; ++a) {
        const std::uint64_t mag = submodulus(FieldElement(a, f));
        if (mag == 0 && a != 0) {
            record(report, caps, {"i", {{a}}, 0.0, 0.0});
        }
    }
    report.axioms_checked.push_back({"i", p});

    // (ii) |a*b| <= |a||b|
    for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) {
            const std::uint64_t lhs =
                static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
            const std::uint64_t rhs_hi = a * b; // residues < p <= 1e6, no overflow
            if (lhs > rhs_hi) {
                record(report, caps,
                       {"ii", {{a}, {b}}, static_cast<double>(lhs), static_cast<double>(rhs_hi)});
            }
        }
    }
    report.axioms_checked.push_back({"ii", pairs});

    // (iii) |a+b| <= |a|+|b|
    for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) {
            const std::uint64_t lhs = (a + b) % p;
            if (lhs > a + b) {
                record(report, caps,
                       {"iii", {{a}, {b}}, static_cast<double>(lhs), static_cast<double>(a + b)});
            }
        }
    }
    report.axioms_checked.push_back({"iii", pairs});

    sort_violations(report);
    return report;
}

AxiomReport check_subnorm_axioms_fn(const PrimeField& f, std::size_t dim, const NormFn& norm_fn,
                                    double epsilon, const EnumerationCaps& caps) {
    const std::uint64_t p = f.prime();
    const std::uint64_t n_vectors = vector_space_size(f, dim, caps.max_vectors);

    const std::uint64_t scale_cases = p * n_vectors;
    if (scale_cases > caps.max_pairs) {
        throw resource_error("sub-norm audit axiom (ii) needs " + std::to_string(scale_cases) +
                                 " cases, cap is " + std::to_string(caps.max_pairs),
                             scale_cases);
    }
    const std::uint64_t pair_cases = n_vectors * n_vectors;
    if (pair_cases > caps.max_pairs) {
        throw resource_error("sub-norm audit axiom (iii) needs " + std::to_string(pair_cases) +
                                 " pairs, cap is " + std::to_string(caps.max_pairs),
                             pair_cases);
    }

    AxiomReport report;
    std::vector<std::uint64_t> x(dim, 0), y(dim), scaled(dim);

    // (i) ||x|| = 0 => x = 0
    for (std::uint64_t i = 0; i < n_vectors; ++i) {
        const bool zero = std::all_of(x.begin(), x.end(), [](std::uint64_t c) { return c == 0; });
        const double nx = norm_fn(x);
        if (!zero && std::abs(nx) <= epsilon) {
            record(report, caps, {"i", {x}, nx, 0.0});
        }
        increment_coords(x, p);
    }
    report.axioms_checked.push_back({"i", n_vectors});

    // (ii) ||a x|| <= |a| ||x||
    for (std::uint64_t a = 0; a < p; ++a) {
        std::fill(x.begin(), x.end(), 0);
        for (std::uint64_t i = 0; i < n_vectors; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                scaled[j] = static_cast<std::uint64_t>(
                    static_cast<unsigned __int128>(a) * x[j] % p);
            }
            const double lhs = norm_fn(scaled);
            const double rhs = static_cast<double>(a) * norm_fn(x);
            if (lhs > rhs + epsilon) {
                record(report, caps, {"ii", {{a}, x}, lhs, rhs});
            }
            increment_coords(x, p);
        }
    }
    report.axioms_checked.push_back({"ii", scale_cases});

    // (iii) ||x+y|| <= ||x|| + ||y||
    std::fill(x.begin(), x.end(), 0);
    for (std::uint64_t i = 0; i < n_vectors; ++i) {
        std::fill(y.begin(), y.end(), 0);
        const double nx = norm_fn(x);
        for (std::uint64_t j = 0; j < n_vectors; ++j) {
            for (std::size_t k = 0; k < dim; ++k) {
                std::uint64_t s = x[k] + y[k];
                if (s >= p) s -= p;
                scaled[k] = s;
            }
            const double lhs = norm_fn(scaled);
            const double rhs = nx + norm_fn(y);
            if (lhs > rhs + epsilon) {
                record(report, caps, {"iii", {x, y}, lhs, rhs});
            }
            increment_coords(y, p);
        }
        increment_coords(x, p);
    }
    report.axioms_checked.push_back({"iii", pair_cases});

    sort_violations(report);
    return report;
}

AxiomReport check_subnorm_axioms(const PrimeField& f, std::size_t dim, const NormSpec& spec,
                                 const EnumerationCaps& caps) {
    spec.validate();
    const double epsilon = spec.integer_valued() ? 0.0 : 1e-9;
    return check_subnorm_axioms_fn(
        f, dim, [&spec](std::span<const std::uint64_t> coords) { return norm_real(coords, spec); },
        epsilon, caps);
}

} // namespace ffineq
