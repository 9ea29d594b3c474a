#include "ffineq/commands.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ffineq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr const char* kTwoIsZero = "theorem requires 2 != 0 (p = 2 rejected)";

std::string cell_prefix(std::uint64_t p) {
    return "p" + std::to_string(p);
}

std::string cell_prefix(std::uint64_t p, std::size_t d, const NormSpec& norm) {
    return "p" + std::to_string(p) + "-d" + std::to_string(d) + "-" + norm.name();
}

// Runs `produce` for one cell, converting cap overruns into a skip notice.
template <typename Produce>
void run_cell(BatchReport& batch, Cell cell, Produce produce) {
    const auto start = Clock::now();
    try {
        produce(cell);
    } catch (const resource_error& e) {
        cell.skipped = true;
        cell.skip_reason = e.what();
        cell.finding = false;
    }
    cell.runtime_ms = elapsed_ms(start);
    batch.cells.push_back(std::move(cell));
}

Rational paper_coefficient(std::uint64_t p) {
    const PrimeField f(p);
    return Rational(2, static_cast<std::int64_t>(submodulus(field_two(f))));
}

} // namespace

BatchReport cmd_axioms(const RunSpec& spec) {
    const auto start = Clock::now();
    BatchReport batch;
    batch.spec = spec;
    for (std::uint64_t p : spec.primes) {
        {
            Cell cell;
            cell.kind = Cell::Kind::field_axioms;
            cell.id = cell_prefix(p) + "-axioms";
            cell.prime = p;
            run_cell(batch, std::move(cell), [&](Cell& c) {
                c.axioms = check_submodulus_axioms(PrimeField(p), spec.caps);
                c.finding = !c.axioms->pass();
            });
        }
        for (std::size_t d : spec.dims) {
            for (const NormSpec& norm : spec.norms) {
                Cell cell;
                cell.kind = Cell::Kind::subnorm_axioms;
                cell.id = cell_prefix(p, d, norm) + "-axioms";
                cell.prime = p;
                cell.dim = d;
                cell.norm = norm;
                run_cell(batch, std::move(cell), [&](Cell& c) {
                    c.axioms = check_subnorm_axioms(PrimeField(p), d, norm, spec.caps);
                    c.finding = !c.axioms->pass();
                });
            }
        }
    }
    batch.total_runtime_ms = elapsed_ms(start);
    return batch;
}

BatchReport cmd_verify(const RunSpec& spec) {
    const auto start = Clock::now();
    BatchReport batch;
    batch.spec = spec;
    for (std::uint64_t p : spec.primes) {
        for (std::size_t d : spec.dims) {
            for (const NormSpec& norm : spec.norms) {
                for (InequalityId id : spec.inequalities) {
                    Cell cell;
                    cell.kind = Cell::Kind::verification;
                    cell.id = cell_prefix(p, d, norm) + "-" + inequality_name(id);
                    cell.prime = p;
                    cell.dim = d;
                    cell.norm = norm;
                    cell.inequality = id;
                    if (has_coefficient(id) && p == 2) {
                        cell.skipped = true;
                        cell.skip_reason = kTwoIsZero;
                        batch.cells.push_back(std::move(cell));
                        continue;
                    }
                    run_cell(batch, std::move(cell), [&](Cell& c) {
                        VerifyOptions opts;
                        opts.outer_mode = spec.outer_mode;
                        opts.caps = spec.caps;
                        opts.workers = spec.workers;
                        c.verification =
                            verify_exhaustive(PrimeField(p), d, norm, id, opts);
                        c.finding = !c.verification->pass();
                    });
                }
            }
        }
    }
    batch.total_runtime_ms = elapsed_ms(start);
    return batch;
}

BatchReport cmd_sharpness(const RunSpec& spec) {
    const auto start = Clock::now();
    BatchReport batch;
    batch.spec = spec;
    for (std::uint64_t p : spec.primes) {
        for (std::size_t d : spec.dims) {
            for (const NormSpec& norm : spec.norms) {
                for (InequalityId id : spec.inequalities) {
                    Cell cell;
                    cell.kind = Cell::Kind::sharpness;
                    cell.id = cell_prefix(p, d, norm) + "-" + inequality_name(id) + "-sharpness";
                    cell.prime = p;
                    cell.dim = d;
                    cell.norm = norm;
                    cell.inequality = id;
                    if (p == 2) {
                        cell.skipped = true;
                        cell.skip_reason = kTwoIsZero;
                        batch.cells.push_back(std::move(cell));
                        continue;
                    }
                    run_cell(batch, std::move(cell), [&](Cell& c) {
                        c.sharpness =
                            sharpness_probe(PrimeField(p), d, norm, id, spec.caps, spec.workers);
                        const Rational paper = paper_coefficient(p);
                        c.paper_coefficient = paper;
                        int cmp;
                        if (c.sharpness->c_star_exact) {
                            cmp = Rational::compare(*c.sharpness->c_star_exact, paper);
                        } else {
                            const double diff = c.sharpness->c_star - paper.to_double();
                            cmp = diff > kSlackEpsilon ? 1 : diff < -kSlackEpsilon ? -1 : 0;
                        }
                        c.paper_comparison = cmp > 0 ? "greater" : cmp < 0 ? "less" : "equal";
                        // The paper coefficient is insufficient exactly when a
                        // larger c is needed somewhere.
                        c.finding = cmp > 0;
                    });
                }
            }
        }
    }
    batch.total_runtime_ms = elapsed_ms(start);
    return batch;
}

BatchReport cmd_audit_proof(const RunSpec& spec) {
    const auto start = Clock::now();
    BatchReport batch;
    batch.spec = spec;
    for (std::uint64_t p : spec.primes) {
        for (std::size_t d : spec.dims) {
            for (const NormSpec& norm : spec.norms) {
                Cell cell;
                cell.kind = Cell::Kind::proof_audit;
                cell.id = cell_prefix(p, d, norm) + "-audit";
                cell.prime = p;
                cell.dim = d;
                cell.norm = norm;
                if (p == 2) {
                    cell.skipped = true;
                    cell.skip_reason = kTwoIsZero;
                    batch.cells.push_back(std::move(cell));
                    continue;
                }
                run_cell(batch, std::move(cell), [&](Cell& c) {
                    c.audit = audit_proof_steps(PrimeField(p), d, norm, spec.caps, spec.workers);
                    bool any_failure = false;
                    for (const StepOutcome& out : c.audit->steps) {
                        if (out.failures > 0) any_failure = true;
                    }
                    c.finding = any_failure;
                });
            }
        }
    }
    batch.total_runtime_ms = elapsed_ms(start);
    return batch;
}

BatchReport run_command(const RunSpec& spec) {
    validate_run_spec(spec);
    if (spec.command == "axioms") return cmd_axioms(spec);
    if (spec.command == "verify") return cmd_verify(spec);
    if (spec.command == "sharpness") return cmd_sharpness(spec);
    return cmd_audit_proof(spec);
}

std::string render_full_dump_csv(const BatchReport& report) {
    std::ostringstream os;
    os << "cell_id,x,y,lhs,rhs,slack,violation\n";
    for (const Cell& cell : report.cells) {
        if (cell.skipped) {
            os << cell.id << ":skipped,,,,,,\n";
            continue;
        }
        const VerificationReport& r = *cell.verification;
        const PrimeField f(r.prime);
        Coefficient coeff{};
        if (r.coefficient) coeff = *r.coefficient;
        if (r.coefficient_real) coeff = *r.coefficient_real;
        SlackKernel kernel(f, r.dim, r.norm, r.inequality, r.outer_mode, coeff);
        const std::size_t od = kernel.operand_dim();
        const std::uint64_t n_vectors =
            r.scalar_sweep ? r.prime : vector_space_size(f, r.dim, UINT64_MAX);

        std::vector<std::uint64_t> xc(od, 0), yc(od, 0);
        std::uint64_t j = 0;
        for (std::uint64_t k = 0; k < r.pairs_checked; ++k) {
            const SlackKernel::Eval e = kernel.eval(xc, yc);
            os << cell.id << ',' << join_residues(xc) << ',' << join_residues(yc) << ','
               << fmt_real(e.lhs) << ',' << fmt_real(e.rhs) << ',' << fmt_real(e.slack) << ','
               << (e.violation ? '1' : '0') << '\n';
            increment_coords(yc, r.prime);
            if (++j == n_vectors) {
                j = 0;
                increment_coords(xc, r.prime);
            }
        }
    }
    return os.str();
}

} // namespace ffineq
