#include <doctest.h>

#include "ffineq/enumeration.hpp"
#include "ffineq/proof_steps.hpp"
#include "ffineq/verify.hpp"

using namespace ffineq;

TEST_CASE("audit rejects p = 2") {
    const PrimeField z2(2);
    CHECK_THROWS_WITH_AS(proof_step_audit(Vector({1}, z2), Vector({0}, z2), NormSpec::l1()),
                         doctest::Contains("2 != 0"), std::domain_error);
    CHECK_THROWS_AS(audit_proof_steps(z2, 1, NormSpec::l1()), std::domain_error);
}

TEST_CASE("the equality claim fails at x = 3 in Z_5 while the valid steps hold") {
    const PrimeField z5(5);
    const Vector x({3}, z5);
    const ProofStepEvaluation eval = proof_step_audit(x, x, NormSpec::l1());

    const StepEval& a1eq = eval.at(ProofStep::a1_equality);
    CHECK_FALSE(a1eq.pass);
    CHECK(a1eq.lhs == 1.0); // ||2x|| = ||(1)||
    CHECK(a1eq.rhs == 6.0); // |2| ||x||

    const StepEval& ff2 = eval.at(ProofStep::ff2);
    CHECK_FALSE(ff2.pass);
    CHECK(ff2.lhs == 6.0); // |2| max{||x||, ||y||}
    CHECK(ff2.rhs == 1.0); // ||x+y|| + max of the difference norms

    const StepEval& f1 = eval.at(ProofStep::f1);
    CHECK(f1.pass);
    CHECK(f1.lhs == 1.0); // ||x+y|| - ||y-x||
    CHECK(f1.rhs == 6.0);

    CHECK(eval.at(ProofStep::ff1).pass);
    CHECK(eval.at(ProofStep::e1).pass);
    CHECK(eval.at(ProofStep::a1_triangle).pass);
    CHECK(eval.at(ProofStep::a2_triangle).pass);
    CHECK(eval.at(ProofStep::f2).pass);
    CHECK(eval.at(ProofStep::f3).pass);
}

TEST_CASE("identities and axiom-backed steps never fail across configurations") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        const PrimeField f(p);
        for (std::size_t d : {std::size_t{1}, std::size_t{2}}) {
            for (const NormSpec& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::sup()}) {
                const ProofStepReport report = audit_proof_steps(f, d, spec);
                CHECK(report.pairs_checked > 0);
                for (ProofStep step : {ProofStep::ff1, ProofStep::e1, ProofStep::a1_triangle,
                                       ProofStep::a2_triangle, ProofStep::f1, ProofStep::f2,
                                       ProofStep::f3}) {
                    const StepOutcome& out = report.outcome(step);
                    CHECK(out.failures == 0);
                    CHECK(out.passes == report.pairs_checked);
                    CHECK_FALSE(out.first_failure.has_value());
                }
            }
        }
    }
}

TEST_CASE("aggregated audit over Z_5, d = 1, l1") {
    const PrimeField z5(5);
    const ProofStepReport report = audit_proof_steps(z5, 1, NormSpec::l1());
    CHECK(report.pairs_checked == 25);

    // ||2x|| = |2| ||x|| fails exactly for x in {3, 4}, independent of y.
    const StepOutcome& a1eq = report.outcome(ProofStep::a1_equality);
    CHECK(a1eq.failures == 10);
    CHECK(a1eq.passes == 15);
    REQUIRE(a1eq.first_failure.has_value());
    CHECK(a1eq.first_failure->x == std::vector<std::uint64_t>{3});
    CHECK(a1eq.first_failure->y == std::vector<std::uint64_t>{0});
    CHECK(a1eq.first_failure->lhs == 1.0);
    CHECK(a1eq.first_failure->rhs == 6.0);

    const StepOutcome& a2eq = report.outcome(ProofStep::a2_equality);
    CHECK(a2eq.failures == 10);

    CHECK(report.outcome(ProofStep::ff2).failures > 0);
    CHECK(report.outcome(ProofStep::ff1).failures == 0);
    CHECK(report.outcome(ProofStep::e1).failures == 0);
    CHECK(report.outcome(ProofStep::f1).failures == 0);
    CHECK(report.outcome(ProofStep::f2).failures == 0);
}

TEST_CASE("per-pair audit agrees with the aggregated sweep") {
    const PrimeField z7(7);
    const NormSpec spec = NormSpec::sup();
    const ProofStepReport report = audit_proof_steps(z7, 1, spec);

    std::array<std::uint64_t, kProofStepCount> failures{};
    for (const Vector& x : enumerate_vectors(z7, 1)) {
        for (const Vector& y : enumerate_vectors(z7, 1)) {
            const ProofStepEvaluation eval = proof_step_audit(x, y, spec);
            for (std::size_t i = 0; i < kProofStepCount; ++i) {
                if (!eval.steps[i].pass) ++failures[i];
            }
        }
    }
    for (std::size_t i = 0; i < kProofStepCount; ++i) {
        CHECK(report.steps[i].failures == failures[i]);
    }
}

TEST_CASE("step names are stable") {
    CHECK(proof_step_name(ProofStep::ff1) == "FF1");
    CHECK(proof_step_name(ProofStep::a1_equality) == "A1_equality");
    CHECK(proof_step_name(ProofStep::f3) == "F3");
    CHECK(all_proof_steps().size() == kProofStepCount);
}
