#include <doctest.h>

#include "ffineq/inequalities.hpp"

using namespace ffineq;

namespace {

const PrimeField z3(3);
const PrimeField z5(5);

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 2) == Rational(1, 1));
    CHECK(Rational(4, -2) == Rational(-2, 1));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(4, 1).str() == "4");
    CHECK(Rational::compare(Rational(2, 3), Rational(3, 4)) < 0);
    CHECK(Rational::compare(Rational(1, 2), Rational(2, 4)) == 0);
    CHECK((Rational(4, 1) - Rational(1, 1'000'000)).str() == "3999999/1000000");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("scalar triangle check reproduces the motivating computation") {
    // In Z_3 with the field reading of the outer bars: lhs |0-1| -> |-1| = 2,
    // rhs min{|0-1|, |0+1|} = 1, so the classical bound fails.
    const SlackRecord rec =
        ti_scalar_check(canonical(0, z3), canonical(1, z3), OuterMode::field_modulus);
    CHECK(rec.lhs == 2.0);
    CHECK(rec.rhs == 1.0);
    CHECK(rec.slack == -1.0);
    CHECK(rec.is_violation);
    CHECK_FALSE(rec.is_equality);
}

TEST_CASE("scalar triangle check, real outer mode") {
    const SlackRecord same =
        ti_scalar_check(canonical(2, z5), canonical(2, z5), OuterMode::real_abs);
    CHECK(same.lhs == 0.0);
    CHECK(same.slack >= 0.0);
    CHECK_FALSE(same.is_violation);

    const SlackRecord rec =
        ti_scalar_check(canonical(0, z3), canonical(2, z3), OuterMode::real_abs);
    CHECK(rec.lhs == 2.0);
    CHECK(rec.rhs == 1.0); // min{|0-2| = |1| = 1, |0+2| = 2}
    CHECK(rec.is_violation);
}

TEST_CASE("ti violations exist in Z_3 under both outer modes") {
    for (OuterMode mode : {OuterMode::real_abs, OuterMode::field_modulus}) {
        int violations = 0;
        for (std::uint64_t r = 0; r < 3; ++r) {
            for (std::uint64_t s = 0; s < 3; ++s) {
                if (ti_scalar_check(FieldElement(r, z3), FieldElement(s, z3), mode).is_violation) {
                    ++violations;
                }
            }
        }
        CHECK(violations > 0);
    }
}

TEST_CASE("tarski residual") {
    const SlackRecord zero = te_residual(canonical(0, z3), canonical(0, z3));
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.is_equality);

    const SlackRecord broken = te_residual(canonical(1, z3), canonical(2, z3));
    CHECK(broken.lhs == 1.0);
    CHECK(broken.rhs == -1.0); // |1-2| + |1+2| - (|1|+|2|) = 2 + 0 - 3
    CHECK(broken.slack == -2.0);
    CHECK_FALSE(broken.is_equality);

    const SlackRecord held = te_residual(canonical(1, z3), canonical(1, z3));
    CHECK(held.lhs == 0.0);
    CHECK(held.rhs == 0.0); // 0 + |2| - 2
    CHECK(held.is_equality);
}

TEST_CASE("normed-space forms evaluated as diagnostics") {
    const NormSpec l1 = NormSpec::l1();
    const Vector zero({0}, z3);

    const SlackRecord both_zero = mi_slack(zero, zero, l1, InequalityId::mi1);
    CHECK(both_zero.lhs == 0.0);
    CHECK(both_zero.rhs == 0.0);
    CHECK(both_zero.is_equality);

    // x = 0, y = 2: rhs = ||2|| + ||-2|| - 2 = 2 + 1 - 2 = 1 < 2 = lhs.
    const SlackRecord fails = mi_slack(zero, Vector({2}, z3), l1, InequalityId::mi1);
    CHECK(fails.lhs == 2.0);
    CHECK(fails.rhs == 1.0);
    CHECK(fails.is_violation);

    const SlackRecord ones = mi_slack(Vector({1}, z3), Vector({1}, z3), l1, InequalityId::mi2);
    CHECK(ones.lhs == 0.0);
    CHECK(ones.rhs == 0.0); // 2 - abs(||2|| - ||0||)
    CHECK(ones.is_equality);

    CHECK_THROWS_AS(mi_slack(zero, zero, l1, InequalityId::rt), std::invalid_argument);
}

TEST_CASE("reverse triangle needs both difference orders") {
    const NormSpec l1 = NormSpec::l1();
    const Vector x({0}, z3);
    const Vector y({2}, z3);

    const SlackRecord same = rt_slack(y, y, l1);
    CHECK(same.lhs == 0.0);
    CHECK(same.rhs == 0.0);
    CHECK(same.is_equality);

    const SlackRecord rec = rt_slack(x, y, l1);
    CHECK(rec.lhs == 2.0);
    CHECK(rec.rhs == 2.0); // max{||-2|| = 1, ||2|| = 2}; one-sided ||x-y|| alone would fail
    CHECK(rec.is_equality);
    CHECK_FALSE(rec.is_violation);

    const SlackRecord sup_case =
        rt_slack(Vector({1, 0}, z3), Vector({2, 2}, z3), NormSpec::sup());
    CHECK(sup_case.lhs == 1.0);
    CHECK(sup_case.rhs == 2.0);
    CHECK(sup_case.slack == 1.0);
}

TEST_CASE("tm forms at the frozen witnesses") {
    const NormSpec l1 = NormSpec::l1();
    const Vector zero({0}, z3);
    const Vector one({1}, z3);
    const Vector two({2}, z3);

    const SlackRecord origin = tm_slack(zero, zero, l1, InequalityId::tm1);
    CHECK(origin.lhs == 0.0);
    CHECK(origin.rhs == 0.0);
    CHECK(origin.is_equality);

    // With p = 3 the coefficient is 2/|2| = 1.
    const SlackRecord first = tm_slack(one, two, l1, InequalityId::tm1);
    CHECK(first.lhs == 1.0);
    CHECK(first.rhs == -1.0); // ||0|| + max{||-1||, ||1||} - 3 = 0 + 2 - 3
    CHECK(first.slack == -2.0);
    CHECK(first.is_violation);

    const SlackRecord second = tm_slack(one, two, l1, InequalityId::tm2);
    CHECK(second.lhs == 1.0);
    CHECK(second.rhs == 5.0); // 3 - 0 + 2
    CHECK(second.slack == 4.0);
    CHECK_FALSE(second.is_violation);

    CHECK_THROWS_AS(tm_slack(zero, zero, l1, InequalityId::rt), std::invalid_argument);
}

TEST_CASE("tm forms reject p = 2") {
    const PrimeField z2(2);
    const Vector v({1}, z2);
    CHECK_THROWS_WITH_AS(tm_slack(v, v, NormSpec::l1(), InequalityId::tm1),
                         doctest::Contains("2 != 0"), std::domain_error);
    CHECK_THROWS_AS(tm_slack(v, v, NormSpec::l1(), InequalityId::tm2), std::domain_error);
}

TEST_CASE("tm slack is symmetric in its arguments") {
    for (const NormSpec& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::sup()}) {
        for (std::uint64_t a = 0; a < 5; ++a) {
            for (std::uint64_t b = 0; b < 5; ++b) {
                const Vector x({a}, z5);
                const Vector y({b}, z5);
                for (InequalityId id : {InequalityId::tm1, InequalityId::tm2}) {
                    const SlackRecord xy = tm_slack(x, y, spec, id);
                    const SlackRecord yx = tm_slack(y, x, spec, id);
                    CHECK(xy.slack == doctest::Approx(yx.slack).epsilon(1e-12));
                }
                const SlackRecord rxy = rt_slack(x, y, spec);
                const SlackRecord ryx = rt_slack(y, x, spec);
                CHECK(rxy.slack == doctest::Approx(ryx.slack).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("kernel paths: exact for integer norms, float otherwise") {
    SlackKernel exact(z3, 2, NormSpec::sup(), InequalityId::tm1);
    CHECK(exact.exact());
    CHECK(exact.epsilon() == 0.0);
    CHECK(exact.coefficient_rational() == Rational(1, 1));

    SlackKernel floating(z3, 2, NormSpec::l2(), InequalityId::tm1);
    CHECK_FALSE(floating.exact());
    CHECK(floating.epsilon() == kSlackEpsilon);

    SlackKernel forced_float(z3, 2, NormSpec::l1(), InequalityId::tm1, OuterMode::real_abs,
                             Coefficient(0.75));
    CHECK_FALSE(forced_float.exact());
    CHECK(forced_float.coefficient_real() == 0.75);
}

TEST_CASE("mismatched operands are rejected") {
    const Vector a({1}, z3);
    const Vector b({1, 2}, z3);
    const Vector c({1}, z5);
    CHECK_THROWS_AS(rt_slack(a, b, NormSpec::l1()), std::invalid_argument);
    CHECK_THROWS_AS(rt_slack(a, c, NormSpec::l1()), std::invalid_argument);
    CHECK_THROWS_AS(ti_scalar_check(canonical(1, z3), canonical(1, z5), OuterMode::real_abs),
                    std::invalid_argument);
}
