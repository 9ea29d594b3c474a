#include <doctest.h>

#include <random>

#include "ffineq/field.hpp"

using namespace ffineq;

TEST_CASE("prime field construction") {
    CHECK(make_prime_field(3).prime() == 3);
    CHECK(make_prime_field(2).prime() == 2);
    CHECK(make_prime_field(97).prime() == 97);

    CHECK_THROWS_WITH_AS(make_prime_field(4), doctest::Contains("factor 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_prime_field(91), doctest::Contains("factor 7"),
                         std::invalid_argument);
    CHECK_THROWS_AS(make_prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_prime_field(0), std::invalid_argument);
}

TEST_CASE("canonical residues") {
    const PrimeField z3(3);
    const PrimeField z5(5);
    CHECK(canonical(-1, z3).value() == 2);
    CHECK(canonical(0, z5).value() == 0);
    CHECK(canonical(7, z5).value() == 2);
    CHECK(canonical(-7, z5).value() == 3);
    CHECK(canonical(-3, z3).value() == 0);
}

TEST_CASE("canonical is idempotent") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 97ull}) {
        const PrimeField f(p);
        for (std::int64_t n = -200; n <= 200; ++n) {
            const FieldElement once = canonical(n, f);
            const FieldElement twice = canonical(static_cast<std::int64_t>(once.value()), f);
            CHECK(once == twice);
        }
    }
}

TEST_CASE("field arithmetic matches the examples") {
    const PrimeField z3(3);
    const PrimeField z5(5);
    CHECK(field_add(canonical(1, z3), canonical(2, z3)).value() == 0);
    CHECK(field_sub(canonical(0, z3), canonical(2, z3)).value() == 1);
    CHECK(field_neg(canonical(3, z5)).value() == 2);
    CHECK(field_mul(canonical(2, z5), canonical(3, z5)).value() == 1);
}

TEST_CASE("cross-field arithmetic is rejected") {
    const PrimeField z3(3);
    const PrimeField z5(5);
    const FieldElement a = canonical(1, z3);
    const FieldElement b = canonical(1, z5);
    CHECK_THROWS_AS(field_add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(field_sub(a, b), std::invalid_argument);
    CHECK_THROWS_AS(field_mul(a, b), std::invalid_argument);
}

TEST_CASE("element two per field") {
    CHECK(field_two(PrimeField(3)).value() == 2);
    CHECK(field_two(PrimeField(2)).value() == 0);
    CHECK(field_two(PrimeField(7)).value() == 2);
}

TEST_CASE("submodulus values") {
    const PrimeField z3(3);
    const PrimeField z5(5);
    CHECK(submodulus(canonical(2, z3)) == 2);
    CHECK(submodulus(canonical(0, z3)) == 0);
    CHECK(submodulus(canonical(0, z5)) == 0);
    CHECK(submodulus(canonical(-1, z5)) == 4);
}

TEST_CASE("submodulus bounds and kernel, exhaustively") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 97ull}) {
        const PrimeField f(p);
        for (std::uint64_t v = 0; v < p; ++v) {
            const std::uint64_t mag = submodulus(FieldElement(v, f));
            CHECK(mag <= p - 1);
            CHECK((mag == 0) == (v == 0));
        }
    }
}

TEST_CASE("negation changes the submodulus in general") {
    const PrimeField z3(3);
    const FieldElement one = canonical(1, z3);
    CHECK(submodulus(one) == 1);
    CHECK(submodulus(field_neg(one)) == 2);
}

TEST_CASE("arithmetic agrees with a wide-integer mod oracle") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 97ull, 104729ull}) {
        const PrimeField f(p);
        const auto ip = static_cast<__int128>(p);
        for (int i = 0; i < 300; ++i) {
            const std::int64_t n = dist(rng);
            const std::int64_t m = dist(rng);
            const FieldElement a = canonical(n, f);
            const FieldElement b = canonical(m, f);
            const auto expect = [ip](__int128 v) {
                __int128 r = v % ip;
                if (r < 0) r += ip;
                return static_cast<std::uint64_t>(r);
            };
            CHECK(field_add(a, b).value() == expect(static_cast<__int128>(n) + m));
            CHECK(field_sub(a, b).value() == expect(static_cast<__int128>(n) - m));
            CHECK(field_mul(a, b).value() == expect(static_cast<__int128>(n) * m));
            CHECK(field_neg(a).value() == expect(-static_cast<__int128>(n)));
        }
    }
}

TEST_CASE("submodulus is subadditive and submultiplicative per field") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const PrimeField f(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; ++b) {
                const FieldElement ea(a, f);
                const FieldElement eb(b, f);
                CHECK(submodulus(field_mul(ea, eb)) <= submodulus(ea) * submodulus(eb));
                CHECK(submodulus(field_add(ea, eb)) <= submodulus(ea) + submodulus(eb));
            }
        }
    }
}
