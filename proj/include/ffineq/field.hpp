#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ffineq {

/**
 * Prime field Z_p = {0, 1, ..., p-1} with canonical-representative arithmetic.
 *
 * The field carries the sub-modulus map |n| = the unique a with
 * 0 <= a <= p-1 and n = a (mod p). This map satisfies
 *   (i)   |n| = 0  =>  n = 0
 *   (ii)  |n*m| <= |n||m|
 *   (iii) |n+m| <= |n|+|m|
 * but it is not symmetric: |−n| != |n| in general (in Z_3, |1| = 1
 * while |−1| = |2| = 2). Everything downstream exists to measure the
 * consequences of that asymmetry.
 *
 * Sub-modulus values are exact nonnegative integers, never floats.
 */
class PrimeField {
public:
    // Throws std::invalid_argument if p < 2 or p is composite
    // (the message names the smallest factor).
    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const { return p_; }

    bool operator==(const PrimeField& other) const = default;

private:
    std::uint64_t p_;
};

// A canonical residue in {0, ..., p-1} tied to its field.
// Arithmetic between elements of different fields throws.
class FieldElement {
public:
    FieldElement(std::uint64_t value, const PrimeField& field);

    std::uint64_t value() const { return value_; }
    std::uint64_t prime() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    bool is_zero() const { return value_ == 0; }

    bool operator==(const FieldElement& other) const = default;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;

private:
    struct unchecked_t {};
    FieldElement(std::uint64_t value, std::uint64_t p, unchecked_t) : value_(value), p_(p) {}

    std::uint64_t value_;
    std::uint64_t p_;
};

// Smallest prime factor of n >= 2, by trial division.
std::uint64_t smallest_factor(std::uint64_t n);

bool is_prime(std::uint64_t n);

PrimeField make_prime_field(std::uint64_t p);

// Canonical residue of any integer, negatives included:
// canonical(-1, Z_3) has value 2.
FieldElement canonical(std::int64_t n, const PrimeField& f);

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);

// The element 1 + 1. Zero exactly when p = 2; theorem-level checks that
// need 2 != 0 reject that case themselves.
FieldElement field_two(const PrimeField& f);

// The sub-modulus |a|: the canonical residue value as an exact integer.
std::uint64_t submodulus(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

} // namespace ffineq
