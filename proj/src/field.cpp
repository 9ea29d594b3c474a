#include "ffineq/field.hpp"

#include <ostream>
#include <stdexcept>

namespace ffineq {

std::uint64_t smallest_factor(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("smallest_factor requires n >= 2");
    if (n % 2 == 0) return 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

bool is_prime(std::uint64_t n) {
    return n >= 2 && smallest_factor(n) == n;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) {
        throw std::invalid_argument("prime field modulus must be >= 2, got " + std::to_string(p));
    }
    const std::uint64_t f = smallest_factor(p);
    if (f != p) {
        throw std::invalid_argument(std::to_string(p) + " is not prime (factor " +
                                    std::to_string(f) + ")");
    }
}

PrimeField make_prime_field(std::uint64_t p) {
    return PrimeField(p);
}

FieldElement::FieldElement(std::uint64_t value, const PrimeField& field)
    : value_(value), p_(field.prime()) {
    if (value_ >= p_) {
        throw std::invalid_argument("residue " + std::to_string(value) +
                                    " out of range for Z_" + std::to_string(p_));
    }
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.prime() != b.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(a.prime()) +
                                    " vs Z_" + std::to_string(b.prime()));
    }
}

} // namespace

FieldElement canonical(std::int64_t n, const PrimeField& f) {
    const std::int64_t p = static_cast<std::int64_t>(f.prime());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return FieldElement(static_cast<std::uint64_t>(r), f);
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    std::uint64_t s = value_ + rhs.value_;
    if (s >= p_) s -= p_;
    return FieldElement(s, p_, unchecked_t{});
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    std::uint64_t s = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p_ - rhs.value_;
    return FieldElement(s, p_, unchecked_t{});
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    const auto prod = static_cast<unsigned __int128>(value_) * rhs.value_;
    return FieldElement(static_cast<std::uint64_t>(prod % p_), p_, unchecked_t{});
}

FieldElement FieldElement::operator-() const {
    return FieldElement(value_ == 0 ? 0 : p_ - value_, p_, unchecked_t{});
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_neg(const FieldElement& a) { return -a; }

FieldElement field_two(const PrimeField& f) {
    return canonical(2, f);
}

std::uint64_t submodulus(const FieldElement& a) {
    return a.value();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.value() << " (mod " << a.prime() << ")";
}

} // namespace ffineq
