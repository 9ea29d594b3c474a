#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffineq/field.hpp"

namespace ffineq {

/**
 * Vectors over a prime field, with the l^q and sup sub-norms.
 *
 * A Vector is a fixed-dimension tuple of canonical residues sharing one
 * field. Finite-support sequences are modelled the same way: only the
 * support contributes to any norm here, so a finite tuple with an
 * understood tail of zeros loses nothing.
 *
 * Norms map into the nonnegative reals:
 *   l^q : (sum_j |a_j|^q)^(1/q),  q >= 1
 *   sup : max_j |a_j|
 * l^1 and sup are integer-valued and keep an exact integer alongside the
 * double; general l^q is double-only.
 */
class Vector {
public:
    Vector(std::vector<std::uint64_t> residues, const PrimeField& field);

    static Vector zero(const PrimeField& field, std::size_t dim);

    std::size_t dim() const { return coords_.size(); }
    std::uint64_t prime() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    std::span<const std::uint64_t> residues() const { return coords_; }
    FieldElement coord(std::size_t j) const;

    bool is_zero() const;

    bool operator==(const Vector& other) const = default;

private:
    std::vector<std::uint64_t> coords_;
    std::uint64_t p_;
};

// Which sub-norm to apply. The exponent is called q throughout; p is
// reserved for the field prime.
struct NormSpec {
    enum class Kind { lp, sup };

    Kind kind = Kind::lp;
    double q = 1.0; // only meaningful for lp; must be >= 1

    static NormSpec l1() { return {Kind::lp, 1.0}; }
    static NormSpec l2() { return {Kind::lp, 2.0}; }
    static NormSpec lp(double q);
    static NormSpec sup() { return {Kind::sup, 0.0}; }

    // "l1", "l2", "sup", "lp:<q>" -- the CLI token set.
    static NormSpec parse(const std::string& token);
    std::string name() const;

    // True when the norm takes exact nonnegative-integer values (q = 1, sup).
    bool integer_valued() const { return kind == Kind::sup || q == 1.0; }

    void validate() const; // throws std::domain_error if q < 1

    bool operator==(const NormSpec& other) const;
};

struct NormValue {
    double magnitude = 0.0;
    std::optional<std::uint64_t> exact_integer; // present for l^1 and sup

    bool operator==(const NormValue& other) const = default;
};

Vector vec_add(const Vector& x, const Vector& y);
Vector vec_sub(const Vector& x, const Vector& y);
Vector scalar_mul(const FieldElement& scalar, const Vector& x);

NormValue norm(const Vector& v, const NormSpec& spec);

// Raw-residue kernels used by the exhaustive sweeps; `coords` are
// canonical residues of one field.
std::uint64_t norm_l1_int(std::span<const std::uint64_t> coords);
std::uint64_t norm_sup_int(std::span<const std::uint64_t> coords);
double norm_real(std::span<const std::uint64_t> coords, const NormSpec& spec);

std::ostream& operator<<(std::ostream& os, const Vector& v);

} // namespace ffineq
