#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffineq/field.hpp"
#include "ffineq/norms.hpp"

namespace ffineq {

// Budget guards for the exhaustive passes. max_vectors caps a single
// vector enumeration (p^d), max_pairs caps a pair sweep (p^2d or similar),
// max_violations caps how many witnesses a report lists in full.
struct EnumerationCaps {
    std::uint64_t max_vectors = 1'000'000;
    std::uint64_t max_pairs = 100'000'000;
    std::size_t max_violations = 100;
};

// An enumeration would exceed its cap; `required` is the count the pass
// would have needed.
class resource_error : public std::runtime_error {
public:
    resource_error(std::string what, std::uint64_t required)
        : std::runtime_error(std::move(what)), required_(required) {}

    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

// p^d, throwing resource_error against `cap` (also when p^d overflows).
std::uint64_t vector_space_size(const PrimeField& f, std::size_t dim, std::uint64_t cap);

// Writes the coordinates of the index-th vector in lexicographic order
// (leftmost coordinate most significant) into `out`, which must have
// length dim.
void decode_vector(std::uint64_t index, std::uint64_t p, std::span<std::uint64_t> out);

Vector vector_at(const PrimeField& f, std::size_t dim, std::uint64_t index);

// Lexicographically ordered stream over all p^d vectors. Deterministic;
// index 0 is the zero vector.
class VectorEnumeration {
public:
    VectorEnumeration(const PrimeField& f, std::size_t dim, const EnumerationCaps& caps = {});

    std::uint64_t size() const { return size_; }

    class iterator {
    public:
        iterator(const PrimeField& f, std::size_t dim, std::uint64_t index)
            : p_(f.prime()), dim_(dim), index_(index) {}

        Vector operator*() const { return vector_at(PrimeField(p_), dim_, index_); }
        iterator& operator++() { ++index_; return *this; }
        bool operator!=(const iterator& other) const { return index_ != other.index_; }

    private:
        std::uint64_t p_;
        std::size_t dim_;
        std::uint64_t index_;
    };

    iterator begin() const { return iterator(PrimeField(p_), dim_, 0); }
    iterator end() const { return iterator(PrimeField(p_), dim_, size_); }

private:
    std::uint64_t p_;
    std::size_t dim_;
    std::uint64_t size_;
};

VectorEnumeration enumerate_vectors(const PrimeField& f, std::size_t dim,
                                    const EnumerationCaps& caps = {});

// Odometer over coordinates: advances `coords` to the next vector in
// lexicographic order (rightmost coordinate fastest). Wraps to zero.
inline void increment_coords(std::span<std::uint64_t> coords, std::uint64_t p) {
    for (std::size_t j = coords.size(); j-- > 0;) {
        if (++coords[j] < p) return;
        coords[j] = 0;
    }
}

} // namespace ffineq
