#include "ffineq/enumeration.hpp"

namespace ffineq {

std::uint64_t vector_space_size(const PrimeField& f, std::size_t dim, std::uint64_t cap) {
    if (dim == 0) {
        throw std::invalid_argument("dimension must be >= 1");
    }
    unsigned __int128 n = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        n *= f.prime();
        if (n > cap) {
            const std::uint64_t required =
                n > static_cast<unsigned __int128>(UINT64_MAX) ? UINT64_MAX
                                                               : static_cast<std::uint64_t>(n);
            throw resource_error("enumeration of Z_" + std::to_string(f.prime()) + "^" +
                                     std::to_string(dim) + " needs at least " +
                                     std::to_string(required) + " vectors, cap is " +
                                     std::to_string(cap),
                                 required);
        }
    }
    return static_cast<std::uint64_t>(n);
}

void decode_vector(std::uint64_t index, std::uint64_t p, std::span<std::uint64_t> out) {
    for (std::size_t j = out.size(); j-- > 0;) {
        out[j] = index % p;
        index /= p;
    }
}

Vector vector_at(const PrimeField& f, std::size_t dim, std::uint64_t index) {
    std::vector<std::uint64_t> coords(dim);
    decode_vector(index, f.prime(), coords);
    return Vector(std::move(coords), f);
}

VectorEnumeration::VectorEnumeration(const PrimeField& f, std::size_t dim,
                                     const EnumerationCaps& caps)
    : p_(f.prime()), dim_(dim), size_(vector_space_size(f, dim, caps.max_vectors)) {}

VectorEnumeration enumerate_vectors(const PrimeField& f, std::size_t dim,
                                    const EnumerationCaps& caps) {
    return VectorEnumeration(f, dim, caps);
}

} // namespace ffineq
