#include "ffineq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ffineq {

Vector::Vector(std::vector<std::uint64_t> residues, const PrimeField& field)
    : coords_(std::move(residues)), p_(field.prime()) {
    if (coords_.empty()) {
        throw std::invalid_argument("vector dimension must be >= 1");
    }
    for (std::uint64_t c : coords_) {
        if (c >= p_) {
            throw std::invalid_argument("residue " + std::to_string(c) +
                                        " out of range for Z_" + std::to_string(p_));
        }
    }
}

Vector Vector::zero(const PrimeField& field, std::size_t dim) {
    return Vector(std::vector<std::uint64_t>(dim, 0), field);
}

FieldElement Vector::coord(std::size_t j) const {
    return FieldElement(coords_.at(j), PrimeField(p_));
}

bool Vector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint64_t c) { return c == 0; });
}

namespace {

void require_compatible(const Vector& x, const Vector& y) {
    if (x.prime() != y.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(x.prime()) +
                                    " vs Z_" + std::to_string(y.prime()));
    }
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) +
                                    " vs " + std::to_string(y.dim()));
    }
}

} // namespace

Vector vec_add(const Vector& x, const Vector& y) {
    require_compatible(x, y);
    const std::uint64_t p = x.prime();
    std::vector<std::uint64_t> out(x.dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint64_t s = x.residues()[j] + y.residues()[j];
        if (s >= p) s -= p;
        out[j] = s;
    }
    return Vector(std::move(out), x.field());
}

Vector vec_sub(const Vector& x, const Vector& y) {
    require_compatible(x, y);
    const std::uint64_t p = x.prime();
    std::vector<std::uint64_t> out(x.dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t a = x.residues()[j];
        const std::uint64_t b = y.residues()[j];
        out[j] = a >= b ? a - b : a + p - b;
    }
    return Vector(std::move(out), x.field());
}

Vector scalar_mul(const FieldElement& scalar, const Vector& x) {
    if (scalar.prime() != x.prime()) {
        throw std::invalid_argument("field mismatch: Z_" + std::to_string(scalar.prime()) +
                                    " vs Z_" + std::to_string(x.prime()));
    }
    const std::uint64_t p = x.prime();
    std::vector<std::uint64_t> out(x.dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto prod = static_cast<unsigned __int128>(scalar.value()) * x.residues()[j];
        out[j] = static_cast<std::uint64_t>(prod % p);
    }
    return Vector(std::move(out), x.field());
}

NormSpec NormSpec::lp(double q) {
    NormSpec spec{Kind::lp, q};
    spec.validate();
    return spec;
}

void NormSpec::validate() const {
    if (kind == Kind::lp && !(q >= 1.0)) {
        throw std::domain_error("norm exponent must be >= 1, got " + std::to_string(q));
    }
}

NormSpec NormSpec::parse(const std::string& token) {
    if (token == "sup") return sup();
    if (token == "l1") return l1();
    if (token == "l2") return l2();
    if (token.rfind("lp:", 0) == 0) {
        const std::string tail = token.substr(3);
        std::size_t used = 0;
        double q = 0.0;
        try {
            q = std::stod(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad norm exponent in '" + token + "'");
        }
        if (used != tail.size() || !std::isfinite(q)) {
            throw std::invalid_argument("bad norm exponent in '" + token + "'");
        }
        return lp(q);
    }
    throw std::invalid_argument("unknown norm '" + token + "' (expected l1, l2, sup, lp:<q>)");
}

std::string NormSpec::name() const {
    if (kind == Kind::sup) return "sup";
    if (q == 1.0) return "l1";
    if (q == 2.0) return "l2";
    char buf[48];
    std::snprintf(buf, sizeof buf, "lp:%.12g", q);
    return buf;
}

bool NormSpec::operator==(const NormSpec& other) const {
    if (kind != other.kind) return false;
    return kind == Kind::sup || q == other.q;
}

std::uint64_t norm_l1_int(std::span<const std::uint64_t> coords) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : coords) sum += c;
    return sum;
}

std::uint64_t norm_sup_int(std::span<const std::uint64_t> coords) {
    std::uint64_t best = 0;
    for (std::uint64_t c : coords) best = std::max(best, c);
    return best;
}

double norm_real(std::span<const std::uint64_t> coords, const NormSpec& spec) {
    if (spec.kind == NormSpec::Kind::sup) {
        return static_cast<double>(norm_sup_int(coords));
    }
    if (spec.q == 1.0) {
        return static_cast<double>(norm_l1_int(coords));
    }
    if (spec.q == 2.0) {
        double sum = 0.0;
        for (std::uint64_t c : coords) {
            const double d = static_cast<double>(c);
            sum += d * d;
        }
        return std::sqrt(sum);
    }
    double sum = 0.0;
    for (std::uint64_t c : coords) {
        if (c != 0) sum += std::pow(static_cast<double>(c), spec.q);
    }
    return sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / spec.q);
}

NormValue norm(const Vector& v, const NormSpec& spec) {
    spec.validate();
    NormValue out;
    if (spec.kind == NormSpec::Kind::sup) {
        out.exact_integer = norm_sup_int(v.residues());
        out.magnitude = static_cast<double>(*out.exact_integer);
    } else if (spec.q == 1.0) {
        out.exact_integer = norm_l1_int(v.residues());
        out.magnitude = static_cast<double>(*out.exact_integer);
    } else {
        out.magnitude = norm_real(v.residues(), spec);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << '(';
    for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j) os << ',';
        os << v.residues()[j];
    }
    return os << ") over Z_" << v.prime();
}

} // namespace ffineq
