#pragma once

#include <cstdint>
#include <string>

#include "skewmon/util.hpp"

namespace skewmon {

// Ground field descriptor: a prime field F_p or the rationals (p == 0).
// Primes are capped so products of reduced residues fit comfortably in
// int64 accumulators with delayed reduction.
class Field {
public:
    static constexpr std::uint64_t max_prime = (1ull << 20);

    Field() : p_(2) {}

    static Field fp(std::uint64_t p);
    static Field rationals() { Field f; f.p_ = 0; return f; }

    bool is_prime() const { return p_ != 0; }
    std::uint64_t p() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const { return is_prime() ? "F_" + std::to_string(p_) : "Q"; }

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

inline Field Field::fp(std::uint64_t p)
{
    if (p < 2 || p >= max_prime || !is_prime_u64(p))
        throw StructuralError("Field::fp: " + std::to_string(p) + " is not a supported prime");
    Field f;
    f.p_ = p;
    return f;
}

} // namespace skewmon
