#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "skewmon/util.hpp"

namespace skewmon {

// Exact rational on 64-bit words. Always reduced, denominator positive.
// Overflow is detected through 128-bit intermediates and thrown; the
// instances this library targets stay far below these bounds.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize()
    {
        if (den == 0)
            throw StructuralError("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    std::string to_string() const
    {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline std::int64_t narrow(__int128 v, const char* op)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError(std::string("rational overflow in ") + op);
    return static_cast<std::int64_t>(v);
}
} // namespace detail

inline Rat operator+(const Rat& a, const Rat& b)
{
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return Rat(detail::narrow(n, "+"), detail::narrow(d, "+"));
}

inline Rat operator-(const Rat& a, const Rat& b)
{
    __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return Rat(detail::narrow(n, "-"), detail::narrow(d, "-"));
}

inline Rat operator*(const Rat& a, const Rat& b)
{
    __int128 n = (__int128)a.num * b.num;
    __int128 d = (__int128)a.den * b.den;
    return Rat(detail::narrow(n, "*"), detail::narrow(d, "*"));
}

inline Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }

inline Rat inverse(const Rat& a)
{
    if (a.num == 0)
        throw StructuralError("Rat: division by zero");
    return Rat(a.den, a.num);
}

inline Rat operator/(const Rat& a, const Rat& b) { return a * inverse(b); }

} // namespace skewmon
