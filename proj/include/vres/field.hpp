#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vres {

using coef = std::uint32_t;

inline constexpr coef kDefaultChar = 32003;

bool isPrime(std::uint64_t n);

// Arithmetic in GF(p), p < 2^31.
struct Field {
    coef p = kDefaultChar;

    Field() = default;
    explicit Field(coef prime) : p(prime) {
        if (!isPrime(prime) || prime >= (1u << 31))
            throw std::invalid_argument("characteristic must be a prime below 2^31: " + std::to_string(prime));
    }

    coef add(coef a, coef b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return coef(s >= p ? s - p : s);
    }
    coef sub(coef a, coef b) const { return a >= b ? a - b : coef(std::uint64_t(a) + p - b); }
    coef neg(coef a) const { return a == 0 ? 0 : p - a; }
    coef mul(coef a, coef b) const { return coef(std::uint64_t(a) * b % p); }
    coef pow(coef a, std::uint64_t e) const {
        coef r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    coef inv(coef a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p - 2);
    }
    coef fromInt(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return coef(m);
    }
    // symmetric representative in (-p/2, p/2]
    long long toSigned(coef a) const { return a > p / 2 ? static_cast<long long>(a) - p : a; }
};

}  // namespace vres
