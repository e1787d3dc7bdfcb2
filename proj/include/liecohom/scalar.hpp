#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace liecohom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// a mod m in [0, m) for any sign of a
inline std::uint32_t mod_reduce(const BigInt& a, std::uint32_t m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw Error("division by zero modulo " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

// Residue of a rational number modulo a prime.
inline std::uint32_t rational_mod(const Rational& q, std::uint32_t p) {
    std::uint32_t num = mod_reduce(boost::multiprecision::numerator(q), p);
    std::uint32_t den = mod_reduce(boost::multiprecision::denominator(q), p);
    return mod_mul(num, mod_inv(den, p), p);
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace liecohom
