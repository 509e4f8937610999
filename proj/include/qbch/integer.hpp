#ifndef QBCH_INTEGER_HPP
#define QBCH_INTEGER_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbch/error.hpp"

namespace qbch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
    std::uint64_t p = 0;
    unsigned e = 0;
};

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    PrimePower pp{factors.front(), 0};
    for (std::uint64_t r = q; r > 1; r /= pp.p) ++pp.e;
    return pp;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

/// q^e if it does not exceed `limit`.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                                std::uint64_t limit) noexcept {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
    }
    if (result > limit) return std::nullopt;
    return result;
}

/// floor(sqrt(v)) by monotone bisection; exact at perfect squares.
inline BigInt isqrt(const BigInt& v) {
    if (v < 0) fail(Errc::InvalidArgument, "isqrt of a negative number");
    if (v == 0) return 0;
    BigInt lo = 0;
    BigInt hi = BigInt(1) << (boost::multiprecision::msb(v) / 2 + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (mid * mid <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt floor_of(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt quot = num / den;
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

inline std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        fail(Errc::InvalidArgument, "value does not fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

/// Multiplicative order of q modulo n; 1 for n = 1.
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) fail(Errc::InvalidArgument, "modulus must be positive");
    if (std::gcd(q, n) != 1) fail(Errc::NotCoprime, "gcd(n, q) != 1");
    if (n == 1) return 1;
    std::uint64_t m = 1;
    std::uint64_t x = q % n;
    while (x != 1) {
        x = mul_mod(x, q, n);
        ++m;
    }
    return m;
}

}  // namespace qbch

#endif  // QBCH_INTEGER_HPP
