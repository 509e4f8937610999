#ifndef QBCH_DUALITY_HPP
#define QBCH_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qbch/cyclotomic.hpp"
#include "qbch/error.hpp"
#include "qbch/integer.hpp"

namespace qbch {

enum class Flavor { Euclidean, Hermitian };

constexpr std::string_view to_string(Flavor f) noexcept {
    return f == Flavor::Euclidean ? "euclidean" : "hermitian";
}

/// C^perp in C for the cyclic code with defining set Z.
inline bool euclidean_dual_containing(const ResidueSet& Z, std::uint32_t n) { return disjoint(Z, negate(Z, n)); }

/// C^{perp_h} in C for a cyclic code over GF(q^2) with defining set Z; q is the base alphabet.
inline bool hermitian_dual_containing(const ResidueSet& Z, std::uint32_t n, std::uint32_t q) {
    return disjoint(Z, scale_negate_q(Z, n, q));
}

/// n (q^{ceil(m/2)} - 1 - (q-2)[m odd]) / (q^m - 1), m = ord_n(q).
inline Rational kappa(std::uint64_t n, std::uint64_t q) {
    const auto ctx = make_context(n, q);
    const unsigned m = ctx.m;
    const BigInt top = big_pow(q, (m + 1) / 2) - 1 - (m % 2 == 1 ? BigInt(q) - 2 : BigInt(0));
    return Rational(BigInt(n) * top, big_pow(q, m) - 1);
}

/// floor((n+1)/2); requires ord_n(q) = 1.
inline std::uint64_t euclid_order_one_threshold(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || (q % n) != 1 % n) fail(Errc::HypothesisViolated, "requires q = 1 mod n");
    return (n + 1) / 2;
}

/// floor(q sqrt(n)), exact.
inline std::uint64_t euclid_necessary(std::uint64_t n, std::uint64_t q) {
    return to_u64(isqrt(BigInt(q) * q * n));
}

/// kappa when integral and m >= 2: then containment holds iff 2 <= delta <= kappa.
inline std::optional<std::uint64_t> euclid_exact_threshold(std::uint64_t n, std::uint64_t q) {
    if (make_context(n, q).m < 2) return std::nullopt;
    const Rational k = kappa(n, q);
    if (boost::multiprecision::denominator(k) != 1) return std::nullopt;
    return to_u64(boost::multiprecision::numerator(k));
}

inline bool is_primitive_length(std::uint64_t n, std::uint64_t q, unsigned m) { return BigInt(n) == big_pow(q, m) - 1; }

/// Primitive n = q^m - 1, m > 1: no b gives a dual-containing code once delta exceeds this.
inline std::uint64_t nonnarrow_euclid_bound(std::uint64_t n, std::uint64_t q) {
    const auto ctx = make_context(n, q);
    const unsigned m = ctx.m;
    if (m < 2 || !is_primitive_length(n, q, m)) fail(Errc::HypothesisViolated, "requires n = q^m - 1 with m > 1");
    if (m % 2 == 0) return to_u64(big_pow(q, m / 2) - 1);
    return to_u64(2 * (big_pow(q, (m + 1) / 2) - q + 1));
}

/// m = ord_n(q^2).
inline unsigned hermitian_order(std::uint64_t n, std::uint64_t q) {
    if (q > 0xFFFFFFFFull) fail(Errc::InvalidArgument, "alphabet too large");
    return make_context(n, q * q).m;
}

/// floor(n (q^{m+[m even]} - 1 - (q^2-2)[m even]) / (q^{2m} - 1)), m = ord_n(q^2).
inline std::uint64_t hermitian_sufficient(std::uint64_t n, std::uint64_t q) {
    const unsigned m = hermitian_order(n, q);
    const bool even = m % 2 == 0;
    const BigInt top = big_pow(q, m + (even ? 1 : 0)) - 1 - (even ? BigInt(q) * q - 2 : BigInt(0));
    return to_u64(BigInt(n) * top / (big_pow(q, 2 * m) - 1));
}

/// n / (q^m + 1) for (q^m + 1) | n with m = ord_n(q^2) odd; any b with delta above it
/// fails Hermitian containment.
inline std::uint64_t hermitian_nonnarrow_special(std::uint64_t n, std::uint64_t q) {
    const unsigned m = hermitian_order(n, q);
    const BigInt d = big_pow(q, m) + 1;
    if (m % 2 == 0) fail(Errc::HypothesisViolated, "requires ord_n(q^2) odd");
    if (BigInt(n) % d != 0) fail(Errc::HypothesisViolated, "requires (q^m + 1) | n");
    return to_u64(BigInt(n) / d);
}

/// Primitive n = q^{2m} - 1: q^m - 1 (m odd), 2(q^{m+1} - q^2 + 1) (m even, m != 2).
inline std::uint64_t hermitian_nonnarrow_primitive_bound(std::uint64_t n, std::uint64_t q) {
    const unsigned m = hermitian_order(n, q);
    if (BigInt(n) != big_pow(q, 2 * m) - 1) fail(Errc::HypothesisViolated, "requires n = q^{2m} - 1");
    if (m % 2 == 1) return to_u64(big_pow(q, m) - 1);
    if (m == 2) fail(Errc::NotApplicable, "the case m = 2 is excluded");
    return to_u64(2 * (big_pow(q, m + 1) - BigInt(q) * q + 1));
}

/// floor(n (q^m - 1) / (q^{2m} - 1)), the bound of the Hermitian quantum family.
inline std::uint64_t hermitian_family_delta_max(std::uint64_t n, std::uint64_t q) {
    const unsigned m = hermitian_order(n, q);
    return to_u64(BigInt(n) * (big_pow(q, m) - 1) / (big_pow(q, 2 * m) - 1));
}

/// Narrow-sense thresholds for one (n, q, flavor). For Hermitian reports `q` is the
/// base alphabet and the codes live over GF(q^2).
struct ThresholdReport {
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::uint32_t alphabet = 0;
    std::uint32_t m = 0;
    Flavor flavor = Flavor::Euclidean;
    bool narrow_sense = true;
    std::optional<Rational> kappa;
    std::uint64_t sufficient_delta_max = 0;
    /// Smallest delta from which containment provably fails.
    std::optional<std::uint64_t> necessary_delta_max;
    std::optional<std::uint64_t> exact_threshold;
    std::optional<std::uint64_t> nonnarrow_delta_max;
    std::optional<std::uint64_t> family_delta_max;
};

inline ThresholdReport threshold_report(std::uint64_t n, std::uint64_t q, Flavor flavor) {
    ThresholdReport r;
    r.flavor = flavor;
    r.n = static_cast<std::uint32_t>(n);
    r.q = static_cast<std::uint32_t>(q);
    if (flavor == Flavor::Euclidean) {
        const auto ctx = make_context(n, q);
        r.alphabet = ctx.q;
        r.m = ctx.m;
        r.kappa = kappa(n, q);
        if (ctx.m == 1) {
            r.sufficient_delta_max = euclid_order_one_threshold(n, q);
            r.necessary_delta_max = r.sufficient_delta_max + 1;
            r.exact_threshold = r.sufficient_delta_max;
        } else {
            r.sufficient_delta_max = to_u64(floor_of(*r.kappa));
            r.necessary_delta_max = euclid_necessary(n, q);
            r.exact_threshold = euclid_exact_threshold(n, q);
            if (is_primitive_length(n, q, ctx.m)) {
                r.nonnarrow_delta_max = nonnarrow_euclid_bound(n, q);
                if (*r.nonnarrow_delta_max == r.sufficient_delta_max) r.exact_threshold = r.sufficient_delta_max;
            }
        }
    } else {
        const unsigned m = hermitian_order(n, q);
        r.alphabet = static_cast<std::uint32_t>(q * q);
        r.m = m;
        r.sufficient_delta_max = hermitian_sufficient(n, q);
        r.family_delta_max = hermitian_family_delta_max(n, q);
        if (m % 2 == 1 && BigInt(n) % (big_pow(q, m) + 1) == 0)
            r.necessary_delta_max = hermitian_nonnarrow_special(n, q) + 1;
        if (BigInt(n) == big_pow(q, 2 * m) - 1 && m != 2) r.nonnarrow_delta_max = hermitian_nonnarrow_primitive_bound(n, q);
        const bool tight_nec = r.necessary_delta_max && *r.necessary_delta_max == r.sufficient_delta_max + 1;
        const bool tight_nn = r.nonnarrow_delta_max && *r.nonnarrow_delta_max == r.sufficient_delta_max;
        if (tight_nec || tight_nn) r.exact_threshold = r.sufficient_delta_max;
    }
    if (r.necessary_delta_max && r.m >= 2 && r.sufficient_delta_max >= *r.necessary_delta_max)
        fail(Errc::HypothesisViolated, "sufficient threshold reaches the necessary bound");
    return r;
}

}  // namespace qbch

#endif  // QBCH_DUALITY_HPP
