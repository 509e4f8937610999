#ifndef QBCH_QUANTUM_HPP
#define QBCH_QUANTUM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qbch/bch.hpp"
#include "qbch/cyclotomic.hpp"
#include "qbch/duality.hpp"
#include "qbch/error.hpp"
#include "qbch/integer.hpp"

namespace qbch {

enum class Construction { NestedCSS, EuclideanCSS, Hermitian, Expanded, GeneralCSS };

constexpr std::string_view to_string(Construction c) noexcept {
    switch (c) {
        case Construction::NestedCSS: return "nested_css";
        case Construction::EuclideanCSS: return "euclidean_css";
        case Construction::Hermitian: return "hermitian";
        case Construction::Expanded: return "expanded";
        case Construction::GeneralCSS: return "general_css";
    }
    return "unknown";
}

/// Classical ingredients the parameters were derived from.
struct Provenance {
    std::uint32_t n = 0;
    std::uint32_t alphabet = 0;
    std::optional<std::uint32_t> delta;
    std::optional<std::uint32_t> delta1;
    std::optional<std::uint32_t> delta2;
    std::optional<std::uint32_t> l;
};

/// [[n, k, >= d_low]]_q.
struct QuantumCodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d_low = 0;
    std::uint32_t q = 0;
    std::uint64_t pure_to = 0;
    Construction construction = Construction::EuclideanCSS;
    Provenance provenance;
    std::optional<std::uint64_t> k_as_printed;
};

inline std::string notation(const QuantumCodeParams& p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",>=" + std::to_string(p.d_low) + "]]_" +
           std::to_string(p.q);
}

namespace detail {

inline std::uint64_t euclid_delta_max(std::uint64_t n, std::uint64_t q) { return to_u64(floor_of(kappa(n, q))); }

inline void check_dimension(std::uint64_t formula, std::uint64_t exact, const char* what) {
    if (formula != exact)
        fail(Errc::HypothesisViolated, std::string(what) + ": formula gives " + std::to_string(formula) +
                                           " but the defining set gives " + std::to_string(exact));
}

}  // namespace detail

/// CSS from BCH(n,q;delta2) in BCH(n,q;delta1), pure to delta2.
inline QuantumCodeParams nested_css(std::uint64_t n, std::uint64_t q, std::uint64_t delta1, std::uint64_t delta2) {
    const auto ctx = make_context(n, q);
    if (ctx.m < 2) fail(Errc::HypothesisViolated, "requires ord_n(q) >= 2");
    const std::uint64_t dmax = detail::euclid_delta_max(n, q);
    if (!(2 <= delta1 && delta1 < delta2 && delta2 <= dmax))
        fail(Errc::HypothesisViolated, "requires 2 <= delta1 < delta2 <= " + std::to_string(dmax));
    const std::uint64_t k = ctx.m * (delta2 - delta1 - (delta2 - 1) / q + (delta1 - 1) / q);
    const auto c1 = construct(n, q, 1, delta1);
    const auto c2 = construct(n, q, 1, delta2);
    detail::check_dimension(k, c1.k - c2.k, "nested_css");
    detail::check_dimension(k, dimension_formula(n, q, delta1) - dimension_formula(n, q, delta2), "nested_css");
    QuantumCodeParams p;
    p.n = n;
    p.k = k;
    p.d_low = delta1;
    p.q = static_cast<std::uint32_t>(q);
    p.pure_to = delta2;
    p.construction = Construction::NestedCSS;
    p.provenance = {ctx.n, ctx.q, std::nullopt, static_cast<std::uint32_t>(delta1), static_cast<std::uint32_t>(delta2),
                    std::nullopt};
    return p;
}

/// [[n, n - 2m ceil((delta-1)(1-1/q)), >= delta]]_q from a dual-containing BCH code.
inline QuantumCodeParams euclid_css(std::uint64_t n, std::uint64_t q, std::uint64_t delta) {
    const auto ctx = make_context(n, q);
    const std::uint64_t dmax = detail::euclid_delta_max(n, q);
    if (delta < 2 || delta > dmax) fail(Errc::HypothesisViolated, "requires 2 <= delta <= " + std::to_string(dmax));
    const auto code = construct(n, q, 1, delta);
    if (!euclidean_dual_containing(code.Z, code.n()))
        fail(Errc::HypothesisViolated, "ingredient code does not contain its Euclidean dual");
    const std::uint64_t k = n - 2 * std::uint64_t{ctx.m} * coset_count(delta, q);
    detail::check_dimension(k, 2 * std::uint64_t{code.k} - n, "euclid_css");
    QuantumCodeParams p;
    p.n = n;
    p.k = k;
    p.d_low = delta;
    p.q = static_cast<std::uint32_t>(q);
    p.pure_to = dmax + 1;
    p.construction = Construction::EuclideanCSS;
    p.provenance = {ctx.n, ctx.q, static_cast<std::uint32_t>(delta), std::nullopt, std::nullopt, std::nullopt};
    return p;
}

/// [[n, n - 2m ceil((delta-1)(1-1/q^2)), >= delta]]_q from BCH(n,q^2;delta), m = ord_n(q^2) >= 2.
inline QuantumCodeParams hermitian_family(std::uint64_t n, std::uint64_t q, std::uint64_t delta) {
    const unsigned m = hermitian_order(n, q);
    if (m < 2) fail(Errc::HypothesisViolated, "requires ord_n(q^2) >= 2");
    const std::uint64_t dmax = hermitian_family_delta_max(n, q);
    if (delta < 2 || delta > dmax) fail(Errc::HypothesisViolated, "requires 2 <= delta <= " + std::to_string(dmax));
    const auto code = construct(n, q * q, 1, delta);
    if (!hermitian_dual_containing(code.Z, code.n(), static_cast<std::uint32_t>(q)))
        fail(Errc::HypothesisViolated, "ingredient code does not contain its Hermitian dual");
    const std::uint64_t k = n - 2 * std::uint64_t{m} * coset_count(delta, q * q);
    detail::check_dimension(k, 2 * std::uint64_t{code.k} - n, "hermitian_family");
    QuantumCodeParams p;
    p.n = n;
    p.k = k;
    p.d_low = delta;
    p.q = static_cast<std::uint32_t>(q);
    p.pure_to = dmax + 1;
    p.construction = Construction::Hermitian;
    p.provenance = {code.n(), code.q(), static_cast<std::uint32_t>(delta), std::nullopt, std::nullopt, std::nullopt};
    return p;
}

/// l-fold expansion of euclid_css over GF(q^l): [[ln, lk, >= delta]]_q, pure to delta.
inline QuantumCodeParams expanded_family(std::uint64_t n, std::uint64_t q, std::uint64_t l, std::uint64_t delta) {
    if (l == 0) fail(Errc::InvalidArgument, "expansion degree must be positive");
    const auto ql = checked_pow(q, l, 0xFFFFFFFFull);
    if (!ql) fail(Errc::InvalidArgument, "q^l too large");
    const auto inner = euclid_css(n, *ql, delta);
    const std::uint64_t m = make_context(n, *ql).m;
    QuantumCodeParams p;
    p.n = l * n;
    p.k = l * inner.k;
    p.d_low = delta;
    p.q = static_cast<std::uint32_t>(q);
    p.pure_to = delta;
    p.construction = Construction::Expanded;
    p.provenance = {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(*ql), static_cast<std::uint32_t>(delta),
                    std::nullopt, std::nullopt, static_cast<std::uint32_t>(l)};
    const BigInt printed = BigInt(l) * n - BigInt(2) * l * m * coset_count(delta, q);
    if (printed != BigInt(p.k)) p.k_as_printed = printed < 0 ? 0 : to_u64(printed);
    return p;
}

/// CSS from C1 in C2 (Z2 subset of Z1): [[n, k2 - k1, >= d]] with d and purity from BCH run bounds.
inline QuantumCodeParams css_general(const BchCode& c1, const BchCode& c2) {
    if (c1.n() != c2.n() || c1.q() != c2.q()) fail(Errc::NotNested, "codes differ in length or alphabet");
    if (!is_subset(c2.Z, c1.Z)) fail(Errc::NotNested, "defining set of C2 is not contained in that of C1");
    const std::uint32_t n = c1.n();
    const std::uint64_t d2 = run_bound(c2.Z, n);
    const std::uint64_t d1_dual = run_bound(dual_defining_set(c1), n);
    const std::uint64_t d1 = run_bound(c1.Z, n);
    const std::uint64_t d2_dual = run_bound(dual_defining_set(c2), n);
    QuantumCodeParams p;
    p.n = n;
    p.k = c2.k - c1.k;
    p.d_low = std::min(d2, d1_dual);
    p.q = c1.q();
    p.pure_to = std::min(d1, d2_dual);
    p.construction = Construction::GeneralCSS;
    p.provenance = {n, c1.q(), std::nullopt, c1.delta, c2.delta, std::nullopt};
    return p;
}

}  // namespace qbch

#endif  // QBCH_QUANTUM_HPP
