#ifndef QBCH_BCH_HPP
#define QBCH_BCH_HPP

#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbch/cyclotomic.hpp"
#include "qbch/duality.hpp"
#include "qbch/error.hpp"
#include "qbch/extension.hpp"
#include "qbch/galois_field.hpp"
#include "qbch/integer.hpp"
#include "qbch/matrix.hpp"
#include "qbch/polynomial.hpp"

namespace qbch {

using FieldPolynomial = Polynomial<GaloisField>;

namespace detail {

struct GeneratorMemo {
    FieldOptions options;
    std::once_flag once;
    std::optional<FieldPolynomial> value;
    std::exception_ptr error;
};

}  // namespace detail

struct BchCode {
    CosetContext ctx;
    std::uint32_t b = 1;
    std::uint32_t delta = 2;
    ResidueSet Z;
    std::uint32_t k = 0;
    bool narrow_sense = true;
    bool primitive = false;

    std::uint32_t n() const noexcept { return ctx.n; }
    std::uint32_t q() const noexcept { return ctx.q; }

    std::shared_ptr<detail::GeneratorMemo> memo = std::make_shared<detail::GeneratorMemo>();
};

inline BchCode construct(std::uint64_t n, std::uint64_t q, std::int64_t b, std::uint64_t delta,
                         const FieldOptions& options = {}) {
    const auto ctx = make_context(n, q);
    auto ds = defining_set(ctx, b, delta);
    BchCode code;
    code.ctx = ctx;
    code.b = ds.b;
    code.delta = ds.delta;
    code.Z = std::move(ds.Z);
    code.k = static_cast<std::uint32_t>(n - code.Z.size());
    code.narrow_sense = code.b == 1 % ctx.n;
    code.primitive = is_primitive_length(n, q, ctx.m);
    code.memo->options = options;
    return code;
}

/// ceil((delta-1)(1-1/q)) = (delta-1) - floor((delta-1)/q).
inline std::uint64_t coset_count(std::uint64_t delta, std::uint64_t q) { return (delta - 1) - (delta - 1) / q; }

/// Largest delta covered by the dimension theorem, or nullopt if the length is outside its range.
inline std::optional<std::uint64_t> dimension_formula_limit(std::uint64_t n, std::uint64_t q) {
    const auto ctx = make_context(n, q);
    const BigInt qm = big_pow(q, ctx.m);
    if (!(big_pow(q, ctx.m / 2) < n && BigInt(n) <= qm - 1)) return std::nullopt;
    const BigInt lim = BigInt(n) * big_pow(q, (ctx.m + 1) / 2) / (qm - 1);
    return std::min<std::uint64_t>(to_u64(lim), n);
}

/// n - m ceil((delta-1)(1-1/q)) for narrow-sense codes within the theorem's range.
inline std::uint64_t dimension_formula(std::uint64_t n, std::uint64_t q, std::uint64_t delta) {
    const auto limit = dimension_formula_limit(n, q);
    if (!limit) fail(Errc::HypothesisViolated, "length outside q^{floor(m/2)} < n <= q^m - 1");
    if (delta < 2 || delta > *limit)
        fail(Errc::HypothesisViolated, "designed distance outside [2, " + std::to_string(*limit) + "]");
    const std::uint64_t m = make_context(n, q).m;
    return n - m * coset_count(delta, q);
}

/// prod_{z in Z} (x - alpha^z), projected to GF(q). Uses the table extension when q^m fits
/// the table limit and the polynomial-basis extension otherwise.
inline FieldPolynomial compute_generator_polynomial(const BchCode& code, const FieldOptions& options = {}) {
    const FieldPtr base = field_of_order(code.q(), options);
    const AnyRootOfUnity root = primitive_root_of_unity(base, code.n(), options);
    return std::visit([&](const auto& r) { return project_to_subfield(product_of_linear_factors(r, code.Z)); }, root);
}

/// Memoized generator polynomial; computed at most once per code object.
inline const FieldPolynomial& generator_polynomial(const BchCode& code) {
    auto& memo = *code.memo;
    std::call_once(memo.once, [&] {
        try {
            memo.value = compute_generator_polynomial(code, memo.options);
        } catch (...) {
            memo.error = std::current_exception();
        }
    });
    if (memo.error) std::rethrow_exception(memo.error);
    return *memo.value;
}

/// k x n, rows are the cyclic shifts x^i g(x), i < k.
inline Matrix generator_matrix(const BchCode& code) {
    const auto& g = generator_polynomial(code);
    Matrix out(code.k, code.n());
    for (std::uint32_t i = 0; i < code.k; ++i)
        for (std::size_t j = 0; j < g.coefficients().size(); ++j) out.at(i, i + j) = g.coefficients()[j];
    return out;
}

/// Check polynomial h(x) = (x^n - 1) / g(x).
inline FieldPolynomial check_polynomial(const BchCode& code) {
    const auto& g = generator_polynomial(code);
    return x_pow_minus_one(g.field(), code.n()) / g;
}

/// (n-k) x n, rows are the shifts of the reciprocal of h(x).
inline Matrix parity_check_matrix(const BchCode& code) {
    const auto h = check_polynomial(code);
    const auto& c = h.coefficients();
    Matrix out(code.n() - code.k, code.n());
    for (std::uint32_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < c.size(); ++j) out.at(i, i + j) = c[c.size() - 1 - j];
    return out;
}

/// Defining set of C^perp: (N \ Z)^{-1}.
inline ResidueSet dual_defining_set(const BchCode& code) { return negate(complement(code.Z, code.n()), code.n()); }

/// sqrt(q) for an even power of a prime.
inline std::uint32_t base_alphabet(std::uint32_t q) {
    const auto pp = as_prime_power(q);
    if (!pp || pp->e % 2 != 0) fail(Errc::InvalidArgument, std::to_string(q) + " is not a square prime power");
    return static_cast<std::uint32_t>(to_u64(big_pow(pp->p, pp->e / 2)));
}

/// Defining set of C^{perp_h} for a code over GF(r^2): { -r z : z in N \ Z }.
inline ResidueSet hermitian_dual_defining_set(const BchCode& code) {
    const std::uint32_t r = base_alphabet(code.q());
    return scale_negate_q(complement(code.Z, code.n()), code.n(), r);
}

/// Sphere-packing sharpening of the BCH bound for narrow-sense codes.
struct MinDistanceVerdict {
    bool applicable = false;
    std::uint64_t d_low = 0;
    std::optional<std::uint64_t> d_high;
    std::optional<std::uint64_t> forced_exact;
};

inline MinDistanceVerdict farr_verdict(std::uint64_t n, std::uint64_t q, std::uint64_t delta) {
    dimension_formula(n, q, delta);
    const std::uint64_t m = make_context(n, q).m;
    BigInt lhs = 0;
    for (std::uint64_t i = 0; i <= (delta + 1) / 2; ++i) lhs += binomial(n, i) * big_pow(q - 1, i);
    MinDistanceVerdict v;
    v.applicable = lhs > big_pow(q, m * coset_count(delta, q));
    const bool divisible = delta % q == 0;
    v.d_low = divisible ? delta + 1 : delta;
    if (v.applicable) {
        v.d_high = delta + 1;
        if (divisible) v.forced_exact = delta + 1;
    }
    return v;
}

/// Narrow-sense dual distance bound delta_max + 1 for delta within the sufficient range.
inline std::uint64_t dual_distance_lower_bound(const BchCode& code, Flavor flavor = Flavor::Euclidean) {
    if (!code.narrow_sense) fail(Errc::HypothesisViolated, "requires a narrow-sense code");
    std::uint64_t dmax = 0;
    if (flavor == Flavor::Euclidean) {
        if (code.ctx.m < 2) fail(Errc::HypothesisViolated, "requires ord_n(q) >= 2");
        dmax = to_u64(floor_of(kappa(code.n(), code.q())));
    } else {
        dmax = hermitian_sufficient(code.n(), base_alphabet(code.q()));
    }
    if (code.delta > dmax)
        fail(Errc::HypothesisViolated,
             "designed distance " + std::to_string(code.delta) + " exceeds delta_max = " + std::to_string(dmax));
    return dmax + 1;
}

/// BCH bound from the longest run in Z; at least delta.
inline std::uint64_t distance_bound(const BchCode& code) { return run_bound(code.Z, code.n()); }

inline bool dual_containing(const BchCode& code, Flavor flavor) {
    if (flavor == Flavor::Euclidean) return euclidean_dual_containing(code.Z, code.n());
    return hermitian_dual_containing(code.Z, code.n(), base_alphabet(code.q()));
}

}  // namespace qbch

#endif  // QBCH_BCH_HPP
