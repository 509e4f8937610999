#ifndef QBCH_GALOIS_FIELD_HPP
#define QBCH_GALOIS_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbch/error.hpp"
#include "qbch/integer.hpp"

namespace qbch {

/// Canonical integer encoding of a field element: sum of c_i p^i over the
/// coefficient vector (c_0, ..., c_{e-1}) in the polynomial basis.
using Elem = std::uint32_t;

struct FieldOptions {
    std::uint64_t max_elements = std::uint64_t{1} << 20;
};

/// Fields up to this size get Conway moduli.
inline constexpr std::uint64_t kConwayLimit = std::uint64_t{1} << 16;

namespace detail {

// Dense polynomials over the prime field GF(p), lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b mod f for monic f of degree e >= 1; a and b are reduced (size <= e).
inline PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t d = prod.size(); d-- > e;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t k = 0; k < e; ++k) prod[d - e + k] = (prod[d - e + k] + (p - c) * f[k]) % p;
    }
    PrimePoly out(e, 0);
    for (std::size_t i = 0; i < e && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

inline PrimePoly powmod(PrimePoly base, std::uint64_t exp, const PrimePoly& f, std::uint32_t p) {
    PrimePoly result(f.size() - 1, 0);
    result[0] = 1;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, f, p);
        exp >>= 1;
        if (exp) base = mulmod(base, base, f, p);
    }
    return result;
}

inline bool is_one(const PrimePoly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// x reduced modulo f.
inline PrimePoly x_mod(const PrimePoly& f, std::uint32_t p) {
    return mulmod(PrimePoly{1}, f.size() - 1 == 1 ? PrimePoly{(p - f[0]) % p} : PrimePoly{0, 1}, f, p);
}

// True iff x has multiplicative order exactly p^e - 1 modulo f (which forces f irreducible).
inline bool is_primitive(const PrimePoly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (f[0] == 0) return false;
    const std::uint64_t group = to_u64(big_pow(p, e)) - 1;
    const PrimePoly x = x_mod(f, p);
    if (!is_one(powmod(x, group, f, p))) return false;
    for (std::uint64_t r : prime_factors(group))
        if (is_one(powmod(x, group / r, f, p))) return false;
    return true;
}

inline PrimePoly coefficients_from_code(std::uint64_t code, std::uint32_t p, std::size_t e) {
    PrimePoly f(e + 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[e] = 1;
    return f;
}

inline PrimePoly conway_polynomial_uncached(std::uint32_t p, unsigned e);

inline PrimePoly conway_polynomial_cached(std::uint32_t p, unsigned e) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, PrimePoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
    }
    PrimePoly f = conway_polynomial_uncached(p, e);
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(p, e), f);
    return f;
}

// Conway order: write f = x^e + sum (-1)^{e-i} t_i x^i and compare (t_{e-1}, ..., t_0)
// lexicographically. The polynomial must be primitive and, for every proper
// divisor d of e, have x^{(p^e-1)/(p^d-1)} as a root of the degree-d Conway polynomial.
inline PrimePoly conway_polynomial_uncached(std::uint32_t p, unsigned e) {
    const std::uint64_t count = to_u64(big_pow(p, e));
    std::vector<std::pair<unsigned, PrimePoly>> subfields;
    for (unsigned d = 1; d < e; ++d)
        if (e % d == 0) subfields.emplace_back(d, conway_polynomial_cached(p, d));

    for (std::uint64_t code = 0; code < count; ++code) {
        PrimePoly f = coefficients_from_code(code, p, e);
        for (unsigned i = 0; i < e; ++i)
            if ((e - i) % 2 == 1) f[i] = (p - f[i]) % p;
        if (!is_primitive(f, p)) continue;

        bool compatible = true;
        const std::uint64_t group = count - 1;
        for (const auto& [d, sub] : subfields) {
            const std::uint64_t sub_group = to_u64(big_pow(p, d)) - 1;
            const PrimePoly y = powmod(x_mod(f, p), group / sub_group, f, p);
            // Horner evaluation of sub at y.
            PrimePoly acc(e, 0);
            for (std::size_t j = sub.size(); j-- > 0;) {
                acc = mulmod(acc, y, f, p);
                acc[0] = (acc[0] + sub[j]) % p;
            }
            trim(acc);
            if (!acc.empty()) {
                compatible = false;
                break;
            }
        }
        if (compatible) return f;
    }
    fail(Errc::InvalidArgument, "no Conway polynomial found");
}

// Least primitive polynomial ordered by (a_{e-1}, ..., a_0) as plain residues.
inline PrimePoly least_primitive_polynomial(std::uint32_t p, unsigned e) {
    const std::uint64_t count = to_u64(big_pow(p, e));
    for (std::uint64_t code = 1; code < count; ++code) {
        PrimePoly f = coefficients_from_code(code, p, e);
        if (is_primitive(f, p)) return f;
    }
    fail(Errc::InvalidArgument, "no primitive polynomial found");
}

}  // namespace detail

/// Conway polynomial C_{p,e}, monic, lowest degree first.
inline std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, unsigned e) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
    return detail::conway_polynomial_cached(p, e);
}

/// GF(p^e) with exp/log tables over a primitive modulus. Immutable once built;
/// elements are plain `Elem` encodings and carry no reference to the field.
class GaloisField {
   public:
    using value_type = Elem;

    GaloisField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
            fail(Errc::InvalidArgument, "modulus must be monic of degree e");
        q_ = static_cast<std::uint32_t>(to_u64(big_pow(p, e)));
        build_tables();
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem primitive_element() const noexcept { return exp_[1 % group()]; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) return (a + b) % p_;
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a];
        std::uint32_t d = log_[b] + group() - la;
        if (d >= group()) d -= group();
        const std::uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[la + z];
    }

    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (e_ == 1) return p_ - a;
        return exp_[log_[a] + group() / 2];
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return exp_[(group() - log_[a]) % group()];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^k; negative k requires a != 0.
    Elem pow(Elem a, std::int64_t k) const {
        if (k < 0) {
            if (a == 0) fail(Errc::DivisionByZero, "negative power of zero");
            const std::uint64_t g = group();
            const std::uint64_t r = static_cast<std::uint64_t>(-(k + 1)) % g + 1;
            return exp_[(std::uint64_t{log_[a]} * (g - r % g)) % g];
        }
        return pow_u(a, static_cast<std::uint64_t>(k));
    }

    Elem pow_u(Elem a, std::uint64_t k) const noexcept {
        if (k == 0) return 1;
        if (a == 0) return 0;
        return exp_[mul_mod(log_[a], k % group(), group())];
    }

    std::uint32_t log(Elem a) const {
        if (a == 0) fail(Errc::DivisionByZero, "logarithm of zero");
        return log_[a];
    }

    Elem exp(std::uint64_t k) const noexcept { return exp_[k % group()]; }

    std::uint64_t element_order(Elem a) const {
        if (a == 0) fail(Errc::DivisionByZero, "zero has no multiplicative order");
        return group() / std::gcd<std::uint64_t>(group(), log_[a]);
    }

    std::vector<std::uint32_t> digits(Elem a) const {
        std::vector<std::uint32_t> d(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Elem from_digits(std::span<const std::uint32_t> d) const {
        std::uint64_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
        return static_cast<Elem>(v);
    }

    /// Embeds a prime-field residue.
    Elem from_integer(std::int64_t c) const noexcept {
        const std::int64_t r = ((c % static_cast<std::int64_t>(p_)) + p_) % p_;
        return static_cast<Elem>(r);
    }

    friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

   private:
    static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

    std::uint32_t group() const noexcept { return q_ - 1; }

    void build_tables() {
        const std::uint32_t g = group();
        exp_.assign(2 * std::size_t{g} + 1, 0);
        log_.assign(q_, kNoLog);
        std::vector<std::uint32_t> cur(e_, 0);
        cur[0] = 1;
        for (std::uint32_t k = 0; k < g; ++k) {
            const Elem v = from_digits(cur);
            if (log_[v] != kNoLog) fail(Errc::InvalidArgument, "modulus is not primitive");
            exp_[k] = v;
            log_[v] = k;
            // cur *= x mod f
            const std::uint32_t top = cur[e_ - 1];
            for (unsigned i = e_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (unsigned i = 0; i < e_; ++i)
                cur[i] = static_cast<std::uint32_t>((cur[i] + std::uint64_t{p_ - top} * modulus_[i]) % p_);
        }
        for (std::uint32_t k = g; k < exp_.size(); ++k) exp_[k] = exp_[k - g];
        if (g == 0) exp_.assign(3, 1);
        if (p_ != 2 && e_ > 1) {
            // zech_[k] = log(1 + gamma^k)
            zech_.assign(g, kNoLog);
            for (std::uint32_t k = 0; k < g; ++k) {
                auto d = digits(exp_[k]);
                d[0] = (d[0] + 1) % p_;
                const Elem s = from_digits(d);
                zech_[k] = s == 0 ? kNoLog : log_[s];
            }
        }
    }

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// GF(p^e) with the deterministic modulus: Conway up to 2^16 elements, the
/// least primitive polynomial beyond. Fields are cached per (p, e).
inline FieldPtr field_create(std::uint64_t p, unsigned e, const FieldOptions& options = {}) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
    const auto size = checked_pow(p, e, std::min<std::uint64_t>(options.max_elements, 0xFFFFFFFFull));
    if (!size) fail(Errc::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(e) + ") exceeds the table limit");

    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
    }
    const auto prime = static_cast<std::uint32_t>(p);
    auto modulus = *size <= kConwayLimit ? detail::conway_polynomial_cached(prime, e)
                                         : detail::least_primitive_polynomial(prime, e);
    auto field = std::make_shared<const GaloisField>(prime, e, std::move(modulus));
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(p, e), field).first->second;
}

/// GF(q) for a prime power q.
inline FieldPtr field_of_order(std::uint64_t q, const FieldOptions& options = {}) {
    const auto pp = as_prime_power(q);
    if (!pp) fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return field_create(pp->p, pp->e, options);
}

/// Value-semantics element bound to its field; mixing fields raises FieldMismatch.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
        if (!field_) fail(Errc::InvalidArgument, "null field");
        if (!field_->contains(value_)) fail(Errc::InvalidArgument, "encoding out of range");
    }

    static FieldElement zero(FieldPtr f) { return {std::move(f), 0}; }
    static FieldElement one(FieldPtr f) { return {std::move(f), 1}; }
    static FieldElement primitive(FieldPtr f) {
        const Elem g = f->primitive_element();
        return {std::move(f), g};
    }

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inv() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::int64_t k) const { return {field_, field_->pow(value_, k)}; }
    std::uint64_t order() const { return field_->element_order(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->div(a.value_, b.value_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return same_field(a, b) && a.value_ == b.value_;
    }

   private:
    static bool same_field(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ || *a.field_ == *b.field_;
    }
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!same_field(a, b)) fail(Errc::FieldMismatch, "operands belong to different fields");
    }

    FieldPtr field_;
    Elem value_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement pow(const FieldElement& a, std::int64_t k) { return a.pow(k); }

}  // namespace qbch

#endif  // QBCH_GALOIS_FIELD_HPP
