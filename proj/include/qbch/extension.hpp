#ifndef QBCH_EXTENSION_HPP
#define QBCH_EXTENSION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qbch/error.hpp"
#include "qbch/galois_field.hpp"
#include "qbch/integer.hpp"
#include "qbch/polynomial.hpp"

namespace qbch {

/// GF(q^m) as a table field together with the embedding of GF(q).
class FieldExtension {
   public:
    using value_type = Elem;

    FieldExtension(FieldPtr base, unsigned m, const FieldOptions& options = {})
        : base_(std::move(base)), m_(m) {
        if (m_ == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
        big_ = field_create(base_->characteristic(), base_->degree() * m_, options);
        const std::uint64_t group = big_->order() - 1;
        const std::uint64_t q = base_->order();
        stride_ = group / (q - 1);

        // Root of the base modulus among the elements of order q - 1.
        const auto& f = base_->modulus();
        for (std::uint64_t j = 1; j < std::max<std::uint64_t>(q - 1, 2); ++j) {
            if (std::gcd(j, q - 1) != 1) continue;
            const Elem zeta = big_->exp(mul_mod(j, stride_, group));
            Elem acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = big_->add(big_->mul(acc, zeta), big_->from_integer(f[i]));
            if (acc == 0) {
                j_ = j;
                break;
            }
        }
        if (j_ == 0) fail(Errc::InvalidArgument, "base field does not embed");
        if (q - 1 > 1) j_inv_ = modular_inverse(j_, q - 1);

        embed_.assign(q, 0);
        for (Elem a = 1; a < q; ++a) embed_[a] = big_->exp(mul_mod(mul_mod(base_->log(a), j_, q - 1), stride_, group));
    }

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& big() const noexcept { return big_; }
    unsigned degree() const noexcept { return m_; }
    BigInt order() const { return BigInt(big_->order()); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool is_zero(Elem a) const noexcept { return a == 0; }
    Elem add(Elem a, Elem b) const noexcept { return big_->add(a, b); }
    Elem sub(Elem a, Elem b) const noexcept { return big_->sub(a, b); }
    Elem neg(Elem a) const noexcept { return big_->neg(a); }
    Elem mul(Elem a, Elem b) const noexcept { return big_->mul(a, b); }
    Elem inv(Elem a) const { return big_->inv(a); }
    Elem pow(Elem a, const BigInt& k) const {
        const BigInt group = big_->order() - 1;
        return big_->pow_u(a, to_u64(k % group));
    }

    Elem embed(Elem a) const {
        if (a >= embed_.size()) fail(Errc::InvalidArgument, "element outside the base field");
        return embed_[a];
    }

    /// Preimage under the embedding, if x lies in the subfield.
    std::optional<Elem> project(Elem x) const {
        if (x == 0) return Elem{0};
        const std::uint64_t l = big_->log(x);
        if (l % stride_ != 0) return std::nullopt;
        const std::uint64_t q1 = base_->order() - 1;
        if (q1 == 1) return Elem{1};
        return base_->exp(mul_mod(l / stride_, j_inv_, q1));
    }

    Elem frobenius(Elem x) const { return big_->pow_u(x, base_->order()); }

    /// Coordinates (Tr(gamma^s x))_{s<m}; a GF(q)-linear bijection onto GF(q)^m.
    std::vector<Elem> coordinates(Elem x) const {
        std::vector<Elem> out(m_, 0);
        if (x == 0) return out;
        const std::uint64_t group = big_->order() - 1;
        const std::uint64_t q = base_->order();
        for (unsigned s = 0; s < m_; ++s) {
            const std::uint64_t l = (big_->log(x) + s) % group;
            Elem tr = 0;
            std::uint64_t e = l;
            for (unsigned i = 0; i < m_; ++i) {
                tr = big_->add(tr, big_->exp(e));
                e = mul_mod(e, q, group);
            }
            out[s] = *project(tr);
        }
        return out;
    }

    friend bool operator==(const FieldExtension& a, const FieldExtension& b) {
        return *a.base_ == *b.base_ && a.m_ == b.m_;
    }

   private:
    static std::uint64_t modular_inverse(std::uint64_t a, std::uint64_t mod) {
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
        while (new_r != 0) {
            const std::int64_t quot = r / new_r;
            std::tie(t, new_t) = std::make_tuple(new_t, t - quot * new_t);
            std::tie(r, new_r) = std::make_tuple(new_r, r - quot * new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(mod);
        return static_cast<std::uint64_t>(t);
    }

    FieldPtr base_;
    FieldPtr big_;
    unsigned m_;
    std::uint64_t stride_ = 1;
    std::uint64_t j_ = 0;
    std::uint64_t j_inv_ = 0;
    std::vector<Elem> embed_;
};

using ExtensionPtr = std::shared_ptr<const FieldExtension>;

/// GF(q^m) over the table field, cached. Raises FieldTooLarge beyond the table limit.
inline ExtensionPtr extension_field(const FieldPtr& base, unsigned m, const FieldOptions& options = {}) {
    if (!base) fail(Errc::InvalidArgument, "null base field");
    const std::uint64_t limit = options.max_elements;
    if (!checked_pow(base->order(), m, std::min<std::uint64_t>(limit, 0xFFFFFFFFull)))
        fail(Errc::FieldTooLarge, "GF(" + std::to_string(base->order()) + "^" + std::to_string(m) +
                                      ") exceeds the table limit");
    static std::mutex mutex;
    static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, ExtensionPtr> cache;
    const auto key = std::make_tuple(base->characteristic(), base->degree(), m);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto ext = std::make_shared<const FieldExtension>(field_create(base->characteristic(), base->degree()), m, options);
    std::lock_guard lock(mutex);
    return cache.emplace(key, ext).first->second;
}

/// GF(q)[y]/(f) with f the least monic irreducible of degree m; no tables, so m
/// is unbounded. Elements are coefficient vectors of length m.
class PolynomialBasisExtension {
   public:
    using value_type = std::vector<Elem>;

    PolynomialBasisExtension(FieldPtr base, unsigned m) : base_(std::move(base)), m_(m) {
        if (m_ == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
        modulus_ = find_modulus();
        order_ = big_pow(base_->order(), m_);
    }

    const FieldPtr& base() const noexcept { return base_; }
    unsigned degree() const noexcept { return m_; }
    const BigInt& order() const noexcept { return order_; }
    /// Monic modulus over GF(q), lowest degree first.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }

    value_type zero() const { return value_type(m_, 0); }
    value_type one() const {
        value_type v(m_, 0);
        v[0] = 1;
        return v;
    }
    bool is_zero(const value_type& a) const noexcept {
        return std::all_of(a.begin(), a.end(), [](Elem c) { return c == 0; });
    }
    value_type add(const value_type& a, const value_type& b) const {
        value_type out(m_);
        for (unsigned i = 0; i < m_; ++i) out[i] = base_->add(a[i], b[i]);
        return out;
    }
    value_type neg(const value_type& a) const {
        value_type out(m_);
        for (unsigned i = 0; i < m_; ++i) out[i] = base_->neg(a[i]);
        return out;
    }
    value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }

    value_type mul(const value_type& a, const value_type& b) const {
        const GaloisField& f = *base_;
        std::vector<Elem> prod(2 * m_ - 1, 0);
        for (unsigned i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j)
                if (b[j] != 0) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        }
        for (std::size_t d = prod.size(); d-- > m_;) {
            const Elem c = prod[d];
            if (c == 0) continue;
            for (unsigned k = 0; k < m_; ++k) prod[d - m_ + k] = f.sub(prod[d - m_ + k], f.mul(c, modulus_[k]));
        }
        prod.resize(m_);
        return prod;
    }

    value_type pow(value_type a, BigInt k) const {
        value_type result = one();
        while (k > 0) {
            if (boost::multiprecision::bit_test(k, 0)) result = mul(result, a);
            k >>= 1;
            if (k > 0) a = mul(a, a);
        }
        return result;
    }

    value_type inv(const value_type& a) const {
        if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
        if (a == one()) return a;
        return pow(a, order_ - 2);
    }

    value_type embed(Elem c) const {
        value_type v(m_, 0);
        v[0] = c;
        return v;
    }

    std::optional<Elem> project(const value_type& x) const {
        for (unsigned i = 1; i < m_; ++i)
            if (x[i] != 0) return std::nullopt;
        return x[0];
    }

    value_type frobenius(const value_type& x) const { return pow(x, BigInt(base_->order())); }

    const value_type& coordinates(const value_type& x) const noexcept { return x; }

    /// Element with coefficient vector given by the base-q digits of t.
    value_type from_index(std::uint64_t t) const {
        value_type v(m_, 0);
        for (unsigned i = 0; i < m_ && t; ++i) {
            v[i] = static_cast<Elem>(t % base_->order());
            t /= base_->order();
        }
        return v;
    }

    friend bool operator==(const PolynomialBasisExtension& a, const PolynomialBasisExtension& b) {
        return *a.base_ == *b.base_ && a.m_ == b.m_;
    }

   private:
    using Poly = Polynomial<GaloisField>;

    // x^{q^i} mod f for i = 0..m, by repeated q-th powering.
    bool is_irreducible(const Poly& f) const {
        const Poly x = Poly::monomial(base_, 1, 1);
        std::vector<Poly> frob{x % f};
        for (unsigned i = 1; i <= m_; ++i) frob.push_back(pow_mod(frob.back(), base_->order(), f));
        if (!(frob[m_] == x % f)) return false;
        for (std::uint64_t r : prime_factors(m_)) {
            if (gcd(frob[m_ / r] - x, f).degree() != 0) return false;
        }
        return true;
    }

    static Poly pow_mod(Poly base, std::uint64_t k, const Poly& f) {
        Poly result = Poly::one(base.field());
        while (k) {
            if (k & 1) result = (result * base) % f;
            k >>= 1;
            if (k) base = (base * base) % f;
        }
        return result;
    }

    std::vector<Elem> find_modulus() const {
        const std::uint64_t q = base_->order();
        for (std::uint64_t code = 1;; ++code) {
            if (code % q == 0) continue;
            std::vector<Elem> c(m_ + 1, 0);
            std::uint64_t t = code;
            for (unsigned i = 0; i < m_; ++i) {
                c[i] = static_cast<Elem>(t % q);
                t /= q;
            }
            if (t != 0) break;
            c[m_] = 1;
            if (m_ == 1 || is_irreducible(Poly(base_, c))) return c;
        }
        fail(Errc::InvalidArgument, "no irreducible polynomial found");
    }

    FieldPtr base_;
    unsigned m_;
    std::vector<Elem> modulus_;
    BigInt order_;
};

using PolynomialBasisPtr = std::shared_ptr<const PolynomialBasisExtension>;

inline PolynomialBasisPtr polynomial_basis_extension(const FieldPtr& base, unsigned m) {
    static std::mutex mutex;
    static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, PolynomialBasisPtr> cache;
    const auto key = std::make_tuple(base->characteristic(), base->degree(), m);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto ext = std::make_shared<const PolynomialBasisExtension>(base, m);
    std::lock_guard lock(mutex);
    return cache.emplace(key, ext).first->second;
}

/// A primitive n-th root of unity alpha in GF(q^m), m = ord_n(q), with its powers.
template <class E>
struct RootOfUnity {
    std::shared_ptr<const E> ext;
    std::uint64_t n = 0;
    typename E::value_type alpha;
    std::vector<typename E::value_type> powers;

    const typename E::value_type& power(std::int64_t z) const {
        const auto nn = static_cast<std::int64_t>(n);
        return powers[static_cast<std::size_t>(((z % nn) + nn) % nn)];
    }
};

using AnyRootOfUnity = std::variant<RootOfUnity<FieldExtension>, RootOfUnity<PolynomialBasisExtension>>;

namespace detail {

template <class E>
RootOfUnity<E> make_root(std::shared_ptr<const E> ext, std::uint64_t n, typename E::value_type alpha) {
    RootOfUnity<E> r{std::move(ext), n, std::move(alpha), {}};
    r.powers.reserve(n);
    auto cur = r.ext->one();
    for (std::uint64_t i = 0; i < n; ++i) {
        r.powers.push_back(cur);
        cur = r.ext->mul(cur, r.alpha);
    }
    if (cur != r.ext->one()) fail(Errc::WrongOrder, "alpha^n != 1");
    return r;
}

}  // namespace detail

/// Table route: alpha = gamma^{(q^m-1)/n} for the primitive element gamma of GF(q^m).
inline RootOfUnity<FieldExtension> table_root_of_unity(const FieldPtr& base, std::uint64_t n,
                                                       const FieldOptions& options = {}) {
    const unsigned m = static_cast<unsigned>(multiplicative_order(base->order(), n));
    auto ext = extension_field(base, m, options);
    const Elem alpha = ext->big()->exp((ext->big()->order() - 1) / n);
    return detail::make_root<FieldExtension>(ext, n, alpha);
}

/// Table-free route: alpha = c^{(q^m-1)/n} for the first c (by digit index) giving order n.
inline RootOfUnity<PolynomialBasisExtension> polynomial_root_of_unity(const FieldPtr& base, std::uint64_t n) {
    const unsigned m = static_cast<unsigned>(multiplicative_order(base->order(), n));
    auto ext = polynomial_basis_extension(base, m);
    const BigInt cofactor = (ext->order() - 1) / n;
    const auto primes = prime_factors(n);
    for (std::uint64_t t = 1;; ++t) {
        const auto b = ext->pow(ext->from_index(t), cofactor);
        if (ext->is_zero(b)) continue;
        bool ok = true;
        for (std::uint64_t r : primes)
            if (ext->pow(b, BigInt(n / r)) == ext->one()) {
                ok = false;
                break;
            }
        if (ok) return detail::make_root<PolynomialBasisExtension>(ext, n, b);
    }
}

/// Table route when q^m fits the table limit, polynomial basis otherwise.
inline AnyRootOfUnity primitive_root_of_unity(const FieldPtr& base, std::uint64_t n, const FieldOptions& options = {}) {
    const std::uint64_t m = multiplicative_order(base->order(), n);
    if (checked_pow(base->order(), m, std::min<std::uint64_t>(options.max_elements, 0xFFFFFFFFull)))
        return table_root_of_unity(base, n, options);
    return polynomial_root_of_unity(base, n);
}

/// prod_{z in exponents} (x - alpha^z) over GF(q^m).
template <class E>
Polynomial<E> product_of_linear_factors(const RootOfUnity<E>& root, const std::vector<std::uint32_t>& exponents) {
    const E& f = *root.ext;
    std::vector<typename E::value_type> c{f.one()};
    for (std::uint32_t z : exponents) {
        const auto r = f.neg(root.power(z));
        c.push_back(f.zero());
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(c[i], r));
        c[0] = f.mul(c[0], r);
    }
    return Polynomial<E>(root.ext, std::move(c));
}

/// Re-expresses f over the base field; raises CoefficientOutsideSubfield.
template <class E>
Polynomial<GaloisField> project_to_subfield(const Polynomial<E>& f) {
    const E& ext = *f.field();
    std::vector<Elem> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) {
        auto p = ext.project(c);
        if (!p) fail(Errc::CoefficientOutsideSubfield, "coefficient is not fixed by the Frobenius map");
        out.push_back(*p);
    }
    return Polynomial<GaloisField>(ext.base(), std::move(out));
}

/// prod (x - alpha^z) for alpha in a table field; alpha must have order exactly n.
inline Polynomial<GaloisField> product_of_linear_factors(const std::vector<std::uint32_t>& exponents,
                                                         const FieldElement& alpha, std::uint64_t n) {
    if (alpha.is_zero() || alpha.order() != n)
        fail(Errc::WrongOrder, "alpha does not have multiplicative order " + std::to_string(n));
    const GaloisField& f = *alpha.field();
    std::vector<Elem> c{1};
    for (std::uint32_t z : exponents) {
        const Elem r = f.neg(f.pow_u(alpha.value(), z % n));
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(c[i], r));
        c[0] = f.mul(c[0], r);
    }
    return Polynomial<GaloisField>(alpha.field(), std::move(c));
}

/// Re-expresses a polynomial over GF(p^{em}) as one over the subfield `target` = GF(p^e).
inline Polynomial<GaloisField> project_to_subfield(const Polynomial<GaloisField>& f, const FieldPtr& target) {
    const GaloisField& big = *f.field();
    if (big.characteristic() != target->characteristic() || big.degree() % target->degree() != 0)
        fail(Errc::FieldMismatch, "target is not a subfield");
    auto ext = extension_field(target, big.degree() / target->degree(), FieldOptions{big.order()});
    if (!(*ext->big() == big)) fail(Errc::FieldMismatch, "polynomial field is not the standard extension");
    std::vector<Elem> out;
    for (Elem c : f.coefficients()) {
        auto p = ext->project(c);
        if (!p) fail(Errc::CoefficientOutsideSubfield, "coefficient is not fixed by the Frobenius map");
        out.push_back(*p);
    }
    return Polynomial<GaloisField>(target, std::move(out));
}

}  // namespace qbch

#endif  // QBCH_EXTENSION_HPP
