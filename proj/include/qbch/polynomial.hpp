#ifndef QBCH_POLYNOMIAL_HPP
#define QBCH_POLYNOMIAL_HPP

#include <concepts>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "qbch/error.hpp"

namespace qbch {

template <class F>
concept FieldLike = requires(const F& f, const typename F::value_type& a) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.neg(a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
};

/// Univariate polynomial over a field, lowest degree first, no trailing zeros.
template <FieldLike F>
class Polynomial {
   public:
    using field_type = F;
    using value_type = typename F::value_type;
    using field_ptr = std::shared_ptr<const F>;

    explicit Polynomial(field_ptr field, std::vector<value_type> coefficients = {})
        : field_(std::move(field)), c_(std::move(coefficients)) {
        if (!field_) fail(Errc::InvalidArgument, "null field");
        normalize();
    }

    static Polynomial constant(field_ptr field, value_type c) { return Polynomial(std::move(field), {std::move(c)}); }
    static Polynomial one(field_ptr field) {
        auto c = field->one();
        return constant(std::move(field), std::move(c));
    }
    static Polynomial monomial(field_ptr field, value_type c, std::size_t degree) {
        std::vector<value_type> v(degree + 1, field->zero());
        v[degree] = std::move(c);
        return Polynomial(std::move(field), std::move(v));
    }

    const field_ptr& field() const noexcept { return field_; }
    const std::vector<value_type>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    value_type operator[](std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    const value_type& leading() const {
        if (c_.empty()) fail(Errc::InvalidArgument, "zero polynomial has no leading coefficient");
        return c_.back();
    }

    Polynomial operator-() const {
        std::vector<value_type> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(field_->neg(a));
        return Polynomial(field_, std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        const auto& f = *a.field_;
        std::vector<value_type> out(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
        return Polynomial(a.field_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        const auto& f = *a.field_;
        std::vector<value_type> out(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Polynomial(a.field_, std::move(out));
    }

    Polynomial scaled(const value_type& s) const {
        std::vector<value_type> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(field_->mul(a, s));
        return Polynomial(field_, std::move(out));
    }

    /// (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        check_same(*this, d);
        if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        const auto& f = *field_;
        std::vector<value_type> r = c_;
        if (r.size() < d.c_.size()) return {Polynomial(field_), *this};
        std::vector<value_type> quot(r.size() - d.c_.size() + 1, f.zero());
        const value_type lead_inv = f.inv(d.c_.back());
        for (std::size_t i = quot.size(); i-- > 0;) {
            const value_type t = f.mul(r[i + d.c_.size() - 1], lead_inv);
            quot[i] = t;
            if (f.is_zero(t)) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] = f.sub(r[i + j], f.mul(t, d.c_[j]));
        }
        r.resize(d.c_.size() - 1);
        return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(r))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv(c_.back()));
    }

    value_type evaluate(const value_type& x) const {
        const auto& f = *field_;
        value_type acc = f.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_field(a, b) && a.c_ == b.c_;
    }

   private:
    void normalize() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }

    static bool same_field(const Polynomial& a, const Polynomial& b) {
        if (a.field_ == b.field_) return true;
        if constexpr (std::equality_comparable<F>)
            return *a.field_ == *b.field_;
        else
            return false;
    }
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!same_field(a, b)) fail(Errc::FieldMismatch, "polynomials over different fields");
    }

    field_ptr field_;
    std::vector<value_type> c_;
};

/// Monic greatest common divisor.
template <FieldLike F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// x^n - 1.
template <FieldLike F>
Polynomial<F> x_pow_minus_one(std::shared_ptr<const F> field, std::size_t n) {
    std::vector<typename F::value_type> c(n + 1, field->zero());
    c[0] = field->neg(field->one());
    c[n] = field->add(c[n], field->one());
    return Polynomial<F>(std::move(field), std::move(c));
}

}  // namespace qbch

#endif  // QBCH_POLYNOMIAL_HPP
