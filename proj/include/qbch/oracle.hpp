#ifndef QBCH_ORACLE_HPP
#define QBCH_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qbch/bch.hpp"
#include "qbch/cyclotomic.hpp"
#include "qbch/duality.hpp"
#include "qbch/error.hpp"
#include "qbch/extension.hpp"
#include "qbch/galois_field.hpp"
#include "qbch/integer.hpp"
#include "qbch/matrix.hpp"
#include "qbch/parallel.hpp"

namespace qbch {

struct OracleBudget {
    std::uint64_t max_message_enumeration = std::uint64_t{1} << 22;
    unsigned max_weight = 6;
    /// Zero means unlimited.
    std::chrono::milliseconds time_budget{0};
};

enum class DistanceStatus { Exact, NoneBelow, Inconclusive };

constexpr std::string_view to_string(DistanceStatus s) noexcept {
    switch (s) {
        case DistanceStatus::Exact: return "exact";
        case DistanceStatus::NoneBelow: return "none_below";
        case DistanceStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

/// Exact: `value` is the minimum weight (n + 1 for the zero code).
/// NoneBelow: no nonzero codeword of weight <= `value`.
struct DistanceResult {
    DistanceStatus status = DistanceStatus::Inconclusive;
    std::uint64_t value = 0;
    std::uint64_t examined = 0;
    std::string reason;

    bool exact() const noexcept { return status == DistanceStatus::Exact; }
};

namespace detail {

class Deadline {
   public:
    explicit Deadline(std::chrono::milliseconds budget)
        : active_(budget.count() > 0), end_(std::chrono::steady_clock::now() + budget) {}
    bool expired() const { return active_ && std::chrono::steady_clock::now() > end_; }

   private:
    bool active_;
    std::chrono::steady_clock::time_point end_;
};

// Characteristic 2: one bit plane per binary digit, addition is XOR.
struct Char2Lanes {
    unsigned planes;
    std::size_t wpp;

    Char2Lanes(unsigned e, std::size_t n) : planes(e), wpp((n + 63) / 64) {}
    std::size_t words() const noexcept { return planes * wpp; }

    void pack(const GaloisField&, std::span<const Elem> v, std::uint64_t* out) const {
        std::fill(out, out + words(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (unsigned d = 0; d < planes; ++d)
                if ((v[i] >> d) & 1u) out[d * wpp + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void add(std::uint64_t* a, const std::uint64_t* b) const noexcept {
        for (std::size_t w = 0; w < words(); ++w) a[w] ^= b[w];
    }
    unsigned weight(const std::uint64_t* a) const noexcept {
        unsigned c = 0;
        for (std::size_t w = 0; w < wpp; ++w) {
            std::uint64_t m = 0;
            for (unsigned d = 0; d < planes; ++d) m |= a[d * wpp + w];
            c += static_cast<unsigned>(std::popcount(m));
        }
        return c;
    }
};

// Odd characteristic: each symbol digit sits in a lane of LB bits; lanes add without
// carries and are reduced mod p branch-free.
template <unsigned LB>
struct OddLanes {
    static constexpr unsigned per_word = 64 / LB;
    unsigned planes;
    std::size_t wpp;
    std::uint64_t p;
    std::uint64_t bias;
    std::uint64_t high;
    std::uint64_t low;

    static constexpr std::uint64_t replicate(std::uint64_t v) {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < per_word; ++i) r |= v << (i * LB);
        return r;
    }

    OddLanes(std::uint32_t prime, unsigned e, std::size_t n)
        : planes(e),
          wpp((n + per_word - 1) / per_word),
          p(prime),
          bias(replicate((std::uint64_t{1} << (LB - 1)) - prime)),
          high(replicate(std::uint64_t{1} << (LB - 1))),
          low(replicate(1)) {}

    std::size_t words() const noexcept { return planes * wpp; }

    void pack(const GaloisField& f, std::span<const Elem> v, std::uint64_t* out) const {
        std::fill(out, out + words(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto d = f.digits(v[i]);
            for (unsigned j = 0; j < planes; ++j)
                out[j * wpp + i / per_word] |= std::uint64_t{d[j]} << ((i % per_word) * LB);
        }
    }
    void add(std::uint64_t* a, const std::uint64_t* b) const noexcept {
        for (std::size_t w = 0; w < words(); ++w) {
            const std::uint64_t s = a[w] + b[w];
            const std::uint64_t over = ((s + bias) & high) >> (LB - 1);
            a[w] = s - over * p;
        }
    }
    unsigned weight(const std::uint64_t* a) const noexcept {
        unsigned c = 0;
        for (std::size_t w = 0; w < wpp; ++w) {
            std::uint64_t m = 0;
            for (unsigned d = 0; d < planes; ++d) m |= a[d * wpp + w];
            for (unsigned sh = LB / 2; sh >= 1; sh /= 2) m |= m >> sh;
            c += static_cast<unsigned>(std::popcount(m & low));
        }
        return c;
    }
};

// Minimum weight over the nonzero span of `basis`, one representative per line
// (top nonzero coefficient fixed to 1), lower coefficients in reflected q-ary Gray order.
template <class Lanes>
DistanceResult min_weight_span(const Lanes& lanes, const GaloisField& f, const Matrix& basis, const Deadline& deadline) {
    const std::size_t k = basis.rows;
    const std::uint32_t q = f.order();
    const std::size_t W = lanes.words();
    std::vector<std::uint64_t> rows(k * W);
    std::vector<std::uint64_t> up(k * (q - 1) * W);
    std::vector<std::uint64_t> down(k * (q - 1) * W);
    std::vector<Elem> scaled(basis.cols);
    for (std::size_t j = 0; j < k; ++j) {
        lanes.pack(f, basis.row(j), &rows[j * W]);
        for (std::uint32_t t = 0; t + 1 < q; ++t) {
            const Elem step = f.sub(t + 1, t);
            for (std::size_t i = 0; i < basis.cols; ++i) scaled[i] = f.mul(step, basis.at(j, i));
            lanes.pack(f, scaled, &up[(j * (q - 1) + t) * W]);
            for (auto& e : scaled) e = f.neg(e);
            lanes.pack(f, scaled, &down[(j * (q - 1) + t) * W]);
        }
    }

    DistanceResult res;
    res.status = DistanceStatus::Exact;
    res.value = basis.cols + 1;
    std::vector<std::uint64_t> cur(W);
    std::vector<std::uint32_t> counter, digit;
    std::vector<std::int8_t> dir;
    std::uint64_t steps = 0;
    for (std::size_t top = 0; top < k; ++top) {
        std::copy(&rows[top * W], &rows[top * W] + W, cur.begin());
        res.value = std::min<std::uint64_t>(res.value, lanes.weight(cur.data()));
        ++res.examined;
        counter.assign(top, 0);
        digit.assign(top, 0);
        dir.assign(top, 1);
        for (;;) {
            std::size_t j = 0;
            while (j < top && counter[j] == q - 1) counter[j++] = 0;
            if (j == top) break;
            ++counter[j];
            if (dir[j] > 0) {
                lanes.add(cur.data(), &up[(j * (q - 1) + digit[j]) * W]);
                if (++digit[j] == q - 1) dir[j] = -1;
            } else {
                --digit[j];
                lanes.add(cur.data(), &down[(j * (q - 1) + digit[j]) * W]);
                if (digit[j] == 0) dir[j] = 1;
            }
            const unsigned w = lanes.weight(cur.data());
            if (w < res.value) res.value = w;
            ++res.examined;
            if ((++steps & 0x3FFFF) == 0 && deadline.expired()) {
                res.status = DistanceStatus::Inconclusive;
                res.reason = "time budget exceeded";
                return res;
            }
        }
    }
    return res;
}

inline DistanceResult min_weight_span(const GaloisField& f, const Matrix& basis, const Deadline& deadline) {
    const std::uint32_t p = f.characteristic();
    const unsigned e = f.degree();
    const std::size_t n = basis.cols;
    if (p == 2) return min_weight_span(Char2Lanes(e, n), f, basis, deadline);
    if (p <= 7) return min_weight_span(OddLanes<4>(p, e, n), f, basis, deadline);
    if (p <= 127) return min_weight_span(OddLanes<8>(p, e, n), f, basis, deadline);
    if (p <= 32767) return min_weight_span(OddLanes<16>(p, e, n), f, basis, deadline);
    return min_weight_span(OddLanes<32>(p, e, n), f, basis, deadline);
}

inline Matrix row_basis(const FieldPtr& field, const Matrix& m) {
    RowSpace rs(field, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) rs.insert(m.row(i));
    return rs.basis();
}

}  // namespace detail

/// Minimum weight of the row space of G by enumerating all q^k codewords.
inline DistanceResult min_distance_exhaustive(const FieldPtr& field, const Matrix& G, const OracleBudget& budget = {}) {
    const Matrix basis = detail::row_basis(field, G);
    if (!checked_pow(field->order(), basis.rows, budget.max_message_enumeration)) {
        DistanceResult r;
        r.reason = "q^k = " + std::to_string(field->order()) + "^" + std::to_string(basis.rows) +
                   " exceeds the enumeration budget";
        return r;
    }
    if (basis.rows == 0) return {DistanceStatus::Exact, G.cols + 1, 0, "zero code"};
    return detail::min_weight_span(*field, basis, detail::Deadline(budget.time_budget));
}

/// Smallest weight <= w_max of a nonzero x with H x^T = 0, by support enumeration in
/// colex order with the first coefficient normalized to 1.
inline DistanceResult min_distance_bounded(const FieldPtr& field, const Matrix& H, unsigned w_max,
                                           const OracleBudget& budget = {}) {
    const GaloisField& f = *field;
    const std::size_t n = H.cols;
    const std::size_t r = H.rows;
    const std::uint32_t q = f.order();
    const detail::Deadline deadline(budget.time_budget);
    w_max = static_cast<unsigned>(std::min<std::size_t>(w_max, n));

    BigInt work = 0;
    for (unsigned w = 1; w <= w_max; ++w) work += binomial(n, w) * big_pow(q - 1, w - 1);
    DistanceResult res;
    if (work > BigInt(budget.max_message_enumeration)) {
        res.reason = "support enumeration up to weight " + std::to_string(w_max) + " exceeds the budget";
        return res;
    }

    // scaled[(i * q + c) * r ...] = c * column i
    std::vector<Elem> scaled(n * q * r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t c = 0; c < q; ++c)
            for (std::size_t j = 0; j < r; ++j) scaled[(i * q + c) * r + j] = f.mul(c, H.at(j, i));
    auto column = [&](std::size_t i, Elem c) { return &scaled[(i * q + c) * r]; };

    std::vector<Elem> syn(r);
    std::uint64_t steps = 0;
    for (unsigned w = 1; w <= w_max; ++w) {
        std::vector<std::size_t> idx(w);
        for (unsigned i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            std::vector<Elem> coef(w, 1);
            std::fill(syn.begin(), syn.end(), 0);
            for (unsigned i = 0; i < w; ++i) {
                const Elem* col = column(idx[i], 1);
                for (std::size_t j = 0; j < r; ++j) syn[j] = f.add(syn[j], col[j]);
            }
            for (;;) {
                ++res.examined;
                if (std::all_of(syn.begin(), syn.end(), [](Elem e) { return e == 0; })) {
                    res.status = DistanceStatus::Exact;
                    res.value = w;
                    return res;
                }
                // odometer over coefficients of positions 1..w-1
                unsigned pos = 1;
                while (pos < w && coef[pos] == q - 1) {
                    const Elem* from = column(idx[pos], q - 1);
                    const Elem* to = column(idx[pos], 1);
                    for (std::size_t j = 0; j < r; ++j) syn[j] = f.add(f.sub(syn[j], from[j]), to[j]);
                    coef[pos++] = 1;
                }
                if (pos >= w) break;
                const Elem* from = column(idx[pos], coef[pos]);
                const Elem* to = column(idx[pos], coef[pos] + 1);
                for (std::size_t j = 0; j < r; ++j) syn[j] = f.add(f.sub(syn[j], from[j]), to[j]);
                ++coef[pos];
            }
            if ((++steps & 0xFFF) == 0 && deadline.expired()) {
                res.reason = "time budget exceeded";
                return res;
            }
            // next combination in colex order
            unsigned i = 0;
            while (i + 1 < w && idx[i] + 1 == idx[i + 1]) ++i;
            if (idx[i] + 1 >= (i + 1 < w ? idx[i + 1] : n)) break;
            ++idx[i];
            for (unsigned t = 0; t < i; ++t) idx[t] = t;
        }
    }
    res.status = DistanceStatus::NoneBelow;
    res.value = w_max;
    return res;
}

/// Coordinates over GF(q) of the powers alpha^t, t < n, of a primitive n-th root of unity.
class PowerCoordinates {
   public:
    PowerCoordinates(std::uint32_t n, std::uint32_t q, const FieldOptions& options = {})
        : n_(n), field_(field_of_order(q, options)) {
        const AnyRootOfUnity root = primitive_root_of_unity(field_, n, options);
        std::visit(
            [&](const auto& r) {
                m_ = r.ext->degree();
                coords_.reserve(n);
                for (std::uint32_t t = 0; t < n; ++t) {
                    const auto& c = r.ext->coordinates(r.powers[t]);
                    coords_.emplace_back(c.begin(), c.end());
                }
            },
            root);
    }

    std::uint32_t n() const noexcept { return n_; }
    unsigned m() const noexcept { return m_; }
    const FieldPtr& field() const noexcept { return field_; }

    /// Row s of the GF(q) expansion of (alpha^{j i})_{i < n}.
    std::vector<Elem> row(std::int64_t j, unsigned s) const {
        const std::int64_t nn = n_;
        const auto jj = static_cast<std::uint64_t>(((j % nn) + nn) % nn);
        std::vector<Elem> out(n_);
        for (std::uint32_t i = 0; i < n_; ++i) out[i] = coords_[jj * i % n_][s];
        return out;
    }

   private:
    std::uint32_t n_;
    FieldPtr field_;
    unsigned m_ = 0;
    std::vector<std::vector<Elem>> coords_;
};

/// The code { c in GF(q)^n : sum_i c_i alpha^{j i} = 0 for j = b .. b+delta-2 } built
/// row block by row block as delta grows, with incremental dual-containment tracking.
class DefinitionalScanner {
   public:
    DefinitionalScanner(std::shared_ptr<const PowerCoordinates> powers, std::int64_t b)
        : powers_(std::move(powers)), b_(b), rows_(powers_->field(), powers_->n()) {
        const auto pp = as_prime_power(powers_->field()->order());
        if (pp->e % 2 == 0) conj_power_ = to_u64(big_pow(pp->p, pp->e / 2));
    }

    DefinitionalScanner(std::uint32_t n, std::uint32_t q, std::int64_t b, const FieldOptions& options = {})
        : DefinitionalScanner(std::make_shared<const PowerCoordinates>(n, q, options), b) {}

    /// Designed distance currently described (1 before any rows).
    std::uint32_t delta() const noexcept { return delta_; }
    std::uint32_t n() const noexcept { return powers_->n(); }
    const FieldPtr& field_ptr() const noexcept { return powers_->field(); }
    std::size_t rank() const noexcept { return rows_.rank(); }
    std::uint32_t dimension() const noexcept { return static_cast<std::uint32_t>(n() - rows_.rank()); }
    bool euclidean_contained() const noexcept { return euclid_ok_; }
    bool hermitian_contained() const {
        if (!conj_power_) fail(Errc::InvalidArgument, "Hermitian containment needs a square alphabet");
        return herm_ok_;
    }

    /// Adds the constraint for exponent b + delta - 1, moving to designed distance delta + 1.
    void extend() {
        const std::int64_t j = b_ + static_cast<std::int64_t>(delta_) - 1;
        for (unsigned s = 0; s < powers_->m(); ++s) absorb(powers_->row(j, s));
        ++delta_;
    }

    void extend_to(std::uint32_t delta) {
        while (delta_ < delta) extend();
    }

    Matrix parity_check() const { return rows_.basis(); }
    Matrix generator() const { return rows_.null_space(); }

   private:
    void absorb(std::vector<Elem> v) {
        if (!rows_.insert(v)) return;
        const GaloisField& f = *powers_->field();
        std::vector<Elem> conj;
        if (conj_power_) {
            conj = v;
            for (Elem& e : conj) e = f.pow_u(e, *conj_power_);
        }
        for (std::size_t i = 0; i < indep_.size(); ++i) {
            if (euclid_ok_ && dot(f, indep_[i], v) != 0) euclid_ok_ = false;
            if (conj_power_ && herm_ok_ && dot(f, indep_[i], conj) != 0) herm_ok_ = false;
        }
        if (euclid_ok_ && dot(f, v, v) != 0) euclid_ok_ = false;
        if (conj_power_ && herm_ok_ && dot(f, v, conj) != 0) herm_ok_ = false;
        indep_.push_back(std::move(v));
    }

    std::shared_ptr<const PowerCoordinates> powers_;
    std::int64_t b_;
    std::uint32_t delta_ = 1;
    RowSpace rows_;
    std::vector<std::vector<Elem>> indep_;
    std::optional<std::uint64_t> conj_power_;
    bool euclid_ok_ = true;
    bool herm_ok_ = true;
};

/// Coset-free parity-check matrix (RREF, rank n - k) of BCH(n, q; b, delta).
inline Matrix definitional_parity_check(const BchCode& code, const FieldOptions& options = {}) {
    DefinitionalScanner s(code.n(), code.q(), code.b, options);
    s.extend_to(code.delta);
    return s.parity_check();
}

/// C^perp in C via H H^T = 0, H a basis of C^perp from the definition.
inline bool euclidean_containment_matrix(const BchCode& code, const FieldOptions& options = {}) {
    const Matrix H = definitional_parity_check(code, options);
    return multiply_transpose(*field_of_order(code.q()), H, H).is_zero();
}

/// C^{perp_h} in C via H (H^{(r)})^T = 0 for a code over GF(r^2).
inline bool hermitian_containment_matrix(const BchCode& code, const FieldOptions& options = {}) {
    const std::uint32_t r = base_alphabet(code.q());
    const Matrix H = definitional_parity_check(code, options);
    const auto& f = *field_of_order(code.q());
    return multiply_transpose(f, H, conjugate(f, H, r)).is_zero();
}

/// Minimum weight of C^perp by enumerating its q^{n-k} codewords; n + 1 when C^perp = 0.
inline DistanceResult dual_distance_exhaustive(const BchCode& code, const OracleBudget& budget = {},
                                               const FieldOptions& options = {}) {
    return min_distance_exhaustive(field_of_order(code.q()), definitional_parity_check(code, options), budget);
}

/// Minimum distance of the code itself from its coset-free generator matrix.
inline DistanceResult code_distance_exhaustive(const BchCode& code, const OracleBudget& budget = {},
                                               const FieldOptions& options = {}) {
    DefinitionalScanner s(code.n(), code.q(), code.b, options);
    s.extend_to(code.delta);
    return min_distance_exhaustive(field_of_order(code.q()), s.generator(), budget);
}

/// Weight-limited search on the coset-free parity-check matrix.
inline DistanceResult code_distance_bounded(const BchCode& code, unsigned w_max, const OracleBudget& budget = {},
                                            const FieldOptions& options = {}) {
    return min_distance_bounded(field_of_order(code.q()), definitional_parity_check(code, options), w_max, budget);
}

// ---------------------------------------------------------------------------
// Grid verification

enum Check : unsigned {
    CheckEuclidean = 1u << 0,
    CheckHermitian = 1u << 1,
    CheckDimension = 1u << 2,
    CheckBchBound = 1u << 3,
    CheckFarr = 1u << 4,
    CheckDualDistance = 1u << 5,
    CheckAll = (1u << 6) - 1,
};

inline constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {CheckEuclidean, "euclidean"}, {CheckHermitian, "hermitian"}, {CheckDimension, "dimension"},
    {CheckBchBound, "bch_bound"},  {CheckFarr, "farr"},           {CheckDualDistance, "dual_distance"},
};

inline std::string_view check_name(Check c) {
    for (const auto& [k, v] : kCheckNames)
        if (k == c) return v;
    return "unknown";
}

inline unsigned parse_check(std::string_view name) {
    if (name == "all") return CheckAll;
    for (const auto& [k, v] : kCheckNames)
        if (v == name) return k;
    fail(Errc::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

struct GridSpec {
    std::vector<std::uint32_t> qs{2};
    std::uint32_t n_min = 1;
    std::uint32_t n_max = 15;
    std::vector<std::int64_t> bs{1};
    std::uint32_t delta_min = 2;
    /// Zero means up to n.
    std::uint32_t delta_max = 0;
};

enum class FindingKind { Mismatch, Inconclusive };

struct Finding {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::int64_t b = 0;
    std::uint32_t delta = 0;
    std::string check;
    FindingKind kind = FindingKind::Mismatch;
    std::string detail;

    auto key() const { return std::tie(q, n, b, delta, check); }
};

struct VerifyReport {
    std::vector<Finding> mismatches;
    std::vector<Finding> inconclusive;
    std::uint64_t instances = 0;
    std::uint64_t comparisons = 0;

    bool ok() const noexcept { return mismatches.empty(); }
};

namespace detail {

struct CellResult {
    std::vector<Finding> findings;
    std::uint64_t instances = 0;
    std::uint64_t comparisons = 0;
};

struct Cell {
    std::uint32_t q;
    std::uint32_t n;
    std::int64_t b;
};

inline void add_finding(CellResult& out, const Cell& c, std::uint32_t delta, Check check, FindingKind kind,
                        std::string detail) {
    out.findings.push_back({c.q, c.n, c.b, delta, std::string(check_name(check)), kind, std::move(detail)});
}

inline std::uint64_t min_distance_or(const DistanceResult& r, std::uint64_t fallback) {
    return r.exact() ? r.value : fallback;
}

inline CellResult verify_cell(const Cell& c, const GridSpec& spec, unsigned checks, const OracleBudget& budget) {
    CellResult out;
    const std::uint32_t dmax = spec.delta_max == 0 ? c.n : std::min(spec.delta_max, c.n);
    const std::uint32_t dmin = std::max<std::uint32_t>(spec.delta_min, 2);
    if (dmin > dmax) return out;

    const unsigned classical = checks & ~static_cast<unsigned>(CheckHermitian);
    if (classical) {
        const auto ctx = make_context(c.n, c.q);
        DefinitionalScanner scan(c.n, c.q, c.b);
        const bool narrow = ((c.b % c.n) + c.n) % c.n == 1 % c.n;
        const auto dim_limit = narrow ? dimension_formula_limit(c.n, c.q) : std::nullopt;
        const std::uint64_t kappa_floor = ctx.m >= 2 ? to_u64(floor_of(kappa(c.n, c.q))) : 0;
        for (std::uint32_t delta = 2; delta <= dmax; ++delta) {
            scan.extend_to(delta);
            if (delta < dmin) continue;
            const auto code = construct(c.n, c.q, c.b, delta);
            ++out.instances;
            if (checks & CheckEuclidean) {
                ++out.comparisons;
                const bool coset = euclidean_dual_containing(code.Z, c.n);
                if (coset != scan.euclidean_contained())
                    add_finding(out, c, delta, CheckEuclidean, FindingKind::Mismatch,
                                std::string("coset=") + (coset ? "true" : "false") +
                                    " matrix=" + (scan.euclidean_contained() ? "true" : "false"));
            }
            if (checks & CheckDimension) {
                ++out.comparisons;
                if (code.k != scan.dimension())
                    add_finding(out, c, delta, CheckDimension, FindingKind::Mismatch,
                                "n-|Z|=" + std::to_string(code.k) + " rank=" + std::to_string(scan.dimension()));
                if (dim_limit && delta <= *dim_limit) {
                    ++out.comparisons;
                    const auto k = dimension_formula(c.n, c.q, delta);
                    if (k != code.k)
                        add_finding(out, c, delta, CheckDimension, FindingKind::Mismatch,
                                    "formula=" + std::to_string(k) + " n-|Z|=" + std::to_string(code.k));
                }
            }
            if (checks & CheckBchBound) {
                ++out.comparisons;
                auto d = min_distance_exhaustive(scan.field_ptr(), scan.generator(), budget);
                if (!d.exact()) d = min_distance_bounded(scan.field_ptr(), scan.parity_check(), delta - 1, budget);
                if (d.status == DistanceStatus::Inconclusive)
                    add_finding(out, c, delta, CheckBchBound, FindingKind::Inconclusive, d.reason);
                else if (d.exact() && d.value < delta)
                    add_finding(out, c, delta, CheckBchBound, FindingKind::Mismatch,
                                "oracle distance " + std::to_string(d.value) + " < delta");
            }
            if ((checks & CheckFarr) && dim_limit && delta <= *dim_limit) {
                const auto v = farr_verdict(c.n, c.q, delta);
                if (v.forced_exact) {
                    ++out.comparisons;
                    auto d = min_distance_exhaustive(scan.field_ptr(), scan.generator(), budget);
                    if (!d.exact())
                        d = min_distance_bounded(scan.field_ptr(), scan.parity_check(),
                                                 static_cast<unsigned>(*v.forced_exact), budget);
                    if (!d.exact())
                        add_finding(out, c, delta, CheckFarr, FindingKind::Inconclusive,
                                    d.reason.empty() ? "no codeword up to the forced weight" : d.reason);
                    else if (d.value != *v.forced_exact)
                        add_finding(out, c, delta, CheckFarr, FindingKind::Mismatch,
                                    "forced_exact=" + std::to_string(*v.forced_exact) +
                                        " oracle=" + std::to_string(d.value));
                }
            }
            if ((checks & CheckDualDistance) && narrow && ctx.m >= 2 && delta <= kappa_floor) {
                ++out.comparisons;
                const auto d = min_distance_exhaustive(scan.field_ptr(), scan.parity_check(), budget);
                if (!d.exact())
                    add_finding(out, c, delta, CheckDualDistance, FindingKind::Inconclusive, d.reason);
                else if (d.value < kappa_floor + 1)
                    add_finding(out, c, delta, CheckDualDistance, FindingKind::Mismatch,
                                "dual distance " + std::to_string(d.value) + " < " + std::to_string(kappa_floor + 1));
            }
        }
    }
    if (checks & CheckHermitian) {
        const std::uint32_t q2 = c.q * c.q;
        DefinitionalScanner scan(c.n, q2, c.b);
        for (std::uint32_t delta = 2; delta <= dmax; ++delta) {
            scan.extend_to(delta);
            if (delta < dmin) continue;
            const auto code = construct(c.n, q2, c.b, delta);
            ++out.comparisons;
            if (!(checks & ~static_cast<unsigned>(CheckHermitian))) ++out.instances;
            const bool coset = hermitian_dual_containing(code.Z, c.n, c.q);
            if (coset != scan.hermitian_contained())
                add_finding(out, c, delta, CheckHermitian, FindingKind::Mismatch,
                            std::string("coset=") + (coset ? "true" : "false") +
                                " matrix=" + (scan.hermitian_contained() ? "true" : "false"));
        }
    }
    return out;
}

}  // namespace detail

/// Runs the selected oracle checks on every (q, n, b, delta) of the grid with gcd(n, q) = 1.
/// Findings are sorted by (q, n, b, delta, check) whatever the number of jobs.
inline VerifyReport verify_grid(const GridSpec& spec, unsigned checks, const OracleBudget& budget = {},
                                unsigned jobs = 1) {
    std::vector<detail::Cell> cells;
    for (std::uint32_t q : spec.qs) {
        if (!as_prime_power(q)) fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
        for (std::uint32_t n = std::max<std::uint32_t>(spec.n_min, 2); n <= spec.n_max; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (std::int64_t b : spec.bs) cells.push_back({q, n, b});
        }
    }
    auto results = parallel_map(cells.size(), jobs,
                                [&](std::size_t i) { return detail::verify_cell(cells[i], spec, checks, budget); });
    VerifyReport report;
    for (auto& r : results) {
        report.instances += r.instances;
        report.comparisons += r.comparisons;
        for (auto& f : r.findings)
            (f.kind == FindingKind::Mismatch ? report.mismatches : report.inconclusive).push_back(std::move(f));
    }
    auto by_key = [](const Finding& a, const Finding& b) { return a.key() < b.key(); };
    std::stable_sort(report.mismatches.begin(), report.mismatches.end(), by_key);
    std::stable_sort(report.inconclusive.begin(), report.inconclusive.end(), by_key);
    return report;
}

}  // namespace qbch

#endif  // QBCH_ORACLE_HPP
