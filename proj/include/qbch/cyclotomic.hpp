#ifndef QBCH_CYCLOTOMIC_HPP
#define QBCH_CYCLOTOMIC_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "qbch/error.hpp"
#include "qbch/integer.hpp"

namespace qbch {

/// Residues mod n, sorted ascending, no duplicates.
using ResidueSet = std::vector<std::uint32_t>;

struct CosetContext {
    std::uint32_t n = 1;
    std::uint32_t q = 2;
    std::uint32_t m = 1;

    friend bool operator==(const CosetContext&, const CosetContext&) = default;
};

inline CosetContext make_context(std::uint64_t n, std::uint64_t q) {
    if (n == 0) fail(Errc::InvalidArgument, "length must be positive");
    if (!as_prime_power(q)) fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    if (std::gcd(n, q) != 1)
        fail(Errc::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    if (n > 0xFFFFFFFFull || q > 0xFFFFFFFFull) fail(Errc::InvalidArgument, "parameters too large");
    return {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(q),
            static_cast<std::uint32_t>(multiplicative_order(q, n))};
}

struct Coset {
    std::uint32_t representative = 0;
    ResidueSet elements;

    friend bool operator==(const Coset&, const Coset&) = default;
};

inline Coset coset(std::uint32_t x, const CosetContext& ctx) {
    if (x >= ctx.n) fail(Errc::InvalidArgument, "residue out of range");
    Coset c;
    std::uint64_t y = x;
    do {
        c.elements.push_back(static_cast<std::uint32_t>(y));
        y = y * ctx.q % ctx.n;
    } while (y != x);
    std::sort(c.elements.begin(), c.elements.end());
    c.representative = c.elements.front();
    return c;
}

/// Partition of {0..n-1}, ordered by representative.
inline std::vector<Coset> all_cosets(const CosetContext& ctx) {
    std::vector<Coset> out;
    std::vector<bool> seen(ctx.n, false);
    for (std::uint32_t x = 0; x < ctx.n; ++x) {
        if (seen[x]) continue;
        out.push_back(coset(x, ctx));
        for (std::uint32_t y : out.back().elements) seen[y] = true;
    }
    return out;
}

inline bool contains(const ResidueSet& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }

inline ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool disjoint(const ResidueSet& a, const ResidueSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

inline bool is_subset(const ResidueSet& a, const ResidueSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// {0..n-1} \ s.
inline ResidueSet complement(const ResidueSet& s, std::uint32_t n) {
    ResidueSet out;
    out.reserve(n - s.size());
    auto it = s.begin();
    for (std::uint32_t x = 0; x < n; ++x) {
        if (it != s.end() && *it == x)
            ++it;
        else
            out.push_back(x);
    }
    return out;
}

/// { c * z mod n : z in s }, c given as a signed multiplier.
inline ResidueSet scale(const ResidueSet& s, std::uint32_t n, std::int64_t c) {
    const std::int64_t nn = n;
    const std::uint64_t cc = static_cast<std::uint64_t>(((c % nn) + nn) % nn);
    ResidueSet out;
    out.reserve(s.size());
    for (std::uint32_t z : s) out.push_back(static_cast<std::uint32_t>(cc * z % n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Z^{-1}.
inline ResidueSet negate(const ResidueSet& s, std::uint32_t n) { return scale(s, n, -1); }

/// Z^{-q}.
inline ResidueSet scale_negate_q(const ResidueSet& s, std::uint32_t n, std::uint32_t q) {
    return scale(s, n, -static_cast<std::int64_t>(q % n));
}

inline bool closed_under(const ResidueSet& s, std::uint32_t n, std::uint32_t q) { return scale(s, n, q) == s; }

struct DefiningSet {
    CosetContext ctx;
    std::uint32_t b = 1;
    std::uint32_t delta = 2;
    ResidueSet Z;
};

/// Z = C_b u ... u C_{b+delta-2}, exponents taken mod n.
inline DefiningSet defining_set(const CosetContext& ctx, std::int64_t b, std::uint64_t delta) {
    if (delta < 2 || delta > ctx.n)
        fail(Errc::DeltaOutOfRange,
             "designed distance " + std::to_string(delta) + " outside [2, " + std::to_string(ctx.n) + "]");
    const std::int64_t nn = ctx.n;
    const auto b0 = static_cast<std::uint32_t>(((b % nn) + nn) % nn);
    std::vector<bool> in(ctx.n, false);
    for (std::uint64_t j = 0; j + 1 < delta; ++j) {
        std::uint64_t y = (b0 + j) % ctx.n;
        while (!in[y]) {
            in[y] = true;
            y = y * ctx.q % ctx.n;
        }
    }
    DefiningSet d{ctx, b0, static_cast<std::uint32_t>(delta), {}};
    for (std::uint32_t x = 0; x < ctx.n; ++x)
        if (in[x]) d.Z.push_back(x);
    return d;
}

/// Size guarantee: true when 1 <= x <= n q^{ceil(m/2)} / (q^m - 1); then |C_x| = m.
inline bool coset_size_guarantee(const CosetContext& ctx, std::uint32_t x) {
    if (ctx.m == 1) return true;
    if (x < 1 || x >= ctx.n) return false;
    const BigInt qm = big_pow(ctx.q, ctx.m);
    const bool claimed = BigInt(x) * (qm - 1) <= BigInt(ctx.n) * big_pow(ctx.q, (ctx.m + 1) / 2);
    if (claimed && coset(x, ctx).elements.size() != ctx.m)
        fail(Errc::HypothesisViolated, "coset size lemma failed at x = " + std::to_string(x));
    return claimed;
}

/// Length of the longest cyclic run of consecutive residues in s (n if s is everything).
inline std::uint32_t longest_cyclic_run(const ResidueSet& s, std::uint32_t n) {
    if (s.size() == n) return n;
    if (s.empty()) return 0;
    std::vector<bool> in(n, false);
    for (std::uint32_t z : s) in[z] = true;
    std::uint32_t start = 0;
    while (in[start]) ++start;  // a residue outside s
    std::uint32_t best = 0, run = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const std::uint32_t x = (start + i) % n;
        run = in[x] ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

/// BCH bound of a cyclic code with defining set s: longest run + 1 (n + 1 for the zero code).
inline std::uint32_t run_bound(const ResidueSet& s, std::uint32_t n) {
    return longest_cyclic_run(s, n) + 1;
}

}  // namespace qbch

#endif  // QBCH_CYCLOTOMIC_HPP
