#include <gtest/gtest.h>

#include "qbch/cyclotomic.hpp"
#include "qbch/integer.hpp"

using namespace qbch;

using RS = ResidueSet;

TEST(Integer, MultiplicativeOrder) {
    EXPECT_EQ(multiplicative_order(2, 15), 4u);
    EXPECT_EQ(multiplicative_order(7, 1), 1u);
    EXPECT_EQ(multiplicative_order(4, 15), 2u);
    EXPECT_THROW(multiplicative_order(3, 15), Error);
}

TEST(Integer, Helpers) {
    EXPECT_EQ(isqrt(BigInt(60)), 7);
    EXPECT_EQ(isqrt(BigInt(64)), 8);
    EXPECT_EQ(binomial(26, 3), 2600);
    EXPECT_EQ(floor_of(Rational(7, 2)), 3);
    EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
    EXPECT_EQ(as_prime_power(49)->p, 7u);
    EXPECT_FALSE(as_prime_power(12));
    EXPECT_FALSE(checked_pow(5, 60, 1u << 20));
}

TEST(Coset, Basic) {
    const auto ctx = make_context(15, 2);
    EXPECT_EQ(coset(0, ctx).elements, RS({0}));
    EXPECT_EQ(coset(1, ctx).elements, RS({1, 2, 4, 8}));
    EXPECT_EQ(coset(5, ctx).elements, RS({5, 10}));
}

TEST(Coset, Partition) {
    auto cs = all_cosets(make_context(7, 2));
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0].elements, RS({0}));
    EXPECT_EQ(cs[1].elements, RS({1, 2, 4}));
    EXPECT_EQ(cs[2].elements, RS({3, 5, 6}));
    EXPECT_EQ(all_cosets(make_context(3, 4)).size(), 3u);
    EXPECT_EQ(all_cosets(make_context(1, 2)).size(), 1u);
}

TEST(Coset, ContextErrors) {
    try {
        make_context(15, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotCoprime);
    }
    try {
        make_context(15, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
}

TEST(DefiningSet, Examples) {
    const auto ctx = make_context(15, 2);
    EXPECT_EQ(defining_set(ctx, 1, 3).Z, RS({1, 2, 4, 8}));
    EXPECT_EQ(defining_set(ctx, 1, 5).Z, RS({1, 2, 3, 4, 6, 8, 9, 12}));
    EXPECT_EQ(defining_set(make_context(7, 2), 1, 2).Z, RS({1, 2, 4}));
    EXPECT_EQ(defining_set(ctx, 16, 3).Z, RS({1, 2, 4, 8}));
    EXPECT_EQ(defining_set(ctx, -14, 3).b, 1u);
    for (std::uint64_t bad : {0u, 1u, 16u}) {
        try {
            defining_set(ctx, 1, bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::DeltaOutOfRange);
        }
    }
}

TEST(SetOps, NegateAndScale) {
    EXPECT_EQ(negate({1, 2, 4, 8}, 15), RS({7, 11, 13, 14}));
    EXPECT_EQ(negate({0}, 15), RS({0}));
    EXPECT_EQ(negate({}, 15), RS({}));
    EXPECT_EQ(scale_negate_q({1, 2, 3, 4, 8, 12}, 15, 2), RS({6, 7, 9, 11, 13, 14}));
    EXPECT_EQ(scale_negate_q({0}, 15, 2), RS({0}));
    EXPECT_EQ(scale_negate_q({5}, 15, 2), RS({5}));
    EXPECT_TRUE(closed_under({1, 2, 4, 8}, 15, 2));
    EXPECT_FALSE(closed_under({1, 2}, 15, 2));
    EXPECT_EQ(complement({0, 2}, 4), RS({1, 3}));
    EXPECT_TRUE(is_subset({1}, {1, 2}));
    EXPECT_TRUE(disjoint({1}, {2}));
    EXPECT_EQ(set_union({1, 3}, {2, 3}), RS({1, 2, 3}));
    EXPECT_EQ(set_intersection({1, 3}, {2, 3}), RS({3}));
}

TEST(CosetSize, Examples) {
    const auto ctx = make_context(15, 2);
    EXPECT_TRUE(coset_size_guarantee(ctx, 3));
    EXPECT_EQ(coset(3, ctx).elements.size(), 4u);
    EXPECT_FALSE(coset_size_guarantee(ctx, 5));
}

TEST(CosetSize, LemmaHoldsOnGrid) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t n = 2; n <= 63; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto ctx = make_context(n, q);
            if (!(big_pow(q, ctx.m / 2) < n)) continue;
            for (std::uint32_t x = 1; x < n; ++x)
                if (coset_size_guarantee(ctx, x)) EXPECT_EQ(coset(x, ctx).elements.size(), ctx.m) << n << " " << q;
        }
}

TEST(Runs, CyclicRuns) {
    EXPECT_EQ(longest_cyclic_run({1, 2, 4, 8}, 15), 2u);
    EXPECT_EQ(longest_cyclic_run({0, 1, 14}, 15), 3u);
    EXPECT_EQ(run_bound({}, 5), 1u);
    EXPECT_EQ(run_bound({0, 1, 2, 3, 4}, 5), 6u);
}
