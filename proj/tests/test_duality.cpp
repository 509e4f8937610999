#include <gtest/gtest.h>

#include "qbch/bch.hpp"
#include "qbch/duality.hpp"

using namespace qbch;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST(Containment, Euclidean) {
    EXPECT_TRUE(euclidean_dual_containing({1, 2, 4, 8}, 15));
    EXPECT_FALSE(euclidean_dual_containing({0, 1}, 15));
    EXPECT_FALSE(euclidean_dual_containing({1, 2, 3, 4, 6, 8, 9, 12}, 15));
}

TEST(Containment, Hermitian) {
    EXPECT_TRUE(hermitian_dual_containing({1, 2, 3, 4, 8, 12}, 15, 2));
    EXPECT_FALSE(hermitian_dual_containing({1, 2, 3, 4, 5, 8, 12}, 15, 2));
    EXPECT_FALSE(hermitian_dual_containing({0}, 15, 2));
}

TEST(Kappa, Values) {
    EXPECT_EQ(kappa(15, 2), Rational(3));
    EXPECT_EQ(kappa(31, 2), Rational(7));
    EXPECT_EQ(kappa(26, 3), Rational(7));
}

TEST(Euclid, OrderOne) {
    EXPECT_EQ(euclid_order_one_threshold(5, 11), 3u);
    EXPECT_EQ(euclid_order_one_threshold(1, 7), 1u);
    EXPECT_EQ(euclid_order_one_threshold(6, 7), 3u);
    EXPECT_EQ(code_of([] { euclid_order_one_threshold(7, 2); }), Errc::HypothesisViolated);
}

TEST(Euclid, Necessary) {
    EXPECT_EQ(euclid_necessary(15, 2), 7u);
    EXPECT_EQ(euclid_necessary(9, 3), 9u);
    EXPECT_EQ(euclid_necessary(63, 2), 15u);
}

TEST(Euclid, Exact) {
    EXPECT_EQ(euclid_exact_threshold(15, 2), 3u);
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (unsigned m = 2; m <= 4; ++m) EXPECT_TRUE(euclid_exact_threshold(to_u64(big_pow(q, m)) - 1, q));
    EXPECT_FALSE(euclid_exact_threshold(21, 2));
}

TEST(Euclid, NonNarrow) {
    EXPECT_EQ(nonnarrow_euclid_bound(15, 2), 3u);
    EXPECT_EQ(nonnarrow_euclid_bound(31, 2), 14u);
    EXPECT_EQ(nonnarrow_euclid_bound(63, 2), 7u);
    EXPECT_EQ(code_of([] { nonnarrow_euclid_bound(17, 2); }), Errc::HypothesisViolated);
}

TEST(Hermitian, Sufficient) {
    EXPECT_EQ(hermitian_sufficient(15, 2), 5u);
    EXPECT_EQ(hermitian_sufficient(63, 2), 7u);
    EXPECT_EQ(hermitian_sufficient(5, 2), 1u);
}

TEST(Hermitian, NonNarrowSpecial) {
    EXPECT_EQ(hermitian_nonnarrow_special(63, 2), 7u);
    EXPECT_EQ(code_of([] { hermitian_nonnarrow_special(15, 2); }), Errc::HypothesisViolated);
    EXPECT_EQ(code_of([] { hermitian_nonnarrow_special(7, 2); }), Errc::HypothesisViolated);
}

TEST(Hermitian, NonNarrowSpecialHoldsForEveryOffset) {
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t n = 2; n < 90; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const unsigned m = hermitian_order(n, q);
            if (m % 2 == 0 || BigInt(n) % (big_pow(q, m) + 1) != 0) continue;
            const auto dmax = hermitian_nonnarrow_special(n, q);
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint64_t delta = dmax + 1; delta <= n; ++delta)
                    EXPECT_FALSE(hermitian_dual_containing(construct(n, q * q, b, delta).Z, n, q))
                        << n << " " << q << " " << b << " " << delta;
        }
}

TEST(Hermitian, PrimitiveBound) {
    EXPECT_EQ(hermitian_nonnarrow_primitive_bound(63, 2), 7u);
    EXPECT_EQ(hermitian_nonnarrow_primitive_bound(255, 2), 58u);
    EXPECT_EQ(code_of([] { hermitian_nonnarrow_primitive_bound(15, 2); }), Errc::NotApplicable);
}

TEST(Report, Euclidean) {
    const auto r = threshold_report(15, 2, Flavor::Euclidean);
    EXPECT_EQ(r.m, 4u);
    EXPECT_EQ(r.sufficient_delta_max, 3u);
    EXPECT_EQ(r.necessary_delta_max, 7u);
    EXPECT_EQ(r.exact_threshold, 3u);
    EXPECT_EQ(r.nonnarrow_delta_max, 3u);
    const auto one = threshold_report(5, 11, Flavor::Euclidean);
    EXPECT_EQ(one.m, 1u);
    EXPECT_EQ(one.sufficient_delta_max, 3u);
}

TEST(Report, Hermitian) {
    const auto r = threshold_report(15, 2, Flavor::Hermitian);
    EXPECT_EQ(r.alphabet, 4u);
    EXPECT_EQ(r.sufficient_delta_max, 5u);
    EXPECT_EQ(r.family_delta_max, 3u);
    const auto p = threshold_report(63, 2, Flavor::Hermitian);
    EXPECT_EQ(p.sufficient_delta_max, 7u);
    EXPECT_EQ(p.necessary_delta_max, 8u);
    EXPECT_EQ(p.exact_threshold, 7u);
}

TEST(Report, NarrowSenseThresholdsAgreeWithScan) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t n = 2; n <= 63; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto r = threshold_report(n, q, Flavor::Euclidean);
            for (std::uint32_t delta = 2; delta <= n; ++delta) {
                const bool contained = euclidean_dual_containing(construct(n, q, 1, delta).Z, n);
                if (delta <= r.sufficient_delta_max) EXPECT_TRUE(contained) << n << " " << q << " " << delta;
                if (r.necessary_delta_max && delta >= *r.necessary_delta_max) EXPECT_FALSE(contained);
                if (r.exact_threshold) EXPECT_EQ(contained, delta <= *r.exact_threshold) << n << " " << q << " " << delta;
            }
        }
}
