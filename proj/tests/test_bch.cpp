#include <gtest/gtest.h>

#include "qbch/bch.hpp"
#include "qbch/matrix.hpp"

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

std::vector<Elem> coeffs(const FieldPolynomial& p) { return p.coefficients(); }

}  // namespace

TEST(Construct, Dimensions) {
    EXPECT_EQ(construct(15, 2, 1, 5).k, 7u);
    EXPECT_EQ(construct(15, 2, 1, 3).k, 11u);
    const auto c = construct(7, 2, 1, 3);
    EXPECT_EQ(c.k, 4u);
    EXPECT_EQ(coeffs(generator_polynomial(c)), (std::vector<Elem>{1, 1, 0, 1}));
    EXPECT_TRUE(c.narrow_sense);
    EXPECT_TRUE(c.primitive);
    EXPECT_EQ(construct(15, 2, 1, 15).k, 1u);
}

TEST(DimensionFormula, Examples) {
    EXPECT_EQ(dimension_formula(15, 2, 3), 11u);
    EXPECT_EQ(dimension_formula(31, 2, 7), 16u);
    EXPECT_EQ(code_of([] { dimension_formula(15, 2, 5); }), Errc::HypothesisViolated);
    EXPECT_EQ(dimension_formula_limit(15, 2), 4u);
    EXPECT_FALSE(dimension_formula_limit(5, 9));
}

TEST(Generator, Examples) {
    EXPECT_EQ(coeffs(generator_polynomial(construct(15, 2, 1, 3))), (std::vector<Elem>{1, 1, 0, 0, 1}));
    const auto rs = construct(4, 5, 1, 2);
    const auto g = generator_polynomial(rs);
    EXPECT_EQ(g.degree(), 1);
    EXPECT_EQ(g.coefficients()[0], field_of_order(5)->neg(field_of_order(5)->primitive_element()));
}

TEST(Generator, DividesXnMinusOneOnGrid) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t n = 2; n <= 40; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (std::uint32_t delta : {2u, 3u, n / 2 + 1}) {
                if (delta < 2 || delta > n) continue;
                const auto c = construct(n, q, 1, delta);
                const auto& g = generator_polynomial(c);
                EXPECT_EQ(g.degree(), static_cast<long>(n - c.k));
                EXPECT_TRUE((x_pow_minus_one(g.field(), n) % g).is_zero());
            }
        }
}

TEST(Generator, BeyondTableLimit) {
    const auto c = construct(61, 2, 1, 2);
    EXPECT_EQ(c.ctx.m, 60u);
    EXPECT_EQ(generator_polynomial(c).degree(), 60);
}

TEST(Matrices, GeneratorAndParityCheck) {
    const auto c = construct(7, 2, 1, 3);
    const auto G = generator_matrix(c);
    const auto H = parity_check_matrix(c);
    EXPECT_EQ(G.rows, 4u);
    EXPECT_EQ(G.cols, 7u);
    const auto f = field_of_order(2);
    EXPECT_EQ(rank(f, G), 4u);
    EXPECT_EQ(rank(f, H), 3u);
    EXPECT_TRUE(multiply_transpose(*f, G, H).is_zero());

    const auto c5 = construct(26, 3, 2, 4);
    const auto f3 = field_of_order(3);
    EXPECT_TRUE(multiply_transpose(*f3, generator_matrix(c5), parity_check_matrix(c5)).is_zero());
    EXPECT_EQ(rank(f3, generator_matrix(c5)), c5.k);
}

TEST(DualSets, Examples) {
    const auto c = construct(15, 2, 1, 3);
    EXPECT_EQ(dual_defining_set(c), (ResidueSet{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}));
    const auto h = construct(15, 4, 1, 3);
    EXPECT_EQ(h.Z, (ResidueSet{1, 2, 4, 8}));
    EXPECT_EQ(base_alphabet(4), 2u);
    EXPECT_EQ(code_of([] { base_alphabet(8); }), Errc::InvalidArgument);
    EXPECT_EQ(is_subset(h.Z, hermitian_dual_defining_set(h)), hermitian_dual_containing(h.Z, 15, 2));
}

TEST(Farr, Examples) {
    const auto a = farr_verdict(15, 2, 3);
    EXPECT_TRUE(a.applicable);
    EXPECT_EQ(a.d_low, 3u);
    EXPECT_EQ(a.d_high, 4u);
    EXPECT_FALSE(a.forced_exact);
    const auto b = farr_verdict(26, 3, 3);
    EXPECT_TRUE(b.applicable);
    EXPECT_EQ(b.forced_exact, 4u);
    const auto c = farr_verdict(31, 2, 4);
    EXPECT_FALSE(c.applicable);
    EXPECT_FALSE(c.d_high);
}

TEST(DualDistance, LowerBound) {
    EXPECT_EQ(dual_distance_lower_bound(construct(15, 2, 1, 3)), 4u);
    EXPECT_EQ(dual_distance_lower_bound(construct(31, 2, 1, 7)), 8u);
    EXPECT_EQ(code_of([] { dual_distance_lower_bound(construct(31, 2, 1, 8)); }), Errc::HypothesisViolated);
    EXPECT_EQ(code_of([] { dual_distance_lower_bound(construct(31, 2, 2, 3)); }), Errc::HypothesisViolated);
}

TEST(Bounds, DistanceBoundAndContainment) {
    EXPECT_EQ(distance_bound(construct(15, 2, 1, 4)), 5u);
    EXPECT_TRUE(dual_containing(construct(15, 2, 1, 3), Flavor::Euclidean));
    EXPECT_FALSE(dual_containing(construct(15, 2, 1, 4), Flavor::Euclidean));
    EXPECT_TRUE(dual_containing(construct(15, 4, 1, 5), Flavor::Hermitian));
    EXPECT_FALSE(dual_containing(construct(15, 4, 1, 6), Flavor::Hermitian));
}
