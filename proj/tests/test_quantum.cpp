#include <gtest/gtest.h>

#include "qbch/quantum.hpp"
#include "qbch/serialize.hpp"

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

TEST(Nested, Examples) {
    const auto p = nested_css(31, 2, 3, 5);
    EXPECT_EQ(notation(p), "[[31,5,>=3]]_2");
    EXPECT_EQ(p.pure_to, 5u);
    EXPECT_EQ(nested_css(15, 2, 2, 3).k, 0u);
    EXPECT_EQ(code_of([] { nested_css(31, 2, 5, 3); }), Errc::HypothesisViolated);
}

TEST(Euclid, Examples) {
    const auto a = euclid_css(31, 2, 7);
    EXPECT_EQ(notation(a), "[[31,1,>=7]]_2");
    EXPECT_EQ(a.pure_to, 8u);
    const auto b = euclid_css(15, 2, 3);
    EXPECT_EQ(notation(b), "[[15,7,>=3]]_2");
    EXPECT_EQ(b.pure_to, 4u);
    EXPECT_EQ(code_of([] { euclid_css(15, 2, 4); }), Errc::HypothesisViolated);
}

TEST(Hermitian, Examples) {
    const auto a = hermitian_family(15, 2, 3);
    EXPECT_EQ(notation(a), "[[15,7,>=3]]_2");
    EXPECT_EQ(a.pure_to, 4u);
    EXPECT_EQ(notation(hermitian_family(63, 2, 7)), "[[63,33,>=7]]_2");
    EXPECT_EQ(hermitian_family(63, 2, 2).k, 63u - 6u);
    EXPECT_EQ(code_of([] { hermitian_family(15, 2, 4); }), Errc::HypothesisViolated);
}

TEST(Expanded, Examples) {
    const auto a = expanded_family(15, 2, 2, 3);
    EXPECT_EQ(notation(a), "[[30,14,>=3]]_2");
    EXPECT_EQ(a.k_as_printed, 22u);
    const auto one = expanded_family(31, 2, 1, 7);
    const auto ref = euclid_css(31, 2, 7);
    EXPECT_EQ(one.n, ref.n);
    EXPECT_EQ(one.k, ref.k);
    EXPECT_FALSE(one.k_as_printed);
    EXPECT_EQ(code_of([] { expanded_family(15, 2, 2, 4); }), Errc::HypothesisViolated);
}

TEST(General, Examples) {
    const auto p = css_general(construct(31, 2, 1, 5), construct(31, 2, 1, 3));
    EXPECT_EQ(notation(p), "[[31,5,>=3]]_2");
    EXPECT_EQ(p.pure_to, 5u);
    const auto c = construct(15, 2, 1, 3);
    EXPECT_EQ(css_general(c, c).k, 0u);
    EXPECT_EQ(code_of([] { css_general(construct(31, 2, 1, 3), construct(31, 2, 1, 5)); }), Errc::NotNested);
}

TEST(Serialize, QuantumRecord) {
    const auto j = to_json(expanded_family(15, 2, 2, 3));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["k"], 14);
    EXPECT_EQ(j["k_as_printed"], 22);
    EXPECT_EQ(j["construction"], "expanded");
    EXPECT_EQ(j["provenance"]["l"], 2);
}

TEST(Serialize, CodeRecord) {
    CodeRecordOptions opts;
    opts.with_generator = true;
    const auto j = code_record(construct(15, 2, 1, 3), opts);
    EXPECT_EQ(j["k"], 11);
    EXPECT_EQ(j["dual_containing"], true);
    EXPECT_EQ(j["generator"], Json::parse("[1,1,0,0,1]"));
    EXPECT_EQ(j["defining_set"], Json::parse("[1,2,4,8]"));
}

TEST(Serialize, ThresholdRecord) {
    const auto j = to_json(threshold_report(63, 2, Flavor::Euclidean));
    EXPECT_EQ(j["kappa"]["num"], 7);
    EXPECT_EQ(j["kappa"]["den"], 1);
    const auto k = to_json(threshold_report(21, 2, Flavor::Euclidean));
    EXPECT_NE(k["kappa"]["den"], 1);
    EXPECT_TRUE(k["exact_threshold"].is_null());
}
