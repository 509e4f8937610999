#include <gtest/gtest.h>

#include "qbch/scan.hpp"

using namespace qbch;

TEST(Scan, RowsAreSorted) {
    ScanConfig cfg;
    cfg.qs = {4, 2};
    cfg.n_min = 5;
    cfg.n_max = 9;
    cfg.delta_max = 4;
    cfg.jobs = 3;
    const auto rows = scan_rows(cfg);
    ASSERT_FALSE(rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const Json& r) {
            return std::tuple(r["q"].get<int>(), r["n"].get<int>(), r["b"].get<int>(), r["delta"].get<int>());
        };
        EXPECT_LT(key(rows[i - 1]), key(rows[i]));
    }
}

TEST(Scan, DeterministicAcrossJobs) {
    ScanConfig cfg;
    cfg.qs = {2, 3, 4, 5};
    cfg.n_max = 40;
    cfg.hermitian = true;
    const auto a = run_scan(cfg);
    cfg.jobs = 8;
    EXPECT_EQ(a, run_scan(cfg));
}

TEST(Scan, QuantumRowsUseContainingCodes) {
    ScanConfig cfg;
    cfg.kind = ScanKind::Quantum;
    cfg.qs = {2, 3};
    cfg.n_max = 40;
    cfg.hermitian = true;
    for (const auto& r : scan_rows(cfg)) {
        const auto n = r["n"].get<std::uint32_t>();
        const auto q = r["q"].get<std::uint32_t>();
        const auto delta = r["delta"].get<std::uint32_t>();
        if (r["construction"] == "euclidean_css")
            EXPECT_TRUE(euclidean_dual_containing(construct(n, q, 1, delta).Z, n));
        else
            EXPECT_TRUE(hermitian_dual_containing(construct(n, q * q, 1, delta).Z, n, q));
    }
}

TEST(Scan, Formats) {
    ScanConfig cfg;
    cfg.qs = {2};
    cfg.n_min = 7;
    cfg.n_max = 7;
    cfg.delta_max = 3;
    cfg.format = OutputFormat::Csv;
    const auto csv = run_scan(cfg);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,n,b,delta,m,k,d_bound,euclidean");
    EXPECT_NE(csv.find("2,7,1,3,3,4,3,true"), std::string::npos);
    cfg.format = OutputFormat::Table;
    EXPECT_NE(run_scan(cfg).find("euclidean"), std::string::npos);
}

TEST(Scan, ConfigValidation) {
    ScanConfig cfg;
    cfg.qs = {};
    EXPECT_THROW(scan_rows(cfg), Error);
    cfg.qs = {6};
    EXPECT_THROW(scan_rows(cfg), Error);
    cfg.qs = {2};
    cfg.n_min = 10;
    cfg.n_max = 5;
    EXPECT_THROW(scan_rows(cfg), Error);
}
