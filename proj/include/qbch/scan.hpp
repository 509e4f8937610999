#ifndef QBCH_SCAN_HPP
#define QBCH_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qbch/bch.hpp"
#include "qbch/duality.hpp"
#include "qbch/error.hpp"
#include "qbch/integer.hpp"
#include "qbch/parallel.hpp"
#include "qbch/quantum.hpp"
#include "qbch/serialize.hpp"

namespace qbch {

enum class ScanKind { Codes, Quantum };
enum class OutputFormat { Json, Csv, Table };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "table") return OutputFormat::Table;
    fail(Errc::InvalidArgument, "unknown format '" + std::string(s) + "'");
}

struct ScanConfig {
    ScanKind kind = ScanKind::Codes;
    std::vector<std::uint32_t> qs{2};
    std::uint32_t n_min = 2;
    std::uint32_t n_max = 31;
    std::uint32_t delta_min = 2;
    /// nullopt means auto: up to the applicable delta_max (n for classical codes).
    std::optional<std::uint32_t> delta_max;
    std::vector<std::int64_t> bs{1};
    bool euclidean = true;
    bool hermitian = false;
    OutputFormat format = OutputFormat::Json;
    unsigned jobs = 1;

    void validate() const {
        if (qs.empty()) fail(Errc::InvalidArgument, "q list is empty");
        if (bs.empty()) fail(Errc::InvalidArgument, "b list is empty");
        if (n_min > n_max) fail(Errc::InvalidArgument, "empty n range");
        if (delta_min < 2) fail(Errc::DeltaOutOfRange, "delta must be at least 2");
        if (delta_max && *delta_max < delta_min) fail(Errc::InvalidArgument, "empty delta range");
        if (!euclidean && !hermitian) fail(Errc::InvalidArgument, "no flavor selected");
        if (jobs < 1) fail(Errc::InvalidArgument, "parallelism must be at least 1");
        for (auto q : qs)
            if (!as_prime_power(q)) fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    }
};

namespace detail {

struct ScanCell {
    std::uint32_t q;
    std::uint32_t n;
    std::int64_t b;
};

inline std::optional<std::uint32_t> square_root_alphabet(std::uint32_t q) {
    const auto pp = as_prime_power(q);
    if (!pp || pp->e % 2 != 0) return std::nullopt;
    return static_cast<std::uint32_t>(to_u64(big_pow(pp->p, pp->e / 2)));
}

inline std::vector<Json> scan_codes(const ScanCell& c, const ScanConfig& cfg) {
    std::vector<Json> rows;
    const std::uint32_t hi = std::min(cfg.delta_max.value_or(c.n), c.n);
    const auto root = square_root_alphabet(c.q);
    for (std::uint32_t delta = cfg.delta_min; delta <= hi; ++delta) {
        const auto code = construct(c.n, c.q, c.b, delta);
        Json j;
        j["schema"] = kSchemaVersion;
        j["q"] = c.q;
        j["n"] = c.n;
        j["b"] = code.b;
        j["delta"] = delta;
        j["m"] = code.ctx.m;
        j["k"] = code.k;
        j["d_bound"] = distance_bound(code);
        if (cfg.euclidean) j["euclidean"] = euclidean_dual_containing(code.Z, c.n);
        if (cfg.hermitian)
            j["hermitian"] = root ? Json(hermitian_dual_containing(code.Z, c.n, *root)) : Json(nullptr);
        rows.push_back(std::move(j));
    }
    return rows;
}

inline Json quantum_row(const ScanCell& c, std::uint32_t delta, const QuantumCodeParams& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["q"] = c.q;
    j["n"] = c.n;
    j["b"] = c.b;
    j["delta"] = delta;
    j["construction"] = to_string(p.construction);
    j["notation"] = notation(p);
    j["k"] = p.k;
    j["d_low"] = p.d_low;
    j["pure_to"] = p.pure_to;
    return j;
}

// Narrow-sense families only; rows are emitted for b = 1 cells.
inline std::vector<Json> scan_quantum(const ScanCell& c, const ScanConfig& cfg) {
    std::vector<Json> rows;
    if (((c.b % c.n) + c.n) % c.n != 1 % c.n) return rows;
    const auto ctx = make_context(c.n, c.q);
    std::optional<std::uint64_t> euclid_max, herm_max;
    if (cfg.euclidean && ctx.m >= 2) euclid_max = to_u64(floor_of(kappa(c.n, c.q)));
    if (cfg.hermitian && std::gcd<std::uint64_t>(c.n, c.q) == 1 && hermitian_order(c.n, c.q) >= 2)
        herm_max = hermitian_family_delta_max(c.n, c.q);
    const std::uint64_t auto_max = std::max(euclid_max.value_or(0), herm_max.value_or(0));
    const std::uint64_t hi = std::min<std::uint64_t>(cfg.delta_max.value_or(auto_max), c.n);
    for (std::uint32_t delta = cfg.delta_min; delta <= hi; ++delta) {
        if (euclid_max && delta <= *euclid_max) rows.push_back(quantum_row(c, delta, euclid_css(c.n, c.q, delta)));
        if (herm_max && delta <= *herm_max) rows.push_back(quantum_row(c, delta, hermitian_family(c.n, c.q, delta)));
    }
    return rows;
}

inline std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace detail

/// All rows of the scan, ordered by (q, n, b, delta) whatever the parallelism.
inline std::vector<Json> scan_rows(const ScanConfig& cfg) {
    cfg.validate();
    std::vector<std::uint32_t> qs = cfg.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::vector<std::int64_t> bs = cfg.bs;
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    std::vector<detail::ScanCell> cells;
    for (auto q : qs)
        for (std::uint32_t n = std::max<std::uint32_t>(cfg.n_min, 2); n <= cfg.n_max; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (auto b : bs) cells.push_back({q, n, b});
        }
    auto parts = parallel_map(cells.size(), cfg.jobs, [&](std::size_t i) {
        return cfg.kind == ScanKind::Codes ? detail::scan_codes(cells[i], cfg) : detail::scan_quantum(cells[i], cfg);
    });
    std::vector<Json> rows;
    for (auto& p : parts)
        for (auto& r : p) rows.push_back(std::move(r));
    return rows;
}

inline std::string format_rows(const std::vector<Json>& rows, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        for (const auto& r : rows) out << r.dump() << '\n';
        return out.str();
    }
    std::vector<std::string> header;
    for (const auto& r : rows)
        for (const auto& [key, value] : r.items())
            if (key != "schema" && std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    std::vector<std::vector<std::string>> table;
    table.push_back(header);
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (const auto& h : header) line.push_back(r.contains(h) ? detail::csv_cell(r[h]) : "");
        table.push_back(std::move(line));
    }
    if (format == OutputFormat::Csv) {
        for (const auto& line : table) {
            for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
            out << '\n';
        }
        return out.str();
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : table)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (const auto& line : table) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) s += "  ";
            s += std::string(width[i] - line[i].size(), ' ') + line[i];
        }
        out << s << '\n';
    }
    return out.str();
}

inline std::string run_scan(const ScanConfig& cfg) { return format_rows(scan_rows(cfg), cfg.format); }

}  // namespace qbch

#endif  // QBCH_SCAN_HPP
