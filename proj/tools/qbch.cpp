#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbch/qbch.hpp"

namespace {

using namespace qbch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitMismatch = 3;

struct Range {
    std::uint32_t lo = 0;
    std::optional<std::uint32_t> hi;
};

// "A", "A:B" or "A:n" (open upper end).
Range parse_range(const std::string& s) {
    Range r;
    const auto colon = s.find(':');
    try {
        r.lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, colon)));
        if (colon == std::string::npos)
            r.hi = r.lo;
        else if (const auto tail = s.substr(colon + 1); tail != "n" && !tail.empty())
            r.hi = static_cast<std::uint32_t>(std::stoul(tail));
    } catch (const std::logic_error&) {
        fail(Errc::InvalidArgument, "bad range '" + s + "'");
    }
    return r;
}

Flavor parse_flavor(const std::string& s) {
    if (s == "euclidean") return Flavor::Euclidean;
    if (s == "hermitian") return Flavor::Hermitian;
    fail(Errc::InvalidArgument, "unknown flavor '" + s + "'");
}

int exit_code(Errc e) {
    switch (e) {
        case Errc::HypothesisViolated:
        case Errc::NotApplicable:
        case Errc::NotNested: return kExitHypothesis;
        default: return kExitUsage;
    }
}

struct CodeArgs {
    std::uint64_t n = 0, q = 0, delta = 0;
    std::int64_t b = 1;
    std::string flavor = "euclidean";
    bool with_generator = false;
    bool distance = false;
};

struct ThresholdArgs {
    std::uint64_t n = 0, q = 0;
    std::string flavor = "euclidean";
};

struct QuantumArgs {
    std::string family;
    std::vector<std::uint64_t> params;
};

struct GridArgs {
    std::vector<std::uint32_t> qs{2};
    std::string n = "2:31";
    std::string delta = "auto";
    std::vector<std::int64_t> bs{1};
    std::string flavor = "euclidean";
    std::string kind = "codes";
    std::string format = "json";
    std::vector<std::string> checks{"all"};
    unsigned jobs = 1;
    std::uint64_t max_enum = std::uint64_t{1} << 22;
    unsigned max_weight = 6;
    std::int64_t time_budget_ms = 0;
};

OracleBudget budget_of(const GridArgs& g) {
    OracleBudget b;
    b.max_message_enumeration = g.max_enum;
    b.max_weight = g.max_weight;
    b.time_budget = std::chrono::milliseconds(g.time_budget_ms);
    return b;
}

int run_code(const CodeArgs& a, const GridArgs& g) {
    const auto code = construct(a.n, a.q, a.b, a.delta);
    CodeRecordOptions opts;
    opts.flavor = parse_flavor(a.flavor);
    opts.with_generator = a.with_generator;
    Json j = code_record(code, opts);
    if (a.distance) {
        const auto budget = budget_of(g);
        auto d = code_distance_exhaustive(code, budget);
        if (!d.exact()) d = code_distance_bounded(code, budget.max_weight, budget);
        j["distance"] = to_json(d);
    }
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_thresholds(const ThresholdArgs& a) {
    std::cout << to_json(threshold_report(a.n, a.q, parse_flavor(a.flavor))).dump() << '\n';
    return kExitOk;
}

int run_quantum(const QuantumArgs& a) {
    const auto& p = a.params;
    auto need = [&](std::size_t count, const char* usage) {
        if (p.size() != count) fail(Errc::InvalidArgument, std::string("usage: quantum --family ") + usage);
    };
    QuantumCodeParams out;
    if (a.family == "nested") {
        need(4, "nested N Q DELTA1 DELTA2");
        out = nested_css(p[0], p[1], p[2], p[3]);
    } else if (a.family == "euclid") {
        need(3, "euclid N Q DELTA");
        out = euclid_css(p[0], p[1], p[2]);
    } else if (a.family == "hermitian") {
        need(3, "hermitian N Q DELTA");
        out = hermitian_family(p[0], p[1], p[2]);
    } else if (a.family == "expanded") {
        need(4, "expanded N Q L DELTA");
        out = expanded_family(p[0], p[1], p[2], p[3]);
    } else {
        fail(Errc::InvalidArgument, "unknown family '" + a.family + "'");
    }
    std::cout << to_json(out).dump() << '\n';
    return kExitOk;
}

ScanConfig scan_config(const GridArgs& g) {
    ScanConfig c;
    c.qs = g.qs;
    const Range n = parse_range(g.n);
    c.n_min = n.lo;
    c.n_max = n.hi.value_or(n.lo);
    if (g.delta != "auto") {
        const Range d = parse_range(g.delta);
        c.delta_min = d.lo;
        c.delta_max = d.hi;
    }
    c.bs = g.bs;
    c.euclidean = g.flavor == "euclidean" || g.flavor == "both";
    c.hermitian = g.flavor == "hermitian" || g.flavor == "both";
    if (g.kind == "codes")
        c.kind = ScanKind::Codes;
    else if (g.kind == "quantum")
        c.kind = ScanKind::Quantum;
    else
        fail(Errc::InvalidArgument, "unknown kind '" + g.kind + "'");
    c.format = parse_format(g.format);
    c.jobs = g.jobs;
    return c;
}

int run_scan(const GridArgs& g) {
    std::cout << qbch::run_scan(scan_config(g));
    return kExitOk;
}

int run_verify(const GridArgs& g) {
    GridSpec spec;
    spec.qs = g.qs;
    const Range n = parse_range(g.n);
    spec.n_min = n.lo;
    spec.n_max = n.hi.value_or(n.lo);
    spec.bs = g.bs;
    if (g.delta != "auto") {
        const Range d = parse_range(g.delta);
        spec.delta_min = d.lo;
        spec.delta_max = d.hi.value_or(0);
    }
    unsigned checks = 0;
    for (const auto& c : g.checks) checks |= parse_check(c);
    const auto report = verify_grid(spec, checks, budget_of(g), g.jobs);
    std::cout << to_json_lines(report);
    return report.ok() ? kExitOk : kExitMismatch;
}

void add_grid_options(CLI::App* cmd, GridArgs& g, bool verify) {
    cmd->set_config("--config", "", "TOML or INI file with option values");
    cmd->add_option("--q", g.qs, "alphabet sizes")->delimiter(',');
    cmd->add_option("--n", g.n, "length range A:B");
    cmd->add_option("--delta", g.delta, "designed distance range A:B, A:n or auto");
    cmd->add_option("--b", g.bs, "offsets")->delimiter(',');
    cmd->add_option("--jobs,-j", g.jobs, "worker threads")->envname("QBCH_JOBS")->check(CLI::PositiveNumber);
    if (verify) {
        cmd->add_option("--checks", g.checks, "euclidean,hermitian,dimension,bch_bound,farr,dual_distance or all")
            ->delimiter(',');
        cmd->add_option("--max-enum", g.max_enum, "enumeration budget")->envname("QBCH_MAX_ENUM");
        cmd->add_option("--max-weight", g.max_weight, "weight limit")->envname("QBCH_MAX_WEIGHT");
        cmd->add_option("--time-budget-ms", g.time_budget_ms, "per search time limit, 0 for none");
    } else {
        cmd->add_option("--flavor", g.flavor, "euclidean, hermitian or both");
        cmd->add_option("--kind", g.kind, "codes or quantum");
        cmd->add_option("--format", g.format, "json, csv or table");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BCH codes, dual containment and quantum code parameters"};
    app.require_subcommand(1);

    CodeArgs code_args;
    GridArgs code_budget;
    auto* code = app.add_subcommand("code", "construct a BCH code");
    code->add_option("n", code_args.n)->required();
    code->add_option("q", code_args.q)->required();
    code->add_option("b", code_args.b)->required();
    code->add_option("delta", code_args.delta)->required();
    code->add_option("--flavor", code_args.flavor, "euclidean or hermitian");
    code->add_flag("--with-generator", code_args.with_generator, "include the generator polynomial");
    code->add_flag("--distance", code_args.distance, "run the minimum distance oracle");
    code->add_option("--max-enum", code_budget.max_enum)->envname("QBCH_MAX_ENUM");
    code->add_option("--max-weight", code_budget.max_weight)->envname("QBCH_MAX_WEIGHT");

    ThresholdArgs threshold_args;
    auto* thresholds = app.add_subcommand("thresholds", "dual containment thresholds");
    thresholds->add_option("n", threshold_args.n)->required();
    thresholds->add_option("q", threshold_args.q)->required();
    thresholds->add_option("--flavor", threshold_args.flavor, "euclidean or hermitian");

    QuantumArgs quantum_args;
    auto* quantum = app.add_subcommand("quantum", "quantum code parameters");
    quantum->add_option("--family", quantum_args.family, "nested, euclid, hermitian or expanded")->required();
    quantum->add_option("params", quantum_args.params, "family parameters")->required();

    GridArgs scan_args;
    auto* scan = app.add_subcommand("scan", "tabulate codes over a parameter grid");
    add_grid_options(scan, scan_args, false);

    GridArgs verify_args;
    verify_args.delta = "2:n";
    auto* verify = app.add_subcommand("verify", "compare formulas with brute-force oracles");
    add_grid_options(verify, verify_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*code) return run_code(code_args, code_budget);
        if (*thresholds) return run_thresholds(threshold_args);
        if (*quantum) return run_quantum(quantum_args);
        if (*scan) return run_scan(scan_args);
        if (*verify) return run_verify(verify_args);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e.code());
    }
    return kExitUsage;
}
