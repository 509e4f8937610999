#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbch/qbch.hpp"

using namespace qbch;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct CommandResult {
    int status = -1;
    std::string out;
};

std::string cli_path;

CommandResult run_cli(const std::string& args) {
    CommandResult r;
    const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> grid(std::initializer_list<std::uint32_t> qs, std::uint32_t n_max) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto q : qs)
        for (std::uint32_t n = 2; n <= n_max; ++n)
            if (std::gcd(n, q) == 1) out.emplace_back(q, n);
    return out;
}

Outcome ac1() {
    const auto t = Clock::now();
    GridSpec spec;
    spec.qs = {2, 3, 4, 5};
    spec.n_min = 2;
    spec.n_max = 63;
    const auto r = verify_grid(spec, CheckEuclidean, {}, 1);
    const double s = seconds_since(t);
    std::ostringstream d;
    d << r.comparisons << " instances, " << r.mismatches.size() << " mismatches, " << s << " s single-threaded";
    return {r.ok() && r.comparisons > 0 && s < 300.0, d.str()};
}

Outcome ac2() {
    GridSpec spec;
    spec.qs = {2, 3};
    spec.n_min = 2;
    spec.n_max = 40;
    const auto r = verify_grid(spec, CheckHermitian, {}, 1);
    std::ostringstream d;
    d << r.comparisons << " instances over GF(4) and GF(9), " << r.mismatches.size() << " mismatches";
    return {r.ok() && r.comparisons > 0, d.str()};
}

Outcome ac3() {
    std::uint64_t checked = 0, bad = 0;
    for (auto [q, n] : grid({2, 3, 4, 5}, 63)) {
        const auto limit = dimension_formula_limit(n, q);
        if (!limit) continue;
        DefinitionalScanner scan(n, q, 1);
        for (std::uint32_t delta = 2; delta <= *limit; ++delta) {
            scan.extend_to(delta);
            const auto code = construct(n, q, 1, delta);
            const auto k = dimension_formula(n, q, delta);
            ++checked;
            if (k != code.k || k != scan.dimension()) ++bad;
        }
    }
    return {checked > 0 && bad == 0,
            std::to_string(checked) + " instances in range, " + std::to_string(bad) + " mismatches"};
}

Outcome ac4() {
    std::uint64_t points = 0, bad = 0;
    std::string where;
    for (std::uint32_t q : {2u, 3u, 4u})
        for (unsigned m = 2; big_pow(q, m) <= 256; ++m) {
            const auto n = static_cast<std::uint32_t>(to_u64(big_pow(q, m)) - 1);
            const std::uint64_t dmax =
                to_u64(big_pow(q, (m + 1) / 2)) - 1 - (m % 2 == 1 ? q - 2 : 0);
            if (euclid_exact_threshold(n, q) != dmax) ++bad;
            DefinitionalScanner scan(n, q, 1);
            for (std::uint32_t delta = 2; delta <= n; ++delta) {
                scan.extend_to(delta);
                const bool coset = euclidean_dual_containing(construct(n, q, 1, delta).Z, n);
                ++points;
                if (coset != (delta <= dmax) || scan.euclidean_contained() != coset) {
                    ++bad;
                    where += " (" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(delta) + ")";
                }
            }
        }
    const bool anchor = euclidean_dual_containing(construct(15, 2, 1, 3).Z, 15) &&
                        !euclidean_dual_containing(construct(15, 2, 1, 4).Z, 15);
    return {bad == 0 && anchor, std::to_string(points) + " points, " + std::to_string(bad) + " disagreements" + where};
}

Outcome ac5() {
    std::uint64_t checked = 0, bad = 0;
    for (auto [q, n] : grid({2, 3, 4, 5}, 63)) {
        if (make_context(n, q).m < 2) continue;
        for (std::uint64_t delta = std::max<std::uint64_t>(2, euclid_necessary(n, q)); delta <= n; ++delta) {
            ++checked;
            if (euclidean_dual_containing(construct(n, q, 1, delta).Z, n)) ++bad;
        }
    }
    return {checked > 0 && bad == 0, std::to_string(checked) + " instances, " + std::to_string(bad) + " counterexamples"};
}

Outcome ac6() {
    bool ok = threshold_report(15, 2, Flavor::Hermitian).sufficient_delta_max == 5;
    std::string trace;
    DefinitionalScanner scan(15, 4, 1);
    for (std::uint32_t delta = 2; delta <= 6; ++delta) {
        scan.extend_to(delta);
        const bool coset = hermitian_dual_containing(construct(15, 4, 1, delta).Z, 15, 2);
        const bool expected = delta <= 5;
        ok = ok && coset == expected && scan.hermitian_contained() == expected;
        trace += " d" + std::to_string(delta) + "=" + (coset ? "T" : "F");
    }
    return {ok, "delta_max 5, coset and matrix:" + trace};
}

Outcome ac7() {
    struct Case {
        std::string args;
        std::string notation;
        std::uint64_t pure_to;
    };
    const std::vector<Case> cases{{"quantum --family hermitian 15 2 3", "[[15,7,>=3]]_2", 4},
                                  {"quantum --family euclid 31 2 7", "[[31,1,>=7]]_2", 8},
                                  {"quantum --family nested 31 2 3 5", "[[31,5,>=3]]_2", 5}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto r = run_cli(c.args);
        bool good = r.status == 0;
        if (good) {
            const auto j = nlohmann::json::parse(r.out);
            good = j["notation"] == c.notation && j["pure_to"] == c.pure_to;
        }
        ok = ok && good;
        detail += c.notation + (good ? " ok; " : " WRONG; ");
    }
    struct Ingredient {
        std::string code;
        std::uint64_t d;
    };
    const std::vector<Ingredient> ingredients{
        {"15 4 1 3", 3}, {"31 2 1 7", 7}, {"31 2 1 3", 3}, {"31 2 1 5", 5}};
    for (const auto& g : ingredients) {
        const auto t = Clock::now();
        const auto r = run_cli("code " + g.code + " --distance --max-enum 1073741824");
        const double s = seconds_since(t);
        bool good = r.status == 0;
        std::uint64_t d = 0;
        if (good) {
            const auto j = nlohmann::json::parse(r.out);
            good = j["distance"]["status"] == "exact";
            d = j["distance"]["value"].get<std::uint64_t>();
            good = good && d == g.d;
        }
        good = good && s < 30.0;
        ok = ok && good;
        std::ostringstream line;
        line << "BCH(" << g.code << ") d=" << d << " in " << s << " s; ";
        detail += line.str();
    }
    return {ok, detail};
}

Outcome ac8() {
    const auto v = farr_verdict(26, 3, 3);
    const auto c = construct(26, 3, 1, 3);
    const auto none = code_distance_bounded(c, 3);
    const auto hit = code_distance_bounded(c, 4);
    const auto w = farr_verdict(15, 2, 3);
    const auto d15 = code_distance_exhaustive(construct(15, 2, 1, 3));
    const bool ok = v.forced_exact == 4u && none.status == DistanceStatus::NoneBelow && none.value == 3 &&
                    hit.exact() && hit.value == 4 && w.d_low == 3 && w.d_high == 4u && d15.exact() && d15.value == 3;
    return {ok, "forced_exact=" + (v.forced_exact ? std::to_string(*v.forced_exact) : std::string("none")) +
                    ", weight<=3 " + std::string(to_string(none.status)) + ", weight 4 " +
                    std::string(to_string(hit.status)) + "; BCH(15,2;3) in [3,4], oracle " + std::to_string(d15.value)};
}

Outcome ac9() {
    OracleBudget budget;
    budget.max_message_enumeration = std::uint64_t{1} << 35;
    std::uint64_t checked = 0, bad = 0, inconclusive = 0;
    std::string largest;
    double slowest = 0;
    for (auto [q, n] : grid({2, 3, 4, 5}, 63)) {
        const auto ctx = make_context(n, q);
        if (ctx.m < 2) continue;
        const std::uint64_t kf = to_u64(floor_of(kappa(n, q)));
        if (kf < 2) continue;
        DefinitionalScanner scan(n, q, 1);
        for (std::uint32_t delta = 2; delta <= kf; ++delta) {
            scan.extend_to(delta);
            if (scan.rank() > 16) break;
            const auto t = Clock::now();
            const auto d = min_distance_exhaustive(scan.field_ptr(), scan.parity_check(), budget);
            const double s = seconds_since(t);
            ++checked;
            if (!d.exact())
                ++inconclusive;
            else if (d.value < kf + 1)
                ++bad;
            if (s > slowest) {
                slowest = s;
                largest = "(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(delta) +
                          ") d_perp=" + std::to_string(d.value);
            }
        }
    }
    std::ostringstream out;
    out << checked << " instances, " << bad << " violations, " << inconclusive << " inconclusive; slowest " << largest
        << " " << slowest << " s";
    return {checked > 0 && bad == 0 && inconclusive == 0, out.str()};
}

Outcome ac10() {
    const std::string args = "scan --q 2,3,4,5 --n 2:63 --delta 2:n --flavor both --format json";
    const auto a = run_cli(args + " --jobs 1");
    const auto b = run_cli(args + " --jobs 8");
    const bool ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    std::size_t lines = 0;
    for (char c : a.out) lines += c == '\n';
    return {ok, std::to_string(lines) + " rows, " + std::to_string(a.out.size()) + " bytes, " +
                    (a.out == b.out ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance PATH_TO_CLI [AC...]\n";
        return 2;
    }
    cli_path = argv[1];
    std::vector<std::string> only(argv + 2, argv + argc);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
