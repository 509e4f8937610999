#ifndef QBCH_SERIALIZE_HPP
#define QBCH_SERIALIZE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "json.hpp"
#include "qbch/bch.hpp"
#include "qbch/duality.hpp"
#include "qbch/integer.hpp"
#include "qbch/oracle.hpp"
#include "qbch/quantum.hpp"

namespace qbch {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

/// Integers that may exceed 64 bits are written as decimal strings.
inline Json big_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(v));
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

}  // namespace detail

inline Json to_json(const FieldPolynomial& p) {
    Json out = Json::array();
    for (Elem c : p.coefficients()) out.push_back(c);
    return out;
}

inline Json to_json(const Rational& r) {
    return Json{{"num", detail::big_json(boost::multiprecision::numerator(r))},
                {"den", detail::big_json(boost::multiprecision::denominator(r))}};
}

struct CodeRecordOptions {
    bool with_generator = false;
    Flavor flavor = Flavor::Euclidean;
};

inline Json code_record(const BchCode& code, const CodeRecordOptions& opts = {}) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = code.n();
    j["q"] = code.q();
    j["b"] = code.b;
    j["delta"] = code.delta;
    j["k"] = code.k;
    j["m"] = code.ctx.m;
    j["defining_set"] = code.Z;
    j["d_bound"] = distance_bound(code);
    j["narrow_sense"] = code.narrow_sense;
    j["primitive"] = code.primitive;
    j["flavor"] = to_string(opts.flavor);
    j["dual_containing"] = dual_containing(code, opts.flavor);
    if (opts.with_generator) j["generator"] = to_json(generator_polynomial(code));
    return j;
}

inline Json to_json(const ThresholdReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = r.n;
    j["q"] = r.q;
    j["alphabet"] = r.alphabet;
    j["m"] = r.m;
    j["flavor"] = to_string(r.flavor);
    j["narrow_sense"] = r.narrow_sense;
    j["kappa"] = r.kappa ? to_json(*r.kappa) : Json(nullptr);
    j["sufficient_delta_max"] = r.sufficient_delta_max;
    j["necessary_delta_max"] = detail::optional_json(r.necessary_delta_max);
    j["exact_threshold"] = detail::optional_json(r.exact_threshold);
    j["nonnarrow_delta_max"] = detail::optional_json(r.nonnarrow_delta_max);
    j["family_delta_max"] = detail::optional_json(r.family_delta_max);
    return j;
}

inline Json to_json(const Provenance& p) {
    Json j;
    j["n"] = p.n;
    j["alphabet"] = p.alphabet;
    if (p.delta) j["delta"] = *p.delta;
    if (p.delta1) j["delta1"] = *p.delta1;
    if (p.delta2) j["delta2"] = *p.delta2;
    if (p.l) j["l"] = *p.l;
    return j;
}

inline Json to_json(const QuantumCodeParams& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["notation"] = notation(p);
    j["n"] = p.n;
    j["k"] = p.k;
    j["d_low"] = p.d_low;
    j["q"] = p.q;
    j["pure_to"] = p.pure_to;
    j["construction"] = to_string(p.construction);
    j["provenance"] = to_json(p.provenance);
    if (p.k_as_printed) j["k_as_printed"] = *p.k_as_printed;
    return j;
}

inline Json to_json(const DistanceResult& r) {
    return Json{{"status", to_string(r.status)}, {"value", r.value}, {"examined", r.examined}, {"reason", r.reason}};
}

inline Json to_json(const Finding& f) {
    return Json{{"q", f.q},
                {"n", f.n},
                {"b", f.b},
                {"delta", f.delta},
                {"check", f.check},
                {"kind", f.kind == FindingKind::Mismatch ? "mismatch" : "inconclusive"},
                {"detail", f.detail}};
}

/// One JSON object per line: findings first, then a summary line.
inline std::string to_json_lines(const VerifyReport& r) {
    std::string out;
    for (const auto& f : r.mismatches) out += to_json(f).dump() + "\n";
    for (const auto& f : r.inconclusive) out += to_json(f).dump() + "\n";
    Json s{{"schema", kSchemaVersion},
           {"summary", true},
           {"instances", r.instances},
           {"comparisons", r.comparisons},
           {"mismatches", r.mismatches.size()},
           {"inconclusive", r.inconclusive.size()}};
    out += s.dump() + "\n";
    return out;
}

}  // namespace qbch

#endif  // QBCH_SERIALIZE_HPP
