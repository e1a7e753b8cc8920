#pragma once
// Certificates: a witness payload plus enough metadata to replay it.

#include <json.hpp>

#include <cstdio>

#include "rw/core.hpp"

namespace rw {

using Json = nlohmann::json;

inline constexpr const char* cert_schema = "ramsey-workbench/v1";
inline constexpr const char* library_version = "1.0.0";

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Certificate {
    std::string operation;
    std::string inputs_digest;
    Json witness = Json::object();
    bool verified = false;
    std::string version = library_version;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Json to_json(const Certificate& c) {
    return Json{{"schema", cert_schema},
                {"operation", c.operation},
                {"inputs_digest", c.inputs_digest},
                {"witness", c.witness},
                {"verified", c.verified},
                {"version", c.version}};
}

inline Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate: expected a JSON object");
    if (j.value("schema", "") != cert_schema) throw InputError("certificate: unknown schema");
    Certificate c;
    try {
        c.operation = j.at("operation").get<std::string>();
        c.inputs_digest = j.at("inputs_digest").get<std::string>();
        c.witness = j.at("witness");
        c.verified = j.at("verified").get<bool>();
        c.version = j.at("version").get<std::string>();
    } catch (const Json::exception& e) {
        throw InputError(std::string("certificate: ") + e.what());
    }
    return c;
}

enum class OutputFormat { text, json };

// Keys are sorted by the json object, so output is byte-stable.
inline std::string emit_report(const Certificate& c, OutputFormat f) {
    if (f == OutputFormat::json) return to_json(c).dump(2) + "\n";
    std::ostringstream os;
    os << "operation: " << c.operation << '\n';
    os << "verified: " << (c.verified ? "true" : "false") << '\n';
    for (const auto& [k, v] : c.witness.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    os << "inputs: " << c.inputs_digest << "  (" << cert_schema << ", " << c.version << ")\n";
    return os.str();
}

inline Certificate parse_certificate(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("certificate: ") + e.what());
    }
    return certificate_from_json(j);
}

// ---------------------------------------------------------------------------
// Payload helpers. Rationals travel as "p/q" strings so nothing is rounded.

namespace js {

inline Json q(const Rational& r) { return to_string(r); }
inline Json interval(const Interval& I) { return Json::array({I.lo, I.hi}); }
inline Json set(const IntSet& a) { return Json{{"window", interval(a.window())}, {"members", a.members()}}; }

inline Rational rational(const Json& j) { return parse_rational(j.get<std::string>()); }
inline Interval to_interval(const Json& j) { return Interval(j.at(0).get<i64>(), j.at(1).get<i64>()); }
inline IntSet to_set(const Json& j) { return IntSet(to_interval(j.at("window")), j.at("members").get<std::vector<i64>>()); }

}  // namespace js

}  // namespace rw
