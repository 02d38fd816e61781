#pragma once

// Check reports and their JSON/CSV serialization.  Machine formats print
// every number with 17 significant digits so reruns are byte-comparable and
// values round-trip exactly.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace pkspecial::verifier {

enum class Verdict { PASS, PASS_WITH_NOTE, FAIL };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::PASS_WITH_NOTE: return "PASS_WITH_NOTE";
        case Verdict::FAIL: return "FAIL";
    }
    return "FAIL";
}

struct Violation {
    std::string point;
    double margin = 0.0;
};

struct CheckReport {
    std::string check_id;
    long samples = 0;
    double worst_margin = 0.0;
    std::vector<Violation> violations;
    Verdict verdict = Verdict::PASS;
    std::string note;
};

struct Summary {
    long total = 0;
    long pass = 0;
    long pass_with_note = 0;
    long fail = 0;
};

struct RunAllResult {
    std::vector<CheckReport> reports;
    Summary summary;
    double tol = 0.0;
    unsigned long long seed = 0;
};

namespace detail {

inline std::string format_double(double v, const char* spec = "%.17g") {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace detail

inline std::string to_json(const RunAllResult& result) {
    using detail::format_double;
    using detail::json_escape;
    std::string out = "{\n  \"summary\": {";
    out += "\"total\": " + std::to_string(result.summary.total);
    out += ", \"pass\": " + std::to_string(result.summary.pass);
    out += ", \"pass_with_note\": " + std::to_string(result.summary.pass_with_note);
    out += ", \"fail\": " + std::to_string(result.summary.fail);
    out += ", \"tol\": " + format_double(result.tol);
    out += ", \"seed\": " + std::to_string(result.seed);
    out += "},\n  \"checks\": [\n";
    for (size_t i = 0; i < result.reports.size(); ++i) {
        const auto& r = result.reports[i];
        out += "    {\"check_id\": \"" + json_escape(r.check_id) + "\"";
        out += ", \"samples\": " + std::to_string(r.samples);
        out += ", \"worst_margin\": " + format_double(r.worst_margin);
        out += ", \"verdict\": \"" + std::string(to_string(r.verdict)) + "\"";
        out += ", \"note\": \"" + json_escape(r.note) + "\"";
        out += ", \"violations\": [";
        for (size_t j = 0; j < r.violations.size(); ++j) {
            out += "{\"point\": \"" + json_escape(r.violations[j].point) + "\"";
            out += ", \"margin\": " + format_double(r.violations[j].margin) + "}";
            if (j + 1 < r.violations.size()) out += ", ";
        }
        out += "]}";
        out += (i + 1 < result.reports.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string to_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check_id,samples,worst_margin,verdict\n";
    for (const auto& r : reports) {
        out += r.check_id + "," + std::to_string(r.samples) + "," +
               detail::format_double(r.worst_margin) + "," + to_string(r.verdict) +
               "\n";
    }
    return out;
}

}  // namespace pkspecial::verifier
