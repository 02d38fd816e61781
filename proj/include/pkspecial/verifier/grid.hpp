#pragma once

// Parameter grids for theorem checks and the margin collector shared by all
// of them.  Randomized checks draw from a generator seeded with
// seed XOR fnv1a(check_id), so a GridSpec (including its seed) pins every
// sampled point.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pkspecial/verifier/report.hpp"

namespace pkspecial::verifier {

struct GridSpec {
    std::map<std::string, std::vector<double>> reals;  // x, y, z, a, p, k, c, b, v
    std::map<std::string, std::vector<long>> ints;     // n, m, N
    long sample_count = 50;
    unsigned long long seed = 42;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

/// Deterministic uniform double in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

class CheckContext {
  public:
    CheckContext(std::string check_id, const GridSpec& grid, double tol)
        : check_id_(std::move(check_id)), grid_(grid), tol_(tol) {}

    double tol() const { return tol_; }

    std::vector<double> reals(const std::string& key,
                              std::vector<double> fallback) const {
        auto it = grid_.reals.find(key);
        return it != grid_.reals.end() && !it->second.empty() ? it->second
                                                              : fallback;
    }
    std::vector<long> ints(const std::string& key,
                           std::vector<long> fallback) const {
        auto it = grid_.ints.find(key);
        return it != grid_.ints.end() && !it->second.empty() ? it->second
                                                             : fallback;
    }
    long sample_count() const { return grid_.sample_count; }

    std::mt19937_64 rng() const {
        return std::mt19937_64(grid_.seed ^ detail::fnv1a(check_id_));
    }

    /// Records one margin; margin < -tol is a violation.
    void sample(const std::string& point, double margin) {
        ++samples_;
        if (samples_ == 1 || margin < worst_) worst_ = margin;
        if (!(margin >= -tol_)) violations_.push_back({point, margin});
    }

    /// Strict-inequality sample: the margin must exceed strict_tol.
    void sample_strict(const std::string& point, double margin,
                       double strict_tol = 1e-12) {
        ++samples_;
        if (samples_ == 1 || margin < worst_) worst_ = margin;
        if (!(margin > strict_tol)) violations_.push_back({point, margin});
    }

    /// Per-point evaluation failure: recorded, not fatal.
    void record_error(const std::string& point, const std::string& what) {
        ++samples_;
        violations_.push_back(
            {point + " [evaluation error: " + what + "]",
             -std::numeric_limits<double>::infinity()});
    }

    void note(const std::string& text) {
        if (!note_.empty()) note_ += "; ";
        note_ += text;
    }

    CheckReport finish() const {
        CheckReport r;
        r.check_id = check_id_;
        r.samples = samples_;
        r.worst_margin = samples_ ? worst_ : 0.0;
        r.violations = violations_;
        r.note = note_;
        if (!violations_.empty())
            r.verdict = Verdict::FAIL;
        else
            r.verdict = note_.empty() ? Verdict::PASS : Verdict::PASS_WITH_NOTE;
        return r;
    }

  private:
    std::string check_id_;
    const GridSpec& grid_;
    double tol_;
    long samples_ = 0;
    double worst_ = 0.0;
    std::vector<Violation> violations_;
    std::string note_;
};

namespace detail {

inline std::string point_str(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string out;
    char buf[64];
    for (const auto& [name, value] : kv) {
        if (!out.empty()) out += " ";
        std::snprintf(buf, sizeof buf, "%s=%.6g", name, value);
        out += buf;
    }
    return out;
}

}  // namespace detail

}  // namespace pkspecial::verifier
