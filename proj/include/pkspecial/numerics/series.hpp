#pragma once

// Summation of non-negative O(n^-2) series with tail elimination.
//
// For terms with a smooth continuation the remainder after N terms has an
// Euler-Maclaurin expansion a1/N + a2/N^2 + ... (the integral comparison
// test supplies the leading a1/N, e.g. the closed-form tail integral of the
// paired beta series).  Partial sums over doubling block sizes are therefore
// Richardson-extrapolated in 1/N; the reported error estimate is the
// difference of the last two extrapolants.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pkspecial/numerics/quadrature.hpp"

namespace pkspecial::numerics {

struct SeriesSettings {
    double abs_tol = 1e-14;
    long max_terms = 10'000'000;
};

template <class Term>
IntegralResult sum_paired_series(Term&& term, const SeriesSettings& settings = {}) {
    if (!(settings.abs_tol > 0))
        throw std::invalid_argument("abs_tol must be > 0");
    constexpr int kMaxLevels = 16;
    constexpr int kMaxColumns = 9;  // deeper columns only amplify rounding

    IntegralResult res;
    double partial = 0.0;
    long n = 0;
    double best_value = 0.0;
    double best_diff = std::numeric_limits<double>::infinity();
    std::vector<double> prev, row;
    for (int level = 0; level < kMaxLevels; ++level) {
        const long block = 32L << level;
        if (block > settings.max_terms) break;
        for (; n < block; ++n) {
            const double t = term(n);
            if (!std::isfinite(t))
                throw evaluation_error("non-finite series term",
                                       static_cast<double>(n));
            partial += t;
        }
        res.evaluations = n;
        row.assign(static_cast<size_t>(level) + 1, 0.0);
        row[0] = partial;
        const int cols = std::min(level, kMaxColumns);
        for (int i = 1; i <= cols; ++i)
            row[i] = row[i - 1] +
                     (row[i - 1] - prev[i - 1]) / (std::ldexp(1.0, i) - 1.0);
        const double extrapolated = row[static_cast<size_t>(cols)];
        if (level > 0) {
            const double diff = std::abs(
                extrapolated - prev[static_cast<size_t>(std::min(level - 1, cols))]);
            if (diff <= best_diff) {
                best_diff = diff;
                best_value = extrapolated;
            }
            // divided differences amplify roundoff; this floors the
            // achievable tolerance at a small multiple of eps*|value|
            const double rounding = 256.0 *
                                    std::numeric_limits<double>::epsilon() *
                                    std::abs(extrapolated);
            res.value = best_value;
            res.error_estimate = std::max(best_diff, rounding);
            if (best_diff <= std::max(settings.abs_tol, rounding)) {
                res.converged = true;
                return res;
            }
        } else {
            best_value = extrapolated;
            res.value = extrapolated;
            res.error_estimate = std::abs(extrapolated);
        }
        prev = row;
    }
    res.converged =
        best_diff <= std::max(settings.abs_tol,
                              256.0 * std::numeric_limits<double>::epsilon() *
                                  std::abs(best_value));
    res.value = best_value;
    res.error_estimate = best_diff;
    return res;
}

}  // namespace pkspecial::numerics
