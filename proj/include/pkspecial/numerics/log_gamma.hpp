#pragma once

// Reference log-gamma: Stirling's series with Bernoulli coefficients, with
// an upward recurrence shift below x = 12.  Relative accuracy ~1e-14 on
// (0, inf); verified against quadrature in the test suite.  Kept free of
// std::lgamma, which writes the global signgam and so is not reentrant.

#include <cmath>
#include <stdexcept>

namespace pkspecial::numerics {

inline constexpr double kEulerGamma = 0.5772156649015328606065121;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594;

inline double log_gamma_classic(double x) {
    if (!(x > 0.0)) throw std::domain_error("x must be > 0");
    double shift = 0.0;
    while (x < 12.0) {
        shift -= std::log(x);
        x += 1.0;
    }
    // B_{2j} / (2j (2j-1)) for j = 1..8
    static constexpr double kStirling[] = {
        1.0 / 12.0,      -1.0 / 360.0,     1.0 / 1260.0,     -1.0 / 1680.0,
        1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,     -3617.0 / 122400.0};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return shift + (x - 0.5) * std::log(x) - x + 0.5 * kLogTwoPi + series;
}

}  // namespace pkspecial::numerics
