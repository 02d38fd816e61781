#pragma once

// Chaudhry-Zubair gamma function, its p-k extension and v-extension, their
// (ln t)^n-weighted derivatives, and the recurrence/reflection residuals.
// All evaluation is by quadrature; the regularizing e^{-c/t} factor makes
// negative arguments admissible when c > 0.

#include <cmath>
#include <optional>
#include <stdexcept>

#include "pkspecial/pk_gamma.hpp"

namespace pkspecial {

/// The regularizing parameter c together with the (p, k) deformation.
struct CZParams {
    double c = 0.0;
    PKParams pk{};
};

/// Parameters of the v-extended variant: integrand t^{z-1} e^{-t^v/v - b^v t^{-v}/v}.
struct VExtParams {
    double b = 0.0;
    double v = 1.0;
};

inline void validate(const CZParams& prm) {
    if (!(prm.c >= 0.0)) throw std::domain_error("c must be >= 0");
    validate(prm.pk);
}

inline void validate(const VExtParams& prm) {
    if (!(prm.b >= 0.0)) throw std::domain_error("b must be >= 0");
    if (!(prm.v > 0.0)) throw std::domain_error("v must be > 0");
}

inline constexpr int kMaxCZDerivOrder = 8;

namespace detail {

// Integrates (ln t)^n t^{x-1} e^{w(t)} over (0, inf), split at t = 1 so each
// piece of the (ln t)^n weight has a single sign.  `w` must decay at both
// ends strongly enough for convergence (guaranteed by the callers' domains).
template <class W>
double ln_weighted_integral(int n, double x, W&& w, bool regularized,
                            const numerics::QuadratureSettings& settings) {
    std::optional<double> alpha;
    if (!regularized && x < 1.0) alpha = x;
    auto lower = [&, n, x](double t) {
        const double lt = std::log(t);
        return std::pow(lt, n) * std::exp((x - 1.0) * lt + w(t));
    };
    auto r1 = numerics::integrate_finite(lower, 0.0, 1.0, alpha, settings);
    if (!r1.converged)
        throw numerics::evaluation_error("CZ-gamma integral did not converge", x);
    if (n == 0) {
        auto upper0 = [&, x](double s) {
            const double t = 1.0 + s;
            return std::exp((x - 1.0) * std::log(t) + w(t));
        };
        auto r2 = numerics::integrate_semi_infinite(upper0, {}, settings);
        if (!r2.converged)
            throw numerics::evaluation_error("CZ-gamma integral did not converge", x);
        return r1.value + r2.value;
    }
    auto upper = [&, n, x](double s) {
        const double t = 1.0 + s;
        const double lt = std::log(t);
        return std::pow(lt, n) * std::exp((x - 1.0) * lt + w(t));
    };
    auto r2 = numerics::integrate_semi_infinite(upper, {}, settings);
    if (!r2.converged)
        throw numerics::evaluation_error("CZ-gamma integral did not converge", x);
    return r1.value + r2.value;
}

}  // namespace detail

/// Ordinary CZ gamma: int t^{x-1} e^{-t-c/t} dt.  Requires x > 0 when c = 0.
inline double cz_gamma_deriv(int n, double x, double c,
                             const numerics::QuadratureSettings& settings = {}) {
    if (!(c >= 0.0)) throw std::domain_error("c must be >= 0");
    if (c == 0.0 && !(x > 0.0))
        throw std::domain_error("x must be > 0 when c = 0");
    if (n < 0 || n > kMaxCZDerivOrder)
        throw std::domain_error("derivative order n must be in 0..8");
    auto w = [=](double t) { return -t - (c == 0.0 ? 0.0 : c / t); };
    return detail::ln_weighted_integral(n, x, w, c > 0.0, settings);
}

inline double cz_gamma(double x, double c,
                       const numerics::QuadratureSettings& settings = {}) {
    return cz_gamma_deriv(0, x, c, settings);
}

/// p-k extension: integrand t^{x-1} exp(-t^k/p - c p / t^k).
inline double ext_cz_gamma_deriv(int n, double x, const CZParams& prm,
                                 const numerics::QuadratureSettings& settings = {}) {
    validate(prm);
    require_positive_x(x);
    if (n < 0 || n > kMaxCZDerivOrder)
        throw std::domain_error("derivative order n must be in 0..8");
    const double c = prm.c, p = prm.pk.p, k = prm.pk.k;
    auto w = [=](double t) {
        const double tk = std::pow(t, k);
        return -tk / p - (c == 0.0 ? 0.0 : c * p / tk);
    };
    return detail::ln_weighted_integral(n, x, w, c > 0.0, settings);
}

inline double ext_cz_gamma(double x, const CZParams& prm,
                           const numerics::QuadratureSettings& settings = {}) {
    return ext_cz_gamma_deriv(0, x, prm, settings);
}

/// v-extension: integrand t^{z-1} exp(-t^v/v - b^v t^{-v}/v).
inline double v_ext_cz_gamma_deriv(int n, double z, const VExtParams& prm,
                                   const numerics::QuadratureSettings& settings = {}) {
    validate(prm);
    if (prm.b == 0.0 && !(z > 0.0))
        throw std::domain_error("z must be > 0 when b = 0");
    if (n < 0 || n > kMaxCZDerivOrder)
        throw std::domain_error("derivative order n must be in 0..8");
    const double b = prm.b, v = prm.v;
    const double bv = std::pow(b, v);
    auto w = [=](double t) {
        const double tv = std::pow(t, v);
        return -tv / v - (b == 0.0 ? 0.0 : bv / (tv * v));
    };
    return detail::ln_weighted_integral(n, z, w, b > 0.0, settings);
}

inline double v_ext_cz_gamma(double z, const VExtParams& prm,
                             const numerics::QuadratureSettings& settings = {}) {
    return v_ext_cz_gamma_deriv(0, z, prm, settings);
}

/// Relative residual of Gamma_c(x+1) = x Gamma_c(x) + c Gamma_c(x-1).
inline double check_recurrence_5_2(double x, double c,
                                   const numerics::QuadratureSettings& settings = {}) {
    if (c == 0.0 && !(x > 1.0))
        throw std::domain_error("x must be > 1 when c = 0");
    const double lhs = cz_gamma(x + 1.0, c, settings);
    const double rhs = x * cz_gamma(x, c, settings) +
                       (c == 0.0 ? 0.0 : c * cz_gamma(x - 1.0, c, settings));
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

/// Relative residual of Gamma_c(-x) = c^{-x} Gamma_c(x); needs c > 0.
inline double check_reflection_5_3(double x, double c,
                                   const numerics::QuadratureSettings& settings = {}) {
    if (!(c > 0.0)) throw std::domain_error("c must be > 0");
    const double lhs = cz_gamma(-x, c, settings);
    const double rhs = std::pow(c, -x) * cz_gamma(x, c, settings);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

}  // namespace pkspecial
