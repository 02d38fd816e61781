#pragma once

// Registry checks for the gamma-family identities and the Nielsen-beta
// structural results (sections 1 and 4).  Each function records margins into
// a CheckContext; margin conventions are noted per check.

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "pkspecial/nielsen_beta.hpp"
#include "pkspecial/pk_gamma.hpp"
#include "pkspecial/verifier/grid.hpp"

namespace pkspecial::verifier::checks {

using detail::point_str;

inline const std::vector<double> kDefaultXs{0.3, 0.7, 1.0, 2.0, 5.0};
inline const std::vector<double> kDefaultPKs{0.5, 1.0, 2.0, 3.0};

inline void for_each_pk(const CheckContext& ctx,
                        const std::function<void(PKParams)>& body) {
    for (double p : ctx.reals("p", kDefaultPKs))
        for (double k : ctx.reals("k", kDefaultPKs)) body(PKParams{p, k});
}

// --- section 1 -------------------------------------------------------------

inline void eq_1_3_value(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        ctx.sample(point_str({{"p", prm.p}, {"k", prm.k}}),
                   -check_identity_1_3(prm));
    });
}

inline void eq_1_4_continuation_probe(CheckContext& ctx) {
    double worst = 0.0;
    for_each_pk(ctx, [&](PKParams prm) {
        for (double f : {0.2, 0.5, 0.8}) {
            const double x = f * prm.k;
            const double ratio = check_identity_1_4_ratio(x, prm);
            worst = std::max(worst, std::abs(ratio + 1.0));
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(ratio + 1.0));
        }
    });
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "continuation gives -pi/(xk sin(pi x/k)); measured "
                  "lhs/rhs_paper = -1 within %.2e; paper's sign is not asserted",
                  worst);
    ctx.note(buf);
}

inline void eq_1_5_reflection(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (int i = 1; i <= 10; ++i) {
            const double x = prm.k * i / 11.0;
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -check_identity_1_5(x, prm));
        }
    });
}

inline void eq_1_6_multiplication(CheckContext& ctx) {
    for (long m : ctx.ints("m", {2, 3}))
        for_each_pk(ctx, [&](PKParams prm) {
            for (double x : ctx.reals("x", kDefaultXs))
                ctx.sample(point_str({{"m", static_cast<double>(m)},
                                      {"x", x},
                                      {"p", prm.p},
                                      {"k", prm.k}}),
                           -check_identity_1_6(static_cast<int>(m), x, prm));
        });
}

inline void eq_1_7_consistency(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", {0.3, 1.0, 2.5, 7.0})) {
            const double closed = pk_gamma(x, prm);
            const double quad = pk_gamma_quadrature(x, prm).value;
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(closed - quad) / std::abs(closed));
        }
    });
}

inline void eq_4_4_weierstrass(CheckContext& ctx) {
    const long N = ctx.ints("N", {100000}).front();
    const double band = 1e-3;
    double worst_displayed = 0.0;
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", {0.5, 1.0, 2.0})) {
            const double res = check_weierstrass_4_4(x, prm, N);
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       band - res);
            // the display's extra 1/k factor; exact form only at k = 1
            worst_displayed = std::max(worst_displayed, std::abs(1.0 / prm.k - 1.0));
        }
    });
    if (worst_displayed > 0)
        ctx.note(
            "display carries a spurious 1/k on the product prefactor "
            "(x/(k p^{x/k}) instead of x p^{-x/k}); the corrected form is "
            "checked and is the one whose log-derivative gives the digamma series");
}

// --- section 4: digamma ----------------------------------------------------

inline void eq_4_5_6_digamma_forms(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", kDefaultXs)) {
            const double form45 = pk_digamma(x, prm);
            // Eq 4.6: (ln p - gamma)/k + sum (1/(nk+k) - 1/(nk+x))
            const double k = prm.k;
            auto term = [=](long n) {
                const double nk = static_cast<double>(n) * k;
                return std::abs(x - k) / ((nk + k) * (nk + x));
            };
            auto s = numerics::sum_paired_series(term);
            const double signum = x >= k ? 1.0 : -1.0;
            const double form46 = (std::log(prm.p) - numerics::kEulerGamma) / k +
                                  signum * s.value;
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(form45 - form46));
        }
    });
}

inline void eq_4_7_p_invariance(CheckContext& ctx) {
    for (double k : ctx.reals("k", kDefaultPKs))
        for (double x : ctx.reals("x", kDefaultXs))
            for (double y : ctx.reals("y", {0.5, 2.0})) {
                if (x == y) continue;
                const double d1 = pk_digamma(x, {0.5, k}) - pk_digamma(y, {0.5, k});
                const double d2 = pk_digamma(x, {1.0, k}) - pk_digamma(y, {1.0, k});
                const double d3 = pk_digamma(x, {4.0, k}) - pk_digamma(y, {4.0, k});
                ctx.sample(point_str({{"x", x}, {"y", y}, {"k", k}}),
                           -std::max(std::abs(d1 - d2), std::abs(d1 - d3)));
            }
}

// --- section 4: beta representations and identities ------------------------

inline void eq_4_8_11_representations(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", {0.2, 0.5, 1.0, 2.0, 5.0})) {
            const double series = pk_beta(x, prm, BetaRepresentation::PairedSeries);
            double worst = 0.0;
            for (auto repr : {BetaRepresentation::DigammaForm,
                              BetaRepresentation::SemiInfiniteIntegral,
                              BetaRepresentation::FiniteIntegral})
                worst = std::max(worst, std::abs(pk_beta(x, prm, repr) - series));
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}), -worst);
        }
    });
}

inline void eq_4_12_functional(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", {0.2, 0.5, 1.0, 2.0, 5.0}))
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(pk_beta(x + prm.k, prm) + pk_beta(x, prm) -
                                 prm.p / x));
    });
}

inline void eq_4_13_reflection_dual(CheckContext& ctx) {
    double worst_factor = 0.0;
    bool asymmetric = false;
    for_each_pk(ctx, [&](PKParams prm) {
        for (double f : {0.2, 0.5, 0.8}) {
            const double x = f * prm.k;
            const auto probe = reflection_check(x, prm);
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(probe.lhs - probe.rhs_scaled));
            if (prm.p != prm.k) {
                asymmetric = true;
                worst_factor =
                    std::max(worst_factor,
                             std::abs(probe.rhs_paper / probe.lhs - prm.p / prm.k));
            }
        }
    });
    if (asymmetric) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "lhs matches rhs_scaled = (p/k) pi/sin(pi x/k); the displayed "
                      "p^2/k^2 form deviates by the factor p/k (|rhs_paper/lhs - "
                      "p/k| <= %.2e)",
                      worst_factor);
        ctx.note(buf);
    }
}

inline void eq_4_17_digamma_reflection_probe(CheckContext& ctx) {
    double worst_displayed = 0.0;
    for_each_pk(ctx, [&](PKParams prm) {
        for (double f : {0.2, 0.4, 0.7}) {
            const double x = f * prm.k;
            const double cot = std::cos(M_PI * f) / std::sin(M_PI * f);
            const double diff = pk_digamma(x, prm) - pk_digamma(prm.k - x, prm);
            // log-differentiating the reflection identity yields a difference
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}}),
                       -std::abs(diff + M_PI / prm.k * cot));
            const double sum = pk_digamma(x, prm) + pk_digamma(prm.k - x, prm);
            worst_displayed = std::max(
                worst_displayed,
                std::abs(sum - prm.p / (prm.k * prm.k) * M_PI * cot));
        }
    });
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "the claim displays a SUM equal to (p/k^2) pi cot(pi x/k); the "
                  "identity that holds is the DIFFERENCE psi(x)-psi(k-x) = "
                  "-(pi/k)cot(pi x/k) (displayed-form residual up to %.2e)",
                  worst_displayed);
    ctx.note(buf);
}

// --- section 4: derivatives ------------------------------------------------

inline void eq_4_23_25_deriv_representations(CheckContext& ctx) {
    numerics::QuadratureSettings tight{1e-13, 1e-11, 2000};
    for (long n : ctx.ints("n", {1, 2, 3}))
        for (double p : ctx.reals("p", {0.5, 2.0}))
            for (double k : ctx.reals("k", {0.5, 2.0}))
                for (double x : ctx.reals("x", {0.5, 1.0, 2.0, 5.0})) {
                    const PKParams prm{p, k};
                    const int ni = static_cast<int>(n);
                    const double series = pk_beta_deriv(ni, x, prm);
                    const double semi =
                        pk_beta_deriv_quadrature(ni, x, prm, true, tight).value;
                    const double fin =
                        pk_beta_deriv_quadrature(ni, x, prm, false, tight).value;
                    const double scale = std::max(1.0, std::abs(series));
                    const double worst = std::max(std::abs(series - semi),
                                                  std::abs(series - fin));
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"x", x},
                                          {"p", p},
                                          {"k", k}}),
                               -worst / scale);
                }
}

inline void eq_4_26_deriv_recurrence(CheckContext& ctx) {
    for (long n : ctx.ints("n", {1, 2, 3}))
        for_each_pk(ctx, [&](PKParams prm) {
            double factorial = 1.0;
            for (long i = 2; i <= n; ++i) factorial *= i;
            for (double x : ctx.reals("x", kDefaultXs)) {
                const int ni = static_cast<int>(n);
                const double lhs = pk_beta_deriv(ni, x + prm.k, prm);
                const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * factorial * prm.p /
                                       std::pow(x, n + 1.0) -
                                   pk_beta_deriv(ni, x, prm);
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"x", x},
                                      {"p", prm.p},
                                      {"k", prm.k}}),
                           -std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            }
        });
}

inline void thm_4_5_sign_monotone(CheckContext& ctx) {
    const auto xs = ctx.reals("x", kDefaultXs);
    for (long n : ctx.ints("n", {0, 1, 2, 3}))
        for_each_pk(ctx, [&](PKParams prm) {
            double prev = 0.0;
            for (size_t i = 0; i < xs.size(); ++i) {
                const double v =
                    pk_beta_abs(static_cast<int>(n), xs[i], prm);
                ctx.sample_strict(point_str({{"n", static_cast<double>(n)},
                                             {"x", xs[i]},
                                             {"p", prm.p},
                                             {"k", prm.k}}),
                                  v);
                if (i > 0)
                    ctx.sample_strict(
                        point_str({{"n", static_cast<double>(n)},
                                   {"x", xs[i]},
                                   {"xprev", xs[i - 1]},
                                   {"k", prm.k}}),
                        prev - v);
                prev = v;
            }
        });
}

inline void eq_4_30_logconvex(CheckContext& ctx) {
    const std::pair<double, double> rs[] = {{2.0, 2.0}, {3.0, 1.5}};
    for (auto [r, s] : rs)
        for_each_pk(ctx, [&](PKParams prm) {
            for (double x : ctx.reals("x", kDefaultXs))
                for (double y : ctx.reals("y", kDefaultXs)) {
                    const double lhs = pk_beta(x / r + y / s, prm);
                    const double rhs = std::pow(pk_beta(x, prm), 1.0 / r) *
                                       std::pow(pk_beta(y, prm), 1.0 / s);
                    ctx.sample(point_str({{"r", r},
                                          {"x", x},
                                          {"y", y},
                                          {"p", prm.p},
                                          {"k", prm.k}}),
                               rhs - lhs);
                }
        });
}

inline void eq_4_35_36_gradient_forms(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        const auto xs = ctx.reals("x", kDefaultXs);
        for (double x : xs) {
            for (double y : xs) {
                if (!(x > y)) continue;
                const double lhs =
                    std::pow(pk_beta(x, prm) / pk_beta(y, prm), 1.0 / (x - y));
                const double rhs =
                    std::exp(pk_beta_deriv(1, y, prm) / pk_beta(y, prm));
                ctx.sample(point_str({{"x", x}, {"y", y}, {"p", prm.p}, {"k", prm.k}}),
                           lhs - rhs);
            }
            // second form at y = x (the display's free y is a typo; as the
            // log-convexity consequence it is the same-point inequality)
            const double margin = pk_beta_deriv(2, x, prm) * pk_beta(x, prm) -
                                  std::pow(pk_beta_deriv(1, x, prm), 2.0);
            ctx.sample(point_str({{"x", x}, {"p", prm.p}, {"k", prm.k}, {"form", 36}}),
                       margin);
        }
    });
}

inline void eq_4_37_scaling_dual(CheckContext& ctx) {
    double worst_second = 0.0;
    bool scaled = false;
    for (long n : ctx.ints("n", {0, 1, 2}))
        for_each_pk(ctx, [&](PKParams prm) {
            for (double x : {0.4, 1.7}) {
                const auto probe =
                    scaling_relation_check(static_cast<int>(n), x, prm);
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"x", x},
                                      {"p", prm.p},
                                      {"k", prm.k}}),
                           -std::abs(probe.ratio_first - prm.p / prm.k));
                if (n == 0) {
                    // second equality probe: beta(x;p,k)/beta(x/k) is p/k, not p
                    ctx.sample(point_str({{"n", 0.0},
                                          {"x", x},
                                          {"p", prm.p},
                                          {"k", prm.k},
                                          {"second", 1.0}}),
                               -std::abs(probe.ratio_second - prm.p / prm.k));
                    if (prm.k != 1.0) {
                        scaled = true;
                        worst_second = std::max(
                            worst_second,
                            std::abs(probe.ratio_second / prm.p - 1.0 / prm.k));
                    }
                }
            }
        });
    if (scaled) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "first equality holds with ratio p/k; the second equality's "
                      "displayed constant p is off by the factor k (measured "
                      "ratio/p = 1/k within %.2e)",
                      worst_second);
        ctx.note(buf);
    }
}

inline void eq_4_40_subadditive(CheckContext& ctx) {
    // the alternative constant p*ln2 (without /k) is what the displayed
    // second scaling equality would imply; probed and recorded, not asserted
    double worst_alt = std::numeric_limits<double>::infinity();
    bool alt_probed = false;
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", kDefaultXs))
            for (double y : ctx.reals("y", kDefaultXs)) {
                const double product =
                    pk_beta(x + prm.k, prm) * pk_beta(y + prm.k, prm);
                const double sum_val = pk_beta(x + y + prm.k, prm);
                ctx.sample(point_str({{"x", x}, {"y", y}, {"p", prm.p}, {"k", prm.k}}),
                           prm.p * std::log(2.0) / prm.k * sum_val - product);
                if (prm.k != 1.0) {
                    alt_probed = true;
                    worst_alt = std::min(
                        worst_alt, prm.p * std::log(2.0) * sum_val - product);
                }
            }
    });
    if (alt_probed) {
        char buf[224];
        std::snprintf(buf, sizeof buf,
                      "the (p ln2 / k) constant holds everywhere; the constant "
                      "p ln2 implied by the displayed scaling relation reaches "
                      "margin %.3g on this grid (it fails for k < 1)",
                      worst_alt);
        ctx.note(buf);
    }
}

inline void eq_4_43_total_positivity(CheckContext& ctx) {
    for_each_pk(ctx, [&](PKParams prm) {
        for (double x : ctx.reals("x", {0.3, 1.0, 2.0}))
            for (double y : ctx.reals("y", {0.5, 2.0}))
                for (double z : ctx.reals("z", {0.7, 3.0})) {
                    const double margin =
                        pk_beta(x, prm) * pk_beta(x + y + z, prm) -
                        pk_beta(x + y, prm) * pk_beta(x + z, prm);
                    ctx.sample_strict(
                        point_str({{"x", x}, {"y", y}, {"z", z}, {"p", prm.p}, {"k", prm.k}}),
                        margin);
                }
    });
}

inline void eq_4_44_power_ratio(CheckContext& ctx) {
    const auto xs = ctx.reals("x", {0.0, 0.25, 0.5, 0.75, 1.0});
    for_each_pk(ctx, [&](PKParams prm) {
        auto ratio = [&](double a, double x) {
            return std::pow(pk_beta(x + prm.k, prm), a) /
                   pk_beta(a * x + prm.k, prm);
        };
        for (double a : ctx.reals("a", {1.5, 3.0})) {
            const double lo = ratio(a, 1.0);
            const double up = std::pow(prm.p / prm.k * std::log(2.0), a - 1.0);
            for (double x : xs) {
                const double mid = ratio(a, x);
                ctx.sample(point_str({{"a", a}, {"x", x}, {"p", prm.p}, {"k", prm.k}}),
                           std::min(mid - lo, up - mid));
            }
        }
        for (double a : {0.3, 0.8}) {  // reversed regime
            const double lo = ratio(a, 1.0);
            const double up = std::pow(prm.p / prm.k * std::log(2.0), a - 1.0);
            for (double x : xs) {
                const double mid = ratio(a, x);
                ctx.sample(point_str({{"a", a}, {"x", x}, {"p", prm.p}, {"k", prm.k}}),
                           std::min(lo - mid, mid - up));
            }
        }
    });
}

inline void eq_4_46_abs_recurrence(CheckContext& ctx) {
    for (long n : ctx.ints("n", {1, 2, 3}))
        for_each_pk(ctx, [&](PKParams prm) {
            double factorial = 1.0;
            for (long i = 2; i <= n; ++i) factorial *= i;
            for (double x : ctx.reals("x", kDefaultXs)) {
                const int ni = static_cast<int>(n);
                const double lhs = pk_beta_abs(ni, x + prm.k, prm);
                const double rhs = factorial * prm.p / std::pow(x, n + 1.0) -
                                   pk_beta_abs(ni, x, prm);
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"x", x},
                                      {"p", prm.p},
                                      {"k", prm.k}}),
                           -std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            }
        });
}

inline void eq_4_48_49_delta_limits(CheckContext& ctx) {
    for (long n : ctx.ints("n", {1, 2}))
        for (double p : ctx.reals("p", {0.5, 2.0}))
            for (double k : ctx.reals("k", {1.0, 2.0})) {
                const PKParams prm{p, k};
                const int ni = static_cast<int>(n);
                const double d1 = delta_n(ni, 1e-3, prm);
                const double d2 = delta_n(ni, 2e-3, prm);
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"p", p},
                                      {"k", k},
                                      {"limit", 1.0}}),
                           0.01 * p - std::abs(d1 - p));
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"p", p},
                                      {"k", k},
                                      {"slope", 1.0}}),
                           0.1 - std::abs(d2 - d1) / 1e-3);
            }
}

inline void eq_4_57_logconvex_nth(CheckContext& ctx) {
    const std::pair<double, double> rs[] = {{2.0, 2.0}, {3.0, 1.5}};
    for (long n : ctx.ints("n", {1, 2, 3}))
        for (auto [r, s] : rs)
            for_each_pk(ctx, [&](PKParams prm) {
                for (double x : ctx.reals("x", {0.3, 1.0, 5.0}))
                    for (double y : ctx.reals("y", {0.7, 2.0})) {
                        const int ni = static_cast<int>(n);
                        const double lhs = pk_beta_abs(ni, x / r + y / s, prm);
                        const double rhs =
                            std::pow(pk_beta_abs(ni, x, prm), 1.0 / r) *
                            std::pow(pk_beta_abs(ni, y, prm), 1.0 / s);
                        ctx.sample(point_str({{"n", static_cast<double>(n)},
                                              {"r", r},
                                              {"x", x},
                                              {"y", y},
                                              {"k", prm.k}}),
                                   rhs - lhs);
                    }
            });
}

inline void eq_4_62_63_nth_logconvex_forms(CheckContext& ctx) {
    for (long n : ctx.ints("n", {0, 1, 2}))
        for_each_pk(ctx, [&](PKParams prm) {
            const int ni = static_cast<int>(n);
            const auto xs = ctx.reals("x", kDefaultXs);
            for (double x : xs) {
                for (double y : xs) {
                    if (!(x > y)) continue;
                    const double fy = pk_beta_abs(ni, y, prm);
                    const double lhs =
                        std::pow(pk_beta_abs(ni, x, prm) / fy, 1.0 / (x - y));
                    const double rhs =
                        std::exp(-pk_beta_abs(ni + 1, y, prm) / fy);
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"x", x},
                                          {"y", y},
                                          {"k", prm.k}}),
                               lhs - rhs);
                }
                const double margin =
                    pk_beta_abs(ni + 2, x, prm) * pk_beta_abs(ni, x, prm) -
                    std::pow(pk_beta_abs(ni + 1, x, prm), 2.0);
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"x", x},
                                      {"k", prm.k},
                                      {"form", 63}}),
                           margin);
            }
        });
    ctx.note(
        "the display of the gradient form omits the minus sign on the "
        "log-derivative exponent (|beta^(n)| is decreasing); the corrected "
        "exponent -|beta^(n+1)|/|beta^(n)| is verified, for x > y");
}

inline void eq_4_70_superadditive(CheckContext& ctx) {
    for (long n : ctx.ints("n", {0, 1, 2}))
        for_each_pk(ctx, [&](PKParams prm) {
            for (double x : ctx.reals("x", kDefaultXs))
                for (double y : ctx.reals("y", {0.5, 2.0})) {
                    const int ni = static_cast<int>(n);
                    const double margin = pk_beta_abs(ni, x, prm) +
                                          pk_beta_abs(ni, y, prm) -
                                          pk_beta_abs(ni, x + y, prm);
                    ctx.sample_strict(point_str({{"n", static_cast<double>(n)},
                                                 {"x", x},
                                                 {"y", y},
                                                 {"k", prm.k}}),
                                      margin);
                }
        });
}

inline void eq_4_71_72_scaling(CheckContext& ctx) {
    for (long n : ctx.ints("n", {0, 1, 2}))
        for_each_pk(ctx, [&](PKParams prm) {
            const int ni = static_cast<int>(n);
            for (double x : ctx.reals("x", kDefaultXs)) {
                for (double a : ctx.reals("a", {1.5, 3.0}))
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"a", a},
                                          {"x", x},
                                          {"k", prm.k}}),
                               a * pk_beta_abs(ni, x, prm) -
                                   pk_beta_abs(ni, a * x, prm));
                for (double a : {0.3, 0.8})
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"a", a},
                                          {"x", x},
                                          {"k", prm.k}}),
                               pk_beta_abs(ni, a * x, prm) -
                                   a * pk_beta_abs(ni, x, prm));
            }
        });
}

inline void eq_4_73_product_arg(CheckContext& ctx, std::vector<long> orders) {
    for (long n : orders)
        for_each_pk(ctx, [&](PKParams prm) {
            const int ni = static_cast<int>(n);
            for (double x : ctx.reals("x", kDefaultXs))
                for (double y : ctx.reals("y", {1.0, 2.0, 5.0})) {
                    const double margin = pk_beta_abs(ni, x, prm) +
                                          pk_beta_abs(ni, y, prm) -
                                          pk_beta_abs(ni, x * y, prm);
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"x", x},
                                          {"y", y},
                                          {"k", prm.k}}),
                               margin);
                }
        });
}

inline void eq_4_79_mult_convex_triple(CheckContext& ctx) {
    const auto xs = ctx.reals("x", kDefaultXs);
    double worst_logconvex = std::numeric_limits<double>::infinity();
    for (long n : ctx.ints("n", {1, 3}))
        for (double k : ctx.reals("k", {1.0, 2.0})) {
            const PKParams prm{1.0, k};
            const int ni = static_cast<int>(n);
            for (size_t i = 0; i < xs.size(); ++i)
                for (size_t j = i + 1; j < xs.size(); ++j)
                    for (size_t l = j + 1; l < xs.size(); ++l) {
                        const double u1 = std::log(xs[i]), u2 = std::log(xs[j]),
                                     u3 = std::log(xs[l]);
                        const double g1 = std::log(pk_beta_abs(ni, xs[i], prm));
                        const double g2 = std::log(pk_beta_abs(ni, xs[j], prm));
                        const double g3 = std::log(pk_beta_abs(ni, xs[l], prm));
                        const double det =
                            g1 * (u3 - u2) + g3 * (u2 - u1) - g2 * (u3 - u1);
                        ctx.sample(point_str({{"n", static_cast<double>(n)},
                                              {"x1", xs[i]},
                                              {"x2", xs[j]},
                                              {"x3", xs[l]},
                                              {"k", k}}),
                                   det);
                        // what the claim's own Hölder computation does prove
                        const double det_x = g1 * (xs[l] - xs[j]) +
                                             g3 * (xs[j] - xs[i]) -
                                             g2 * (xs[l] - xs[i]);
                        worst_logconvex = std::min(worst_logconvex, det_x);
                    }
        }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "claim is false: |beta^(n)| is strictly decreasing, so the "
                  "log-convex-and-increasing lemma does not apply and the "
                  "log-log determinant goes negative; ordinary log-convexity "
                  "(what the Hölder step proves) holds on the same triples "
                  "(worst margin %.3g)",
                  worst_logconvex);
    ctx.note(buf);
}

inline void eq_4_80_majorization(CheckContext& ctx) {
    // families multiplicatively majorizing with equal total products
    const std::vector<std::array<double, 3>> fam_x = {{4.0, 2.0, 1.0},
                                                      {3.0, 1.0, 0.5}};
    const std::vector<std::array<double, 3>> fam_y = {{3.0, 2.5, 16.0 / 15.0},
                                                      {2.0, 1.5, 0.5}};
    for (long n : ctx.ints("n", {1, 3}))
        for (double k : ctx.reals("k", kDefaultPKs)) {
            const PKParams prm{1.0, k};
            const int ni = static_cast<int>(n);
            for (size_t f = 0; f < fam_x.size(); ++f) {
                double lhs = 1.0, rhs = 1.0;
                for (int i = 0; i < 3; ++i) {
                    lhs *= pk_beta_abs(ni, fam_x[f][static_cast<size_t>(i)], prm);
                    rhs *= pk_beta_abs(ni, fam_y[f][static_cast<size_t>(i)], prm);
                }
                ctx.sample(point_str({{"n", static_cast<double>(n)},
                                      {"family", static_cast<double>(f)},
                                      {"k", k}}),
                           lhs / rhs - 1.0);
            }
        }
    ctx.note(
        "consequence of the (false) multiplicative-convexity theorem; the "
        "product ordering fails for wide-ratio families once n = 3 or k >= 2 "
        "even though the majorization premise holds (margins are lhs/rhs - 1)");
}

inline void eq_4_82_F_monotonicity(CheckContext& ctx) {
    constexpr double kInvE = 0.36787944117144233;
    double worst_displayed = std::numeric_limits<double>::infinity();
    bool displayed_probed = false;
    for (long n : ctx.ints("n", {0, 1, 2}))
        for (double k : ctx.reals("k", kDefaultPKs)) {
            const PKParams prm{1.0, k};
            const int ni = static_cast<int>(n);
            auto slope = [&](double a, double x) {
                // F'(x) / x^{a-1} with F(x) = x^a |beta^(n)(x)|
                return a * pk_beta_abs(ni, x, prm) -
                       x * pk_beta_abs(ni + 1, x, prm);
            };
            for (double x : ctx.reals("x", kDefaultXs)) {
                const double fn = pk_beta_abs(ni, x, prm);
                for (double a : {0.5 * (n + 1.0), n + 1.0})
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"a", a},
                                          {"x", x},
                                          {"k", k},
                                          {"dir", -1.0}}),
                               -slope(a, x) / fn);
                for (double a : {n + 1.0 + kInvE, 1.5 * (n + 1.0 + kInvE)})
                    ctx.sample(point_str({{"n", static_cast<double>(n)},
                                          {"a", a},
                                          {"x", x},
                                          {"k", k},
                                          {"dir", 1.0}}),
                               slope(a, x) / fn);
                if (k != 1.0) {
                    displayed_probed = true;
                    worst_displayed = std::min(worst_displayed,
                                           -slope(k * (n + 1.0), x) / fn);
                    worst_displayed =
                        std::min(worst_displayed,
                                 slope(k * (n + 1.0 + kInvE), x) / fn);
                }
            }
        }
    if (displayed_probed) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "the claim normalizes the thresholds by k (a/k <= n+1 "
                      "etc.), dropping a 1/k in its Eq 4.85; the k-free "
                      "thresholds a <= n+1 and a >= n+1+1/e are what hold and "
                      "are verified here; the k-normalized form reaches "
                      "margin %.3g on this grid",
                      worst_displayed);
        ctx.note(buf);
    }
}

inline void eq_4_96_H_complete_monotone(CheckContext& ctx) {
    for (long n : ctx.ints("n", {1, 2, 3}))
        for (long m : ctx.ints("m", {0, 1, 2, 3}))
            for_each_pk(ctx, [&](PKParams prm) {
                for (double x : ctx.reals("x", kDefaultXs)) {
                    const int ni = static_cast<int>(n), mi = static_cast<int>(m);
                    double margin;
                    if (mi == 0)
                        margin = x * pk_beta_abs(ni, x, prm);
                    else
                        margin = x * pk_beta_abs(ni + mi, x, prm) -
                                 mi * pk_beta_abs(ni + mi - 1, x, prm);
                    ctx.sample_strict(point_str({{"n", static_cast<double>(n)},
                                                 {"m", static_cast<double>(m)},
                                                 {"x", x},
                                                 {"p", prm.p},
                                                 {"k", prm.k}}),
                                      margin);
                }
            });
}

}  // namespace pkspecial::verifier::checks
