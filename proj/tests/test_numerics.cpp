#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pkspecial/pkspecial.hpp"

using namespace pkspecial;
using namespace pkspecial::numerics;

namespace {

// Paired-series oracle for the classic Nielsen beta at argument x:
// sum over n of 1/(2n+x) - 1/(2n+x+1).  Independent of the quadrature path.
double beta_series_oracle(double x) {
    auto term = [x](long n) {
        const double b = 2.0 * n + x;
        return 1.0 / (b * (b + 1.0));
    };
    auto r = sum_paired_series(term);
    REQUIRE(r.converged);
    return r.value;
}

// High-precision fixture for int_0^inf t^{-1/2} e^{-t-1/t} dt, recorded from
// a 50-digit quadrature oracle run; agrees with sqrt(pi) e^{-2}.
constexpr double kBesselHalfFixture = 0.23987554393612289;

}  // namespace

TEST_CASE("integrate_finite elementary values", "[numerics]") {
    auto r = integrate_finite([](double t) { return 1.0 / (1.0 + t); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - std::log(2.0)) < 1e-12);
    CHECK(std::abs(r.value - std::log(2.0)) <= r.error_estimate + 1e-15);

    auto s = integrate_finite([](double t) { return 1.0 / std::sqrt(t); }, 0.0,
                              1.0, 0.5);
    CHECK(s.converged);
    CHECK(std::abs(s.value - 2.0) < 1e-12);
}

TEST_CASE("integrate_finite matches the series oracle on a beta integrand",
          "[numerics]") {
    // x = 1, k = 2: integrand t^{-1/2}/(1+t) on (0,1), value beta(1/2) = pi/2
    auto r = integrate_finite(
        [](double t) { return std::exp(-0.5 * std::log(t)) / (1.0 + t); }, 0.0,
        1.0, 0.5);
    const double oracle = beta_series_oracle(0.5);
    CHECK(r.converged);
    CHECK(std::abs(r.value - oracle) < 1e-11);
    CHECK(std::abs(r.value - M_PI / 2.0) < 1e-11);
}

TEST_CASE("integrate_finite argument and evaluation errors", "[numerics]") {
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 1.5),
                    std::invalid_argument);
    try {
        integrate_finite([](double t) { return 0.0 / (t - t); }, 0.0, 1.0);
        FAIL("expected evaluation_error");
    } catch (const evaluation_error& e) {
        CHECK(e.abscissa() >= 0.0);
        CHECK(e.abscissa() <= 1.0);
    }
}

TEST_CASE("integrate_semi_infinite elementary values", "[numerics]") {
    auto r = integrate_semi_infinite([](double t) { return std::exp(-t); });
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-12);

    auto s = integrate_semi_infinite([](double t) { return t * std::exp(-t); });
    CHECK(std::abs(s.value - 1.0) < 1e-12);
}

TEST_CASE("integrate_semi_infinite singular fixture", "[numerics]") {
    auto r = integrate_semi_infinite(
        [](double t) { return std::exp(-0.5 * std::log(t) - t - 1.0 / t); }, 0.5);
    CHECK(r.converged);
    CHECK(std::abs(r.value - kBesselHalfFixture) < 1e-11);
    // closed-form confirmation of the frozen fixture
    CHECK(std::abs(kBesselHalfFixture - std::sqrt(M_PI) * std::exp(-2.0)) < 1e-16);
}

TEST_CASE("sum_paired_series examples", "[numerics]") {
    auto ln2 = sum_paired_series([](long n) {
        return 1.0 / (2.0 * n + 1.0) - 1.0 / (2.0 * n + 2.0);
    });
    CHECK(ln2.converged);
    CHECK(std::abs(ln2.value - std::log(2.0)) < 1e-13);

    // beta(1/2) against the quadrature oracle of the defining integral
    auto half = sum_paired_series([](long n) {
        return 1.0 / (2.0 * n + 0.5) - 1.0 / (2.0 * n + 1.5);
    });
    auto quad = integrate_finite(
        [](double t) { return std::exp(-0.5 * std::log(t)) / (1.0 + t); }, 0.0,
        1.0, 0.5);
    CHECK(half.converged);
    CHECK(std::abs(half.value - quad.value) <
          half.error_estimate + quad.error_estimate + 1e-12);

    auto zero = sum_paired_series([](long) { return 0.0; });
    CHECK(zero.converged);
    CHECK(zero.value == 0.0);
}

TEST_CASE("sum_paired_series rejects non-finite terms", "[numerics]") {
    CHECK_THROWS_AS(sum_paired_series([](long n) {
                        return n == 40 ? std::numeric_limits<double>::quiet_NaN()
                                       : 0.0;
                    }),
                    evaluation_error);
}

TEST_CASE("log_gamma_classic values and contract", "[numerics]") {
    CHECK(std::abs(log_gamma_classic(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma_classic(5.0) - std::log(24.0)) < 1e-13);

    // x = 1/2 against the quadrature oracle of int t^{-1/2} e^{-t} dt
    auto r = integrate_semi_infinite(
        [](double t) { return std::exp(-0.5 * std::log(t) - t); }, 0.5);
    CHECK(std::abs(std::exp(log_gamma_classic(0.5)) - r.value) < 1e-10);
    CHECK(std::abs(log_gamma_classic(0.5) - 0.5 * std::log(M_PI)) < 1e-13);

    CHECK_THROWS_AS(log_gamma_classic(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma_classic(-2.0), std::domain_error);
}

TEST_CASE("log_gamma_classic verified against quadrature on a grid", "[numerics]") {
    for (double x : {0.4, 1.3, 2.0, 4.5, 9.0, 13.5}) {
        auto r = integrate_semi_infinite(
            [x](double t) { return std::exp((x - 1.0) * std::log(t) - t); },
            x < 1.0 ? std::optional<double>(x) : std::nullopt,
            QuadratureSettings{1e-13, 1e-12, 2000});
        const double rel =
            std::abs(std::exp(log_gamma_classic(x)) - r.value) / r.value;
        INFO("x = " << x);
        CHECK(rel < 1e-10);
    }
}

TEST_CASE("log_gamma_classic recurrence", "[numerics]") {
    for (double x : {0.5, 1.0, 2.5, 10.0}) {
        const double res =
            log_gamma_classic(x + 1.0) - log_gamma_classic(x) - std::log(x);
        INFO("x = " << x);
        CHECK(std::abs(res) < 1e-12);
    }
}

TEST_CASE("finite_difference stencils", "[numerics]") {
    CHECK(std::abs(finite_difference([](double t) { return t * t; }, 3.0, 1,
                                     1e-5) -
                   6.0) < 1e-8);
    CHECK(std::abs(finite_difference([](double t) { return t * t * t; }, 2.0, 2,
                                     1e-4) -
                   12.0) < 1e-5);
    CHECK_THROWS_AS(finite_difference([](double t) { return t; }, 0.0, 5, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(finite_difference([](double t) { return t; }, 0.0, 1, 0.0),
                    std::invalid_argument);
}

TEST_CASE("finite_difference is exact on low-degree polynomials", "[numerics]") {
    // degree order+1 has zero truncation error for a central stencil
    for (int order = 1; order <= 4; ++order) {
        const int degree = order + 1;
        auto poly = [degree](double t) {
            double v = 0.0;
            for (int j = 0; j <= degree; ++j) v += std::pow(t, j);
            return v;
        };
        // d^order/dt^order of sum_{j<=degree} t^j at t = 1
        double want = 0.0;
        for (int j = order; j <= degree; ++j) {
            double c = 1.0;
            for (int i = 0; i < order; ++i) c *= (j - i);
            want += c;
        }
        const double got = finite_difference(poly, 1.0, order, 1e-2);
        INFO("order " << order);
        CHECK(std::abs(got - want) < 1e-6);
    }
}

TEST_CASE("finite_difference reproduces the beta derivative oracle", "[numerics]") {
    // beta'(1) = -pi^2/12, with the alternating-series oracle
    // sum (-1)^{j+1}/(j+1)^2 summed in paired form
    auto deriv_oracle = sum_paired_series([](long n) {
        const double a = 2.0 * n + 1.0, b = 2.0 * n + 2.0;
        return 1.0 / (a * a) - 1.0 / (b * b);
    });
    REQUIRE(deriv_oracle.converged);
    CHECK(std::abs(deriv_oracle.value - M_PI * M_PI / 12.0) < 1e-12);

    auto beta = [](double x) { return beta_series_oracle(x); };
    const double fd = finite_difference(beta, 1.0, 1, 1e-4);
    CHECK(std::abs(fd - (-deriv_oracle.value)) < 1e-7);
}

TEST_CASE("tightening tolerances moves results by less than the estimate",
          "[numerics]") {
    QuadratureSettings base{1e-8, 1e-6, 2000};
    QuadratureSettings tight{1e-9, 1e-7, 2000};
    auto f = [](double t) { return std::exp(-t) / (1.0 + t * t); };
    auto a = integrate_semi_infinite(f, {}, base);
    auto b = integrate_semi_infinite(f, {}, tight);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(std::abs(a.value - b.value) <= a.error_estimate + 1e-16);

    SeriesSettings sb{1e-8, 10'000'000};
    SeriesSettings st{1e-9, 10'000'000};
    auto term = [](long n) {
        const double b2 = 2.0 * n + 0.7;
        return 1.0 / (b2 * (b2 + 1.0));
    };
    auto sa = sum_paired_series(term, sb);
    auto sc = sum_paired_series(term, st);
    REQUIRE(sa.converged);
    CHECK(std::abs(sa.value - sc.value) <= sa.error_estimate + 1e-16);
}

TEST_CASE("quadrature and series agree across beta-family integrands",
          "[numerics]") {
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        const double series = beta_series_oracle(x);
        auto finite = integrate_finite(
            [x](double t) { return std::exp((x - 1.0) * std::log(t)) / (1.0 + t); },
            0.0, 1.0, x < 1.0 ? std::optional<double>(x) : std::nullopt);
        auto semi = integrate_semi_infinite([x](double t) {
            return std::exp(-x * t) / (1.0 + std::exp(-t));
        });
        INFO("x = " << x);
        CHECK(std::abs(series - finite.value) < finite.error_estimate + 1e-11);
        CHECK(std::abs(series - semi.value) < semi.error_estimate + 1e-11);
    }
}

TEST_CASE("non-convergence is reported rather than silently wrong", "[numerics]") {
    // too few subdivisions for a sharply peaked integrand
    QuadratureSettings tiny{1e-14, 1e-14, 2};
    auto r = integrate_finite(
        [](double t) { return std::exp(-1000.0 * (t - 0.371) * (t - 0.371)); },
        0.0, 1.0, {}, tiny);
    CHECK_FALSE(r.converged);
}

TEST_CASE("divergent improper integrals do not converge", "[numerics]") {
    auto r = integrate_semi_infinite([](double t) { return 1.0 / (1.0 + t); });
    CHECK_FALSE(r.converged);
}

TEST_CASE("series max_terms budget is honored", "[numerics]") {
    SeriesSettings strapped{1e-14, 100};
    auto r = sum_paired_series(
        [](long n) {
            const double b = 2.0 * n + 1.0;
            return 1.0 / (b * (b + 1.0));
        },
        strapped);
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations <= 100);
}
