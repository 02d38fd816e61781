#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pkspecial/pkspecial.hpp"

using namespace pkspecial;

namespace {
// 50-digit oracle fixture for int t^{-1/2} e^{-t-1/t} dt = sqrt(pi) e^{-2}
constexpr double kCzHalfOne = 0.23987554393612289;
}  // namespace

TEST_CASE("cz_gamma reduces to the classic gamma at c = 0", "[cz_gamma]") {
    CHECK(std::abs(cz_gamma(3.0, 0.0) - 2.0) < 1e-10);
    CHECK(std::abs(cz_gamma(1.0, 0.0) - 1.0) < 1e-11);
    CHECK(std::abs(cz_gamma(0.5, 0.0) - std::sqrt(M_PI)) < 1e-10);
    CHECK_THROWS_AS(cz_gamma(-0.5, 0.0), std::domain_error);
}

TEST_CASE("cz_gamma regularized values", "[cz_gamma]") {
    CHECK(std::abs(cz_gamma(0.5, 1.0) - kCzHalfOne) < 1e-10);
    // reflection at c = 1 makes +-1/2 coincide
    CHECK(std::abs(cz_gamma(-0.5, 1.0) - kCzHalfOne) < 1e-10);
}

TEST_CASE("cz_gamma_deriv against finite-difference oracles", "[cz_gamma]") {
    CHECK(std::abs(cz_gamma_deriv(0, 1.7, 0.5) - cz_gamma(1.7, 0.5)) < 1e-12);

    const double d1 = cz_gamma_deriv(1, 1.0, 0.0);
    const double fd1 = numerics::finite_difference(
        [](double t) { return cz_gamma(t, 0.0); }, 1.0, 1, 1e-4);
    CHECK(std::abs(d1 - fd1) < 1e-6);
    CHECK(std::abs(d1 + numerics::kEulerGamma) < 1e-9);

    const double d2 = cz_gamma_deriv(2, 1.0, 0.0);
    const double fd2 = numerics::finite_difference(
        [](double t) { return cz_gamma(t, 0.0); }, 1.0, 2, 1e-3);
    CHECK(std::abs(d2 - fd2) < 1e-5);
    const double gamma2 = numerics::kEulerGamma * numerics::kEulerGamma +
                          M_PI * M_PI / 6.0;
    CHECK(std::abs(d2 - gamma2) < 1e-8);

    CHECK_THROWS_AS(cz_gamma_deriv(9, 1.0, 1.0), std::domain_error);
}

TEST_CASE("ext_cz_gamma reduction chain", "[cz_gamma]") {
    // p = k = 1 reduces to the ordinary CZ gamma
    for (double c : {0.5, 1.0, 2.0})
        for (double x : {0.5, 1.0, 2.0}) {
            INFO("c=" << c << " x=" << x);
            CHECK(std::abs(ext_cz_gamma(x, {c, {1.0, 1.0}}) - cz_gamma(x, c)) /
                      cz_gamma(x, c) <
                  1e-9);
        }
    // c = 0 reduces to the p-k gamma
    for (double p : {0.5, 2.0})
        for (double k : {1.0, 2.0})
            for (double x : {0.5, 1.0, 2.5}) {
                const double want = pk_gamma(x, {p, k});
                INFO("p=" << p << " k=" << k << " x=" << x);
                CHECK(std::abs(ext_cz_gamma(x, {0.0, {p, k}}) - want) / want <
                      1e-9);
            }
}

TEST_CASE("ext_cz_gamma change-of-variables fixture", "[cz_gamma]") {
    // u = t^2/2 maps the (c=1, p=2, k=2) integrand onto cz_gamma(1/2, 1)/sqrt(2)
    const double oracle = cz_gamma(0.5, 1.0) / std::sqrt(2.0);
    CHECK(std::abs(oracle - 0.16961762375804412) < 1e-12);
    CHECK(std::abs(ext_cz_gamma(1.0, {1.0, {2.0, 2.0}}) - oracle) < 1e-10);
}

TEST_CASE("v_ext_cz_gamma reductions", "[cz_gamma]") {
    CHECK(std::abs(v_ext_cz_gamma(4.0, {0.0, 1.0}) - 6.0) < 1e-9);
    // b = 0, v = 2, z = 2: u = t^2/2 gives int e^{-u} du = 1
    CHECK(std::abs(v_ext_cz_gamma(2.0, {0.0, 2.0}) - 1.0) < 1e-10);
    CHECK(std::abs(v_ext_cz_gamma(0.5, {1.0, 1.0}) - kCzHalfOne) < 1e-10);
    CHECK_THROWS_AS(v_ext_cz_gamma(-1.0, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(v_ext_cz_gamma(1.0, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("recurrence residuals", "[cz_gamma]") {
    CHECK(check_recurrence_5_2(2.0, 0.0) < 1e-10);
    CHECK(check_recurrence_5_2(1.5, 1.0) < 1e-8);
    for (double x : {1.2, 2.0, 3.5})
        for (double c : {0.0, 0.5, 1.0, 4.0}) {
            INFO("x=" << x << " c=" << c);
            CHECK(check_recurrence_5_2(x, c) < 1e-8);
        }
    CHECK_THROWS_AS(check_recurrence_5_2(0.5, 0.0), std::domain_error);
}

TEST_CASE("reflection residuals", "[cz_gamma]") {
    CHECK(check_reflection_5_3(0.7, 2.0) < 1e-8);
    for (double c : {0.5, 1.0, 2.0})
        for (double x : {0.3, 1.0, 2.0}) {
            INFO("c=" << c << " x=" << x);
            CHECK(check_reflection_5_3(x, c) < 1e-8);
        }
    CHECK_THROWS_AS(check_reflection_5_3(1.0, 0.0), std::domain_error);
}

TEST_CASE("ext derivative matches finite differences", "[cz_gamma]") {
    for (double c : {0.5, 2.0})
        for (double p : {1.0, 2.0})
            for (double x : {1.0, 2.0}) {
                const CZParams prm{c, {p, 1.5}};
                const double dv = ext_cz_gamma_deriv(1, x, prm);
                const double fd = numerics::finite_difference(
                    [&](double t) { return ext_cz_gamma(t, prm); }, x, 1, 1e-4);
                INFO("c=" << c << " p=" << p << " x=" << x);
                CHECK(std::abs(dv - fd) / std::max(1.0, std::abs(dv)) < 1e-5);
            }
}

TEST_CASE("log-convexity and even-derivative positivity", "[cz_gamma]") {
    for (double c : {0.5, 1.0})
        for (double p : {0.5, 2.0}) {
            const CZParams prm{c, {p, 1.0}};
            for (double x : {0.5, 1.0, 2.0})
                for (double y : {0.7, 3.0}) {
                    const double mid = ext_cz_gamma(0.5 * (x + y), prm);
                    const double rhs =
                        std::sqrt(ext_cz_gamma(x, prm) * ext_cz_gamma(y, prm));
                    INFO("x=" << x << " y=" << y);
                    CHECK(mid / rhs <= 1.0 + 1e-12);
                }
            for (double x : {0.3, 1.0, 4.0})
                CHECK(ext_cz_gamma_deriv(2, x, prm) > 0.0);
        }
}

TEST_CASE("order cap on extended derivatives", "[cz_gamma]") {
    CHECK_THROWS_AS(ext_cz_gamma_deriv(9, 1.0, {1.0, {1.0, 1.0}}),
                    std::domain_error);
    CHECK(std::isfinite(ext_cz_gamma_deriv(8, 2.0, {1.0, {1.0, 1.0}})));
}
