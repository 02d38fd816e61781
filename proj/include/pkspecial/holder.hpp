#pragma once

// Combinatorial and inequality machinery: the descending-index lattice and
// its exact multinomial coefficients, the refined AM-GM chain, and the
// type-I (integral) / type-II (sum) refinement chains driven by a generic
// moment oracle M(e) = int prod |xi_k|^{e_k} dmu.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkspecial/numerics/quadrature.hpp"

namespace pkspecial::holder {

/// Conjugate exponents p_k > 1 with sum 1/p_k = 1.
struct WeightedExponents {
    std::vector<double> p;

    explicit WeightedExponents(std::vector<double> exponents) : p(std::move(exponents)) {
        if (p.size() < 2) throw std::invalid_argument("need n >= 2 exponents");
        double inv_sum = 0.0;
        for (double pk : p) {
            if (!(pk > 1.0)) throw std::invalid_argument("each exponent must be > 1");
            inv_sum += 1.0 / pk;
        }
        if (std::abs(inv_sum - 1.0) > 1e-12)
            throw std::invalid_argument("exponents must satisfy sum 1/p_k = 1");
    }
    size_t n() const { return p.size(); }
    double r0() const {
        double r = 1.0 / p[0];
        for (double pk : p) r = std::min(r, 1.0 / pk);
        return r;
    }
};

/// One tuple (i_1, ..., i_{n-1}) of the descending lattice; i_0 = m and
/// i_n = 0 are implicit.
struct LatticePoint {
    int m = 0;
    std::vector<int> indices;

    /// d_k = i_{k-1} - i_k >= 0 for k = 1..n.
    std::vector<int> differences() const {
        std::vector<int> d;
        d.reserve(indices.size() + 1);
        int prev = m;
        for (int i : indices) {
            d.push_back(prev - i);
            prev = i;
        }
        d.push_back(prev);
        return d;
    }
};

/// All tuples m >= i_1 >= ... >= i_{n-1} >= 0 in lexicographic order;
/// the count is C(m+n-1, n-1).
inline std::vector<LatticePoint> enumerate_lattice(int n, int m) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::vector<LatticePoint> out;
    std::vector<int> current(static_cast<size_t>(n) - 1, 0);
    // odometer over descending tuples
    auto emit = [&](auto&& self, int pos, int upper) -> void {
        if (pos == n - 1) {
            out.push_back(LatticePoint{m, current});
            return;
        }
        for (int v = 0; v <= upper; ++v) {
            current[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    emit(emit, 0, m);
    return out;
}

namespace detail {

inline long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("binomial product overflowed 64 bits");
    return out;
}

/// Exact C(n, r) by the Pascal-style multiplicative recurrence.
inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long value = 1;
    for (int i = 1; i <= r; ++i)
        value = checked_mul(value, n - r + i) / i;
    return value;
}

}  // namespace detail

/// C_A = prod_{k=1}^{n-1} C(i_{k-1}, i_k), including the C(i_0, i_1) factor;
/// equals the multinomial coefficient m! / prod d_k!.
inline long long coeff_CA(const LatticePoint& point) {
    long long value = 1;
    int prev = point.m;
    for (int i : point.indices) {
        if (i > prev) throw std::invalid_argument("lattice indices must descend");
        value = detail::checked_mul(value, detail::binomial(prev, i));
        prev = i;
    }
    if (prev < 0) throw std::invalid_argument("lattice indices must be >= 0");
    return value;
}

/// Absolute residual of the lattice expansion of (sum nu_k a_k)^m.
inline double check_multinomial_2_2(int n, int m, std::span<const double> nu,
                                    std::span<const double> a) {
    if (nu.size() != static_cast<size_t>(n) || a.size() != static_cast<size_t>(n))
        throw std::invalid_argument("nu and a must have length n");
    for (double w : nu)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be > 0");
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += nu[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
    const double lhs = std::pow(mean, m);
    double rhs = 0.0;
    for (const auto& point : enumerate_lattice(n, m)) {
        double term = static_cast<double>(coeff_CA(point));
        const auto d = point.differences();
        for (int k = 0; k < n; ++k)
            term *= std::pow(nu[static_cast<size_t>(k)] * a[static_cast<size_t>(k)],
                             d[static_cast<size_t>(k)]);
        rhs += term;
    }
    return std::abs(lhs - rhs);
}

/// Three members of a refinement chain together with its margins.
struct RefinementChain {
    double lower_refined = 0.0;
    double middle = 0.0;
    double upper = 0.0;
    double r0 = 0.0;
    double margin_lower = 0.0;  // middle - lower_refined
    double margin_upper = 0.0;  // upper - middle
};

struct AmGmChain {
    RefinementChain chain;
    std::vector<double> u_sequence;  // U_1 .. U_m
};

/// Refined AM-GM: prod a^nu + r0^m (sum a - n (prod a)^{1/n})
///                <= U_m = (sum nu_k a_k^{1/m})^m <= sum nu_k a_k.
inline AmGmChain refined_amgm_chain(std::span<const double> a,
                                    std::span<const double> nu, int m) {
    const size_t n = a.size();
    if (nu.size() != n || n < 2) throw std::invalid_argument("need matching a, nu with n >= 2");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    double nu_sum = 0.0, r0 = 1.0;
    for (double w : nu) {
        if (!(w > 0.0)) throw std::invalid_argument("weights must be > 0");
        nu_sum += w;
        r0 = std::min(r0, w);
    }
    if (std::abs(nu_sum - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to 1");
    double weighted_gm = 1.0, plain_gm = 1.0, arith = 0.0, total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (!(a[i] >= 0.0)) throw std::invalid_argument("a_k must be >= 0");
        weighted_gm *= std::pow(a[i], nu[i]);
        plain_gm *= std::pow(a[i], 1.0 / static_cast<double>(n));
        arith += nu[i] * a[i];
        total += a[i];
    }
    AmGmChain out;
    out.u_sequence.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += nu[i] * std::pow(a[i], 1.0 / j);
        out.u_sequence.push_back(std::pow(s, j));
    }
    auto& c = out.chain;
    c.r0 = r0;
    c.lower_refined =
        weighted_gm + std::pow(r0, m) * (total - static_cast<double>(n) * plain_gm);
    c.middle = out.u_sequence.back();
    c.upper = arith;
    c.margin_lower = c.middle - c.lower_refined;
    c.margin_upper = c.upper - c.middle;
    return out;
}

/// M(e) = int_Omega prod |xi_k|^{e_k} dmu for a non-negative exponent vector.
using MomentOracle = std::function<double(std::span<const double>)>;

namespace detail {

inline RefinementChain chain_from_moments(const WeightedExponents& weights, int m,
                                          const MomentOracle& moment) {
    const int n = static_cast<int>(weights.n());
    std::vector<double> e(static_cast<size_t>(n), 0.0);
    auto call = [&](const std::vector<double>& exponents) {
        const double v = moment(exponents);
        if (!std::isfinite(v))
            throw numerics::evaluation_error("moment oracle returned non-finite value",
                                             exponents.empty() ? 0.0 : exponents[0]);
        return v;
    };

    // norms N_k = M(p_k delta_k)^{1/p_k}
    std::vector<double> norms(static_cast<size_t>(n));
    double norm_prod = 1.0;
    for (int k = 0; k < n; ++k) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<size_t>(k)] = weights.p[static_cast<size_t>(k)];
        norms[static_cast<size_t>(k)] =
            std::pow(call(e), 1.0 / weights.p[static_cast<size_t>(k)]);
        norm_prod *= norms[static_cast<size_t>(k)];
    }

    std::fill(e.begin(), e.end(), 1.0);
    const double lhs_raw = call(e);

    for (int k = 0; k < n; ++k)
        e[static_cast<size_t>(k)] = weights.p[static_cast<size_t>(k)] / n;
    double ratio = call(e);
    for (int k = 0; k < n; ++k)
        ratio *= std::pow(norms[static_cast<size_t>(k)],
                          -weights.p[static_cast<size_t>(k)] / n);

    const double r0 = weights.r0();
    const double refinement =
        n * std::pow(r0, m) * norm_prod * (1.0 - ratio);

    double middle = 0.0;
    for (const auto& point : enumerate_lattice(n, m)) {
        const auto d = point.differences();
        double term = static_cast<double>(coeff_CA(point));
        for (int k = 0; k < n; ++k) {
            const double pk = weights.p[static_cast<size_t>(k)];
            const double dk = d[static_cast<size_t>(k)];
            term *= std::pow(pk, -dk);
            term *= std::pow(norms[static_cast<size_t>(k)], 1.0 - pk * dk / m);
            e[static_cast<size_t>(k)] = pk * dk / m;
        }
        middle += term * call(e);
    }

    RefinementChain chain;
    chain.r0 = r0;
    chain.lower_refined = lhs_raw + refinement;
    chain.middle = middle;
    chain.upper = norm_prod;
    chain.margin_lower = chain.middle - chain.lower_refined;
    chain.margin_upper = chain.upper - chain.middle;
    if (!std::isfinite(chain.lower_refined) || !std::isfinite(chain.middle) ||
        !std::isfinite(chain.upper))
        throw numerics::evaluation_error("non-finite refinement chain member", 0.0);
    return chain;
}

}  // namespace detail

/// Type-I (integral) refinement chain via the moment oracle.  Exponents use
/// the descending-difference convention d_k = i_{k-1} - i_k >= 0.
inline RefinementChain holder_chain_integral(const WeightedExponents& weights, int m,
                                             const MomentOracle& oracle) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return detail::chain_from_moments(weights, m, oracle);
}

/// Type-II (sum) chain: the discrete moment functional of an N x n matrix Q,
/// M(e) = sum_j prod_k |Q_{j,k}|^{e_k}.
inline RefinementChain holder_chain_sum(const WeightedExponents& weights, int m,
                                        const std::vector<std::vector<double>>& Q) {
    if (Q.empty()) throw std::invalid_argument("Q must have at least one row");
    const size_t n = weights.n();
    for (const auto& row : Q)
        if (row.size() != n)
            throw std::invalid_argument("each row of Q must have n entries");
    MomentOracle moment = [&Q, n](std::span<const double> e) {
        double sum = 0.0;
        for (const auto& row : Q) {
            double term = 1.0;
            for (size_t k = 0; k < n; ++k) term *= std::pow(std::abs(row[k]), e[k]);
            sum += term;
        }
        return sum;
    };
    return detail::chain_from_moments(weights, m, moment);
}

/// Young margin: alpha u + beta v - u^alpha v^beta >= 0.
inline double young_check(double u, double v, double alpha, double beta) {
    if (!(u >= 0.0 && v >= 0.0)) throw std::invalid_argument("u, v must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) ||
        std::abs(alpha + beta - 1.0) > 1e-12)
        throw std::invalid_argument("alpha, beta must lie in (0,1) with alpha+beta = 1");
    return alpha * u + beta * v - std::pow(u, alpha) * std::pow(v, beta);
}

/// Minkowski margin: ||f||_u + ||g||_u - ||f+g||_u over [a, b] (u-exponent norms).
template <class F, class G>
double minkowski_check(F&& f, G&& g, double u_exp, double a, double b) {
    if (!(u_exp >= 1.0)) throw std::invalid_argument("u_exp must be >= 1");
    auto norm = [&](auto&& h) {
        auto integrand = [&](double t) {
            return std::pow(std::abs(h(t)), u_exp);
        };
        auto r = numerics::integrate_finite(integrand, a, b, {}, {});
        if (!r.converged)
            throw numerics::evaluation_error("Minkowski norm integral did not converge", a);
        return std::pow(r.value, 1.0 / u_exp);
    };
    auto fg = [&](double t) { return f(t) + g(t); };
    return norm(f) + norm(g) - norm(fg);
}

}  // namespace pkspecial::holder
