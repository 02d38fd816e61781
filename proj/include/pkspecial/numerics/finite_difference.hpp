#pragma once

// Central finite differences, orders 1..4, O(h^2) truncation error.

#include <cmath>
#include <stdexcept>

namespace pkspecial::numerics {

template <class F>
double finite_difference(F&& f, double x, int order, double h) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("finite_difference order must be in 1..4");
    if (!(h > 0.0)) throw std::invalid_argument("h must be > 0");
    auto eval = [&](double t) {
        const double v = f(t);
        if (!std::isfinite(v))
            throw std::invalid_argument(
                "finite_difference stencil left the domain of f");
        return v;
    };
    switch (order) {
        case 1:
            return (eval(x + h) - eval(x - h)) / (2.0 * h);
        case 2:
            return (eval(x + h) - 2.0 * eval(x) + eval(x - h)) / (h * h);
        case 3:
            return (eval(x + 2 * h) - 2.0 * eval(x + h) + 2.0 * eval(x - h) -
                    eval(x - 2 * h)) /
                   (2.0 * h * h * h);
        default:
            return (eval(x + 2 * h) - 4.0 * eval(x + h) + 6.0 * eval(x) -
                    4.0 * eval(x - h) + eval(x - 2 * h)) /
                   (h * h * h * h);
    }
}

}  // namespace pkspecial::numerics
