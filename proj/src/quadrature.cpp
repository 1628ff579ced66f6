#include "ldg4/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"

namespace ldg4 {

Quadrature gauss_legendre(int n) {
    if (n < 1) {
        throw InvalidArgument("gauss_legendre: need at least one point");
    }
    Quadrature q;
    q.order = n;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const double p = legendre_eval(n, x);
            dp = legendre_eval(n, x, 1);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        dp = legendre_eval(n, x, 1);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        q.nodes[lo] = -x;
        q.nodes[hi] = x;
        q.weights[lo] = w;
        q.weights[hi] = w;
    }
    if (n % 2 == 1) {
        q.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return q;
}

}  // namespace ldg4
