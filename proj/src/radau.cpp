#include "ldg4/radau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"

namespace ldg4 {

namespace {

using Poly = std::function<double(double)>;

double refine(const Poly& f, const Poly& df, double lo, double hi) {
    double flo = f(lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) {
            return x;
        }
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = d != 0.0 ? x - fx / d : lo - 1.0;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) < 1e-16 || hi - lo < 1e-16) {
            return next;
        }
        x = next;
    }
    return x;
}

// Roots in [-1, 1]: endpoint roots by tolerance, interior ones by a sign scan
// on a Chebyshev grid followed by safeguarded Newton.
std::vector<double> roots_in_unit_interval(const Poly& f, const Poly& df) {
    constexpr int grid = 4096;
    constexpr double endpoint_tol = 1e-12;
    std::vector<double> roots;
    std::vector<double> xs(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        xs[static_cast<std::size_t>(i)] = -std::cos(std::numbers::pi * i / grid);
    }
    const bool left_root = std::abs(f(-1.0)) < endpoint_tol;
    const bool right_root = std::abs(f(1.0)) < endpoint_tol;
    if (left_root) {
        roots.push_back(-1.0);
    }
    const std::size_t first = left_root ? 1 : 0;
    const std::size_t last = right_root ? grid - 1 : grid;
    double prev = f(xs[first]);
    for (std::size_t i = first + 1; i <= last; ++i) {
        const double cur = f(xs[i]);
        if (cur == 0.0) {
            roots.push_back(xs[i]);
        } else if (prev != 0.0 && (cur < 0.0) != (prev < 0.0)) {
            roots.push_back(refine(f, df, xs[i - 1], xs[i]));
        }
        prev = cur;
    }
    if (right_root) {
        roots.push_back(1.0);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

double radau_polynomial(double sigma, int k, double xi, int derivative_order) {
    const double s = 2.0 * sigma - 1.0;
    const double hi = legendre_eval(k + 1, xi, derivative_order);
    const double lo = legendre_eval(k, xi, derivative_order);
    return (k % 2 == 0) ? hi - s * lo : s * hi - lo;
}

RadauSet radau_points(double sigma, int k) {
    if (sigma == 0.5) {
        throw InvalidWeight("radau_points: weight 1/2 is not allowed");
    }
    if (k < 0) {
        throw InvalidArgument("radau_points: negative degree");
    }
    RadauSet set;
    set.sigma = sigma;
    set.k = k;
    auto r = [=](double x) { return radau_polynomial(sigma, k, x, 0); };
    auto dr = [=](double x) { return radau_polynomial(sigma, k, x, 1); };
    set.value_points = roots_in_unit_interval(r, dr);
    if (k >= 1) {
        // second derivative of the combination, for Newton on R'
        auto ddr = [=](double x) {
            const double h = 1e-6;
            return (radau_polynomial(sigma, k, x + h, 1) - radau_polynomial(sigma, k, x - h, 1)) / (2.0 * h);
        };
        set.derivative_points = roots_in_unit_interval(dr, ddr);
    }
    return set;
}

}  // namespace ldg4
