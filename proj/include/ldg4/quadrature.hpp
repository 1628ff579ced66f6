#pragma once

#include <vector>

namespace ldg4 {

/// Gauss-Legendre rule on [-1, 1].
struct Quadrature {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials of degree <= 2n - 1.
Quadrature gauss_legendre(int n);

/// Rule used for the inner products of degree-k spaces (k+3 points).
inline Quadrature inner_product_rule(int k) { return gauss_legendre(k + 3); }

/// Over-resolved rule for errors against non-polynomial fields.
inline Quadrature error_rule(int k) { return gauss_legendre(2 * (k + 3)); }

}  // namespace ldg4
