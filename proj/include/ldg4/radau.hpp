#pragma once

#include <vector>

namespace ldg4 {

/// Generalized Radau points on the reference cell [-1, 1].
struct RadauSet {
    double sigma = 1.0;
    int k = 0;
    /// Real roots of the generalized Radau polynomial inside [-1, 1].
    std::vector<double> value_points;
    /// Roots of its derivative inside [-1, 1].
    std::vector<double> derivative_points;
};

/// R(xi) = L_{k+1} - (2s-1) L_k for even k, (2s-1) L_{k+1} - L_k for odd k.
double radau_polynomial(double sigma, int k, double xi, int derivative_order = 0);

/// Throws InvalidWeight for sigma == 1/2.
RadauSet radau_points(double sigma, int k);

}  // namespace ldg4
