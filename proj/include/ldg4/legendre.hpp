#pragma once

#include <span>
#include <vector>

namespace ldg4 {

/// Legendre polynomial L_m(xi) (derivative_order 0) or L_m'(xi) (derivative_order 1).
double legendre_eval(int m, double xi, int derivative_order = 0);

/// Fills values[m] = L_m(xi) for m = 0..values.size()-1.
void legendre_values(double xi, std::span<double> values);

/// Fills values[m] = L_m(xi) and derivs[m] = L_m'(xi).
void legendre_values_and_derivs(double xi, std::span<double> values, std::span<double> derivs);

/// Reference-cell antiderivative in the Legendre basis.
///
/// Given coefficients a of v(xi) = sum a_m L_m(xi), returns b (one entry
/// longer) with b(xi) = integral_{-1}^{xi} v. On a cell of half-width hb the
/// physical operator D^{-1} is hb times this map.
std::vector<double> d_inverse(std::span<const double> coeffs);

/// (L_n, dL_m/dxi) on [-1, 1]: 2 when n < m and n + m is odd, else 0.
inline double stiffness_entry(int n, int m) { return (n < m && ((n + m) & 1)) ? 2.0 : 0.0; }

}  // namespace ldg4
