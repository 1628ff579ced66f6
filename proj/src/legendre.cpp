#include "ldg4/legendre.hpp"

#include "ldg4/errors.hpp"

namespace ldg4 {

double legendre_eval(int m, double xi, int derivative_order) {
    if (m < 0) {
        throw InvalidArgument("legendre_eval: negative degree");
    }
    if (derivative_order != 0 && derivative_order != 1) {
        throw InvalidArgument("legendre_eval: derivative order must be 0 or 1");
    }
    double prev = 1.0;  // L_0
    double cur = xi;    // L_1
    double dprev = 0.0;
    double dcur = 1.0;
    if (m == 0) {
        return derivative_order == 0 ? 1.0 : 0.0;
    }
    for (int n = 1; n < m; ++n) {
        const double next = ((2 * n + 1) * xi * cur - n * prev) / (n + 1);
        const double dnext = dprev + (2 * n + 1) * cur;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    return derivative_order == 0 ? cur : dcur;
}

void legendre_values(double xi, std::span<double> values) {
    if (values.empty()) {
        return;
    }
    values[0] = 1.0;
    if (values.size() > 1) {
        values[1] = xi;
    }
    for (std::size_t n = 1; n + 1 < values.size(); ++n) {
        const double dn = static_cast<double>(n);
        values[n + 1] = ((2.0 * dn + 1.0) * xi * values[n] - dn * values[n - 1]) / (dn + 1.0);
    }
}

void legendre_values_and_derivs(double xi, std::span<double> values, std::span<double> derivs) {
    legendre_values(xi, values);
    if (derivs.empty()) {
        return;
    }
    // L'_{n+1} = L'_{n-1} + (2n+1) L_n
    derivs[0] = 0.0;
    if (derivs.size() > 1) {
        derivs[1] = 1.0;
    }
    for (std::size_t n = 1; n + 1 < derivs.size(); ++n) {
        derivs[n + 1] = derivs[n - 1] + (2.0 * static_cast<double>(n) + 1.0) * values[n];
    }
}

std::vector<double> d_inverse(std::span<const double> coeffs) {
    std::vector<double> out(coeffs.size() + 1, 0.0);
    if (coeffs.empty()) {
        return out;
    }
    out[0] += coeffs[0];
    out[1] += coeffs[0];
    for (std::size_t m = 1; m < coeffs.size(); ++m) {
        const double s = coeffs[m] / (2.0 * static_cast<double>(m) + 1.0);
        out[m + 1] += s;
        out[m - 1] -= s;
    }
    return out;
}

}  // namespace ldg4
