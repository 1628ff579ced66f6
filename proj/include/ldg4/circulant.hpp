#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ldg4 {

/// Periodic bidiagonal system  sigma * x_j + (-1)^k (1 - sigma) * x_{j+1} = b_j,
/// indices taken modulo n.
struct CirculantSystem {
    double sigma = 1.0;
    int k = 0;
    std::size_t n = 0;

    double off() const { return ((k % 2 == 0) ? 1.0 : -1.0) * (1.0 - sigma); }
    /// -off/sigma; infinite when sigma == 0.
    double mu() const { return -off() / sigma; }
};

/// Solves the system through its geometric-series inverse, running the
/// recurrence in whichever direction is contractive. Throws SingularSystem
/// for sigma == 1/2 or a vanishing determinant.
std::vector<double> circulant_solve(const CirculantSystem& sys, std::span<const double> rhs);

}  // namespace ldg4
