#include "ldg4/circulant.hpp"

#include <cmath>

#include "ldg4/errors.hpp"

namespace ldg4 {

namespace {

// 1 - r^n, flushing tiny powers to zero.
double one_minus_power(double r, std::size_t n) {
    const double mag = static_cast<double>(n) * std::log(std::abs(r));
    if (mag < std::log(1e-300)) {
        return 1.0;
    }
    return 1.0 - std::pow(r, static_cast<double>(n));
}

}  // namespace

std::vector<double> circulant_solve(const CirculantSystem& sys, std::span<const double> rhs) {
    const std::size_t n = sys.n;
    if (rhs.size() != n || n == 0) {
        throw InvalidArgument("circulant_solve: right-hand side length must equal the system size");
    }
    if (sys.sigma == 0.5) {
        throw SingularSystem("circulant_solve: weight 1/2 gives a singular system");
    }
    const double sigma = sys.sigma;
    const double off = sys.off();
    std::vector<double> x(n);

    if (std::abs(sigma) >= std::abs(off)) {
        // x_j = b_j/sigma + mu x_{j+1}, |mu| <= 1
        const double mu = -off / sigma;
        const double det = one_minus_power(mu, n);
        if (det == 0.0) {
            throw SingularSystem("circulant_solve: singular system");
        }
        double acc = 0.0;
        double pw = 1.0;
        for (std::size_t d = 0; d < n; ++d) {
            acc += pw * rhs[d];
            pw *= mu;
        }
        x[0] = acc / (sigma * det);
        double next = x[0];
        for (std::size_t j = n; j-- > 1;) {
            x[j] = rhs[j] / sigma + mu * next;
            next = x[j];
        }
    } else {
        // x_{j+1} = b_j/off + nu x_j, |nu| < 1
        const double nu = -sigma / off;
        const double det = one_minus_power(nu, n);
        if (det == 0.0) {
            throw SingularSystem("circulant_solve: singular system");
        }
        double acc = 0.0;
        double pw = 1.0;
        for (std::size_t e = 1; e <= n; ++e) {
            acc += pw * rhs[n - e];
            pw *= nu;
        }
        x[0] = acc / (off * det);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            x[j + 1] = rhs[j] / off + nu * x[j];
        }
    }
    return x;
}

}  // namespace ldg4
