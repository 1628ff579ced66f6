#include "ldg4/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ldg4/errors.hpp"

namespace ldg4 {

Mesh1D::Mesh1D(std::vector<double> interfaces) : interfaces_(std::move(interfaces)) {
    if (interfaces_.size() < 2) {
        throw InvalidArgument("a mesh needs at least two interfaces");
    }
    widths_.resize(interfaces_.size() - 1);
    for (std::size_t j = 0; j < widths_.size(); ++j) {
        widths_[j] = interfaces_[j + 1] - interfaces_[j];
    }
    finish();
}

Mesh1D::Mesh1D(std::vector<double> interfaces, std::vector<double> widths)
    : interfaces_(std::move(interfaces)), widths_(std::move(widths)) {
    finish();
}

void Mesh1D::finish() {
    for (std::size_t j = 0; j < widths_.size(); ++j) {
        if (!(widths_[j] > 0.0) || !std::isfinite(widths_[j])) {
            throw InvalidArgument("mesh interfaces must be finite and strictly increasing (cell " +
                                  std::to_string(j) + ")");
        }
    }
    max_width_ = *std::max_element(widths_.begin(), widths_.end());
    gamma_ = *std::min_element(widths_.begin(), widths_.end()) / max_width_;
}

Mesh1D Mesh1D::uniform(std::size_t n, Interval domain) {
    const double h = domain.length() / static_cast<double>(n);
    std::vector<double> x(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        x[i] = domain.a + static_cast<double>(i) * h;
    }
    x[n] = domain.b;
    return Mesh1D(std::move(x), std::vector<double>(n, h));
}

std::size_t Mesh1D::locate(double x) const {
    auto it = std::upper_bound(interfaces_.begin(), interfaces_.end(), x);
    if (it == interfaces_.begin()) {
        return 0;
    }
    const auto j = static_cast<std::size_t>(std::distance(interfaces_.begin(), it)) - 1;
    return std::min(j, num_cells() - 1);
}

Mesh1D build_mesh(std::size_t n, Interval domain, MeshGrading grading) {
    if (n < 2) {
        throw InvalidArgument("build_mesh: need at least 2 cells");
    }
    if (!(domain.b > domain.a)) {
        throw InvalidArgument("build_mesh: empty domain");
    }
    if (grading.kind == MeshGrading::Kind::uniform) {
        return Mesh1D::uniform(n, domain);
    }
    if (!(grading.epsilon >= 0.0) || grading.epsilon >= 0.5) {
        throw InvalidArgument("build_mesh: perturbation must satisfy 0 <= eps < 1/2");
    }
    const double h = domain.length() / static_cast<double>(n);
    std::vector<double> x(n + 1);
    x[0] = domain.a;
    x[n] = domain.b;
    constexpr double golden = 0.6180339887498949;
    for (std::size_t i = 1; i < n; ++i) {
        // low-discrepancy offsets in [-1/2, 1/2)
        const double frac = std::fmod(static_cast<double>(i) * golden, 1.0) - 0.5;
        x[i] = domain.a + static_cast<double>(i) * h + grading.epsilon * h * frac;
    }
    return Mesh1D(std::move(x));
}

}  // namespace ldg4
