#include "ldg4/dg_function.hpp"

#include <algorithm>
#include <cmath>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"

namespace ldg4 {

DGFunction::DGFunction(std::shared_ptr<const Mesh1D> mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
    if (!mesh_) {
        throw InvalidArgument("DGFunction: null mesh");
    }
    if (degree < 0) {
        throw InvalidArgument("DGFunction: negative degree");
    }
    coeffs_.assign(mesh_->num_cells() * modes(), 0.0);
}

double DGFunction::value(std::size_t j, double xi) const {
    double prev = 1.0;
    double cur = xi;
    const auto c = cell(j);
    double sum = c[0];
    if (degree_ >= 1) {
        sum += c[1] * xi;
    }
    for (int n = 1; n < degree_; ++n) {
        const double next = ((2 * n + 1) * xi * cur - n * prev) / (n + 1);
        prev = cur;
        cur = next;
        sum += c[static_cast<std::size_t>(n + 1)] * cur;
    }
    return sum;
}

double DGFunction::derivative(std::size_t j, double xi) const {
    double sum = 0.0;
    const auto c = cell(j);
    for (int m = 1; m <= degree_; ++m) {
        sum += c[static_cast<std::size_t>(m)] * legendre_eval(m, xi, 1);
    }
    return sum / mesh_->half_width(j);
}

double DGFunction::evaluate(double x) const {
    const std::size_t j = mesh_->locate(x);
    return value(j, mesh_->to_reference(j, x));
}

double DGFunction::right_end(std::size_t j) const {
    double s = 0.0;
    for (double c : cell(j)) {
        s += c;
    }
    return s;
}

double DGFunction::left_end(std::size_t j) const {
    double s = 0.0;
    double sign = 1.0;
    for (double c : cell(j)) {
        s += sign * c;
        sign = -sign;
    }
    return s;
}

double DGFunction::integral() const {
    double s = 0.0;
    for (std::size_t j = 0; j < num_cells(); ++j) {
        s += mesh_->width(j) * (*this)(j, 0);
    }
    return s;
}

double DGFunction::l2_norm() const {
    double s = 0.0;
    for (std::size_t j = 0; j < num_cells(); ++j) {
        for (std::size_t m = 0; m < modes(); ++m) {
            const double c = (*this)(j, m);
            s += c * c * mesh_->width(j) / (2.0 * static_cast<double>(m) + 1.0);
        }
    }
    return std::sqrt(s);
}

void DGFunction::set_zero() { std::fill(coeffs_.begin(), coeffs_.end(), 0.0); }

bool DGFunction::same_space(const DGFunction& other) const {
    return degree_ == other.degree_ && num_cells() == other.num_cells() &&
           (mesh_ == other.mesh_ ||
            (mesh_ && other.mesh_ && std::equal(mesh_->interfaces().begin(), mesh_->interfaces().end(),
                                                other.mesh_->interfaces().begin())));
}

DGFunction& DGFunction::operator+=(const DGFunction& other) { return axpy(1.0, other); }

DGFunction& DGFunction::operator-=(const DGFunction& other) { return axpy(-1.0, other); }

DGFunction& DGFunction::operator*=(double s) {
    for (double& c : coeffs_) {
        c *= s;
    }
    return *this;
}

DGFunction& DGFunction::axpy(double s, const DGFunction& other) {
    if (!same_space(other)) {
        throw InvalidArgument("DGFunction: operands live in different spaces");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += s * other.coeffs_[i];
    }
    return *this;
}

DGFunction operator+(DGFunction a, const DGFunction& b) { return a += b; }
DGFunction operator-(DGFunction a, const DGFunction& b) { return a -= b; }
DGFunction operator*(double s, DGFunction a) { return a *= s; }

}  // namespace ldg4
