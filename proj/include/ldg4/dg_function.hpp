#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ldg4/mesh.hpp"

namespace ldg4 {

/// Piecewise polynomial of degree k stored as per-cell Legendre coefficients.
///
/// On cell j the field is sum_m c(j, m) L_m(xi) with xi the reference
/// coordinate of the cell. Coefficients are stored row-major (cell, mode).
class DGFunction {
public:
    DGFunction() = default;
    DGFunction(std::shared_ptr<const Mesh1D> mesh, int degree);

    int degree() const { return degree_; }
    std::size_t modes() const { return static_cast<std::size_t>(degree_ + 1); }
    std::size_t num_cells() const { return mesh_ ? mesh_->num_cells() : 0; }
    const Mesh1D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }

    double& operator()(std::size_t j, std::size_t m) { return coeffs_[j * modes() + m]; }
    double operator()(std::size_t j, std::size_t m) const { return coeffs_[j * modes() + m]; }

    std::span<double> cell(std::size_t j) { return {coeffs_.data() + j * modes(), modes()}; }
    std::span<const double> cell(std::size_t j) const { return {coeffs_.data() + j * modes(), modes()}; }
    std::span<double> coeffs() { return coeffs_; }
    std::span<const double> coeffs() const { return coeffs_; }

    /// Value at reference point xi of cell j.
    double value(std::size_t j, double xi) const;
    /// Physical x-derivative at reference point xi of cell j.
    double derivative(std::size_t j, double xi) const;
    /// Value at physical x (right-continuous except at the right boundary).
    double evaluate(double x) const;

    /// Limit from inside cell j at its right end.
    double right_end(std::size_t j) const;
    /// Limit from inside cell j at its left end.
    double left_end(std::size_t j) const;

    double cell_mean(std::size_t j) const { return (*this)(j, 0); }
    double integral() const;
    double l2_norm() const;

    void set_zero();
    bool same_space(const DGFunction& other) const;

    DGFunction& operator+=(const DGFunction& other);
    DGFunction& operator-=(const DGFunction& other);
    DGFunction& operator*=(double s);
    /// this += s * other
    DGFunction& axpy(double s, const DGFunction& other);

private:
    std::shared_ptr<const Mesh1D> mesh_;
    int degree_ = 0;
    std::vector<double> coeffs_;
};

DGFunction operator+(DGFunction a, const DGFunction& b);
DGFunction operator-(DGFunction a, const DGFunction& b);
DGFunction operator*(double s, DGFunction a);

}  // namespace ldg4
