#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ldg4 {

struct Interval {
    double a = 0.0;
    double b = 1.0;
    double length() const { return b - a; }
};

struct MeshGrading {
    enum class Kind { uniform, perturbed };
    Kind kind = Kind::uniform;
    double epsilon = 0.0;

    static MeshGrading uniform() { return {}; }
    static MeshGrading perturbed(double eps) { return {Kind::perturbed, eps}; }
};

/// Ordered partition of an interval into cells.
///
/// Cells are numbered 0..N-1 and interfaces 0..N; cell j spans
/// [interface(j), interface(j+1)]. Interface 0 and N are the domain ends
/// (identified with each other under periodic boundary conditions).
class Mesh1D {
public:
    /// Builds a mesh from strictly increasing interface coordinates.
    explicit Mesh1D(std::vector<double> interfaces);

    static Mesh1D uniform(std::size_t n, Interval domain);

    std::size_t num_cells() const { return widths_.size(); }
    std::size_t num_interfaces() const { return interfaces_.size(); }
    Interval domain() const { return {interfaces_.front(), interfaces_.back()}; }

    double interface(std::size_t i) const { return interfaces_[i]; }
    double left(std::size_t j) const { return interfaces_[j]; }
    double right(std::size_t j) const { return interfaces_[j + 1]; }
    double center(std::size_t j) const { return 0.5 * (interfaces_[j] + interfaces_[j + 1]); }
    double width(std::size_t j) const { return widths_[j]; }
    double half_width(std::size_t j) const { return 0.5 * widths_[j]; }

    /// Largest cell width h.
    double max_width() const { return max_width_; }
    /// gamma with h_j >= gamma * h for every cell.
    double quasi_uniformity() const { return gamma_; }

    std::span<const double> interfaces() const { return interfaces_; }
    std::span<const double> widths() const { return widths_; }

    /// Cell containing x (the right-most cell for x on the right boundary).
    std::size_t locate(double x) const;

    /// Physical coordinate of reference point xi in [-1, 1] on cell j.
    double to_physical(std::size_t j, double xi) const { return center(j) + half_width(j) * xi; }
    double to_reference(std::size_t j, double x) const { return (x - center(j)) / half_width(j); }

private:
    Mesh1D(std::vector<double> interfaces, std::vector<double> widths);
    void finish();

    std::vector<double> interfaces_;
    std::vector<double> widths_;
    double max_width_ = 0.0;
    double gamma_ = 0.0;
};

/// Builds a mesh of n cells on the domain. Perturbed grading moves every
/// interior interface by at most eps*h/2 (deterministic pattern), so that
/// every width stays within [1-eps, 1+eps] * (b-a)/n.
Mesh1D build_mesh(std::size_t n, Interval domain, MeshGrading grading = MeshGrading::uniform());

}  // namespace ldg4
