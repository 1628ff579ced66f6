#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ldg4/dg_function.hpp"
#include "ldg4/mesh.hpp"

namespace ldg4 {

/// The four unknowns of the first-order system: u and its first three x-derivatives.
enum class Var { u = 0, p = 1, q = 2, r = 3 };

inline constexpr Var all_vars[] = {Var::u, Var::p, Var::q, Var::r};

inline std::size_t index(Var v) { return static_cast<std::size_t>(v); }
inline int x_order(Var v) { return static_cast<int>(v); }
const char* name(Var v);

/// Flux weights (theta, lambda) with complements.
///
/// u is traced with theta, p with 1-lambda, q with lambda and r with 1-theta.
struct FluxWeights {
    double theta = 1.0;
    double lambda = 1.0;

    FluxWeights() = default;
    /// Throws InvalidWeight if either weight is 1/2 or not finite.
    FluxWeights(double theta, double lambda);

    double theta_tilde() const { return 1.0 - theta; }
    double lambda_tilde() const { return 1.0 - lambda; }
    double weight(Var v) const;
};

/// Smooth space-time field given through its mixed partial derivatives.
///
/// derivative(nt, nx, x, t) returns d^nt/dt^nt d^nx/dx^nx of the field.
class SmoothField {
public:
    using Derivatives = std::function<double(int nt, int nx, double x, double t)>;

    SmoothField() = default;
    explicit SmoothField(Derivatives fn) : fn_(std::move(fn)) {}

    double operator()(double x, double t) const { return fn_(0, 0, x, t); }
    double derivative(int nt, int nx, double x, double t) const { return fn_(nt, nx, x, t); }
    explicit operator bool() const { return static_cast<bool>(fn_); }

    /// Field of the variable v (u, u_x, u_xx or u_xxx), time-differentiated nt times.
    SmoothField component(Var v, int nt = 0) const;
    /// Snapshot at a fixed time.
    std::function<double(double)> at(double t) const;

private:
    Derivatives fn_;
};

/// A scalar field reduced to what projections need: Legendre moments per
/// cell and one-sided limits at every interface.
///
/// minus[i] / plus[i] are the limits from the left / right of interface i.
/// minus[0] and plus[N] are the wrapped periodic neighbours (for smooth
/// periodic data both equal the point value).
struct SampledField {
    std::shared_ptr<const Mesh1D> mesh;
    int max_mode = 0;
    std::vector<double> moments;  // N x (max_mode+1) Legendre coefficients
    std::vector<double> minus;
    std::vector<double> plus;

    double moment(std::size_t j, std::size_t m) const {
        return moments[j * static_cast<std::size_t>(max_mode + 1) + m];
    }

    /// Samples a function with quadrature of `quad_points` per cell.
    static SampledField from_function(std::shared_ptr<const Mesh1D> mesh, const std::function<double(double)>& f,
                                      int max_mode, int quad_points);
    /// Exact moments and one-sided limits of a V_h function (periodic wrap).
    static SampledField from_dg(const DGFunction& w);
};

}  // namespace ldg4
