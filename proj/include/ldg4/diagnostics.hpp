#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ldg4/dg_function.hpp"
#include "ldg4/fields.hpp"
#include "ldg4/ldg_operator.hpp"
#include "ldg4/radau.hpp"

namespace ldg4 {

using ScalarFunction = std::function<double(double)>;

struct VariableErrors {
    double flux = 0.0;                 // RMS of v - vhat over interfaces 1..N
    double cell_average = 0.0;         // RMS of cell means of v - v_h
    double radau = 0.0;                // max |v - v_h| at generalized Radau points
    double radau_derivative = 0.0;     // max |d/dx (v - v_h)| at derivative points
    double projection_distance = 0.0;  // ||P v - v_h||
    double l2 = 0.0;
    double linf = 0.0;
    double jump = 0.0;                 // jump seminorm of v_h
};

struct ErrorReport {
    std::size_t n = 0;
    int k = 0;
    double t = 0.0;
    std::array<VariableErrors, 4> vars{};
    /// (||(v_h)_x|| + h^{-1/2} |v_h|_jump) / ||next_h|| for v = q, p, u.
    std::array<double, 3> derivative_ratios{};

    const VariableErrors& operator[](Var v) const { return vars[index(v)]; }
};

/// RMS over interfaces 1..N of v(x_i) minus the scheme's trace of v_h.
double flux_error(const DGFunction& vh, Var role, const ScalarFunction& exact, double sigma,
                  const BoundaryCondition& bc, double t, const DGFunction* partner = nullptr);

double cell_average_error(const DGFunction& vh, const ScalarFunction& exact);

/// (max value error at value points, max derivative error at derivative points).
/// A part whose point set is empty is NaN.
///
/// Under an anchored closure the boundary cell's top mode is fixed by a
/// one-sided trace, so that cell is sampled at the classical Radau points
/// (right end: sigma = 1, left end: sigma = 0) instead of `points`.
std::pair<double, double> radau_errors(const DGFunction& vh, const ScalarFunction& exact,
                                       const ScalarFunction& exact_dx, const RadauSet& points,
                                       Closure closure = Closure::periodic);

/// Exact L2 norm of P v - v_h, with P the projection of the given closure.
double projection_distance(const DGFunction& vh, const ScalarFunction& exact, double sigma, Closure closure);

double l2_error(const DGFunction& vh, const ScalarFunction& exact, int extra_points = 0);
double linf_error(const DGFunction& vh, const ScalarFunction& exact);

/// sqrt(sum of squared jumps) over all interfaces (periodic wrap included
/// when `periodic`).
double jump_seminorm(const DGFunction& w, bool periodic);

/// sum_i [w]_i [v]_i over the same interface set as jump_seminorm.
double jump_product(const DGFunction& w, const DGFunction& v, bool periodic);

/// L2 norm of the cellwise x-derivative.
double broken_derivative_norm(const DGFunction& w);

/// order_i = log(e_{i-1}/e_i) / log(N_i/N_{i-1}); entry 0 and invalid
/// inputs (non-positive or non-finite errors) are empty.
std::vector<std::optional<double>> observed_order(std::span<const double> errors, std::span<const double> ns);

/// All measures for one state against an exact solution.
ErrorReport error_report(const LDGState& state, const SmoothField& exact, const FluxWeights& weights,
                         const BoundaryCondition& bc);

}  // namespace ldg4
