#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ldg4/fields.hpp"
#include "ldg4/ldg_operator.hpp"
#include "ldg4/mesh.hpp"

namespace ldg4 {

enum class ProblemId { linear_sine, linear_sine_mixed, linear_sine_dirichlet, discontinuous_pulse, kuramoto_sivashinsky };

std::string to_string(ProblemId id);
/// Throws InvalidConfig for unknown names.
ProblemId parse_problem(std::string_view name);

struct ProblemSpec {
    ProblemId id = ProblemId::linear_sine;
    SmoothField exact;
    Interval domain;
    BoundaryCondition bc;
    ProblemCoefficients coeffs;
    FluxWeights weights;
    double t_final = 0.1;
    /// Correction level used for the initial data when not configured.
    int default_level(int k) const { return coeffs.nonlinear == Nonlinearity::none ? k : 0; }
    /// Mesh sizes of the reference convergence study for degree k.
    std::vector<std::size_t> default_n_list(int k) const;
};

ProblemSpec make_problem(ProblemId id, double kappa1 = 10.0, double kappa2 = 15.0);

/// sin(x - t).
SmoothField sine_wave();

/// 1/2 + 2 sum_{w=1..5} exp((w^2 pi^2 - w^4 pi^4) t) sin(w pi/2)/(w pi) cos(w pi (x - t)).
SmoothField pulse_series();

/// c + 9 - 15 (T + T^2 - T^3), T = tanh(kappa (x - c t - x0)).
SmoothField ks_travelling_wave(double c = 6.0, double kappa = 0.5, double x0 = -10.0);

/// Boundary data read off an exact solution for the given boundary kind.
BoundaryCondition boundary_from_exact(BoundaryKind kind, const SmoothField& exact, Interval domain,
                                      double kappa1 = 10.0, double kappa2 = 15.0);

}  // namespace ldg4
