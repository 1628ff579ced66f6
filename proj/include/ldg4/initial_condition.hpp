#pragma once

#include <memory>
#include <vector>

#include "ldg4/corrections.hpp"
#include "ldg4/ldg_operator.hpp"

namespace ldg4 {

enum class SeedMode { superconvergent, l2_projection };

struct InitRecipe {
    SmoothField exact;
    int level = 1;
    FluxWeights weights;
    BoundaryCondition bc;
    ProblemCoefficients coeffs;
    SeedMode mode = SeedMode::superconvergent;
};

/// The time-zero state plus the four fields produced directly by the
/// reconstruction (before p, q, r are re-derived from u through the scheme).
struct InitialCondition {
    LDGState state;
    VarFunctions reconstructed;
};

/// Solves (source, phi)_j + H_j(w, phi) = 0 for every non-constant test
/// function, where w plays the role of `target` with weight sigma and its
/// numerical trace at interface i is pinned to traces[i] (size N + 1).
DGFunction inverse_step(const DGFunction& source, Var target, double sigma, BoundaryKind bc,
                        const std::vector<double>& traces);

InitialCondition build_initial_condition(const InitRecipe& recipe, std::shared_ptr<const Mesh1D> mesh, int k);

LDGState build_initial_state(const InitRecipe& recipe, std::shared_ptr<const Mesh1D> mesh, int k);

}  // namespace ldg4
