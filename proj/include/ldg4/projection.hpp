#pragma once

#include <functional>
#include <memory>
#include <span>

#include "ldg4/dg_function.hpp"
#include "ldg4/fields.hpp"
#include "ldg4/mesh.hpp"

namespace ldg4 {

enum class BoundaryKind { periodic, mixed, dirichlet };

/// How the top Legendre mode of a V_h function is pinned down by weighted
/// interface traces.
///
/// periodic: sigma-weighted traces at every interface (with wrap-around).
/// right_anchored: sigma-weighted traces at interior interfaces plus the
///   exact left limit at the right boundary.
/// left_anchored: sigma-weighted traces at interior interfaces plus the
///   exact right limit at the left boundary.
enum class Closure { periodic, right_anchored, left_anchored };

/// Closure used for variable v: u and q anchor on the right, p and r on the left.
Closure closure_for(Var v, BoundaryKind bc);

/// Overwrites the top mode of every cell so that the traces of w match
/// `targets` (indexed by interface 0..N) in the sense of `closure`. Lower
/// modes are left untouched.
void close_top_mode(DGFunction& w, double sigma, Closure closure, std::span<const double> targets);

/// Generalized Gauss-Radau projection with periodic trace collocation.
/// Throws SingularSystem for sigma == 1/2.
DGFunction ggr_project_periodic(const SampledField& f, double sigma, int k);

/// Piecewise projection for non-periodic problems; `side` must be
/// right_anchored or left_anchored. Throws InvalidWeight for sigma == 1/2.
/// The sweep is stable for sigma > 1/2 with a right anchor and sigma < 1/2
/// with a left anchor; the opposite pairing loses ((1-s)/s)^N in accuracy.
DGFunction ggr_project_piecewise(const SampledField& f, double sigma, int k, Closure side);

DGFunction ggr_project(const SampledField& f, double sigma, int k, Closure closure);

/// Cell-local projection: k moments plus one weighted two-endpoint collocation.
DGFunction local_project(const SampledField& f, double theta, int k);

/// Plain L2 projection onto V_h.
DGFunction l2_project(const SampledField& f, int k);

/// Samples a smooth function accurately enough for projections of degree k.
SampledField sample(std::shared_ptr<const Mesh1D> mesh, const std::function<double(double)>& f, int k);

}  // namespace ldg4
