#pragma once

#include <array>
#include <memory>
#include <vector>

#include "ldg4/dg_function.hpp"
#include "ldg4/fields.hpp"
#include "ldg4/ldg_operator.hpp"
#include "ldg4/projection.hpp"

namespace ldg4 {

/// One DGFunction per variable, indexed by index(Var).
using VarFunctions = std::array<DGFunction, 4>;

/// Everything the correction hierarchy depends on besides the exact field.
struct CorrectionContext {
    std::shared_ptr<const Mesh1D> mesh;
    int k = 1;
    FluxWeights weights;
    BoundaryKind bc = BoundaryKind::periodic;
    ProblemCoefficients coeffs;
};

/// Projections of the four fields and the V_h part of the projection
/// residuals (only the top Legendre mode is nonzero).
struct ProjectionResidual {
    VarFunctions projections;
    VarFunctions residual_top;
};

/// Projection residuals of d^nt/dt^nt (u, u_x, u_xx, u_xxx) at time t.
ProjectionResidual build_w0(const SmoothField& u, double t, int nt, const CorrectionContext& ctx);

/// Level-i corrections from the level-(i-1) functions `prev` and the
/// time derivative of the level-(i-1) u-correction.
VarFunctions build_level(int i, const VarFunctions& prev, const DGFunction& prev_u_t, const CorrectionContext& ctx);

/// Correction functions W^(i)_v, i = 1..level, together with as many of
/// their time derivatives as requested.
class CorrectionSet {
public:
    /// Builds levels 1..level and time derivatives 0..time_orders. Throws
    /// LevelOutOfRange unless 0 <= level <= k.
    static CorrectionSet build(const SmoothField& u, double t, int level, const CorrectionContext& ctx,
                               int time_orders = 1);

    int level() const { return level_; }
    int time_orders() const { return time_orders_; }
    const CorrectionContext& context() const { return ctx_; }

    /// W^(i)_v differentiated nt times in t; i = 0 is the projection residual.
    const DGFunction& w(Var v, int i, int nt = 0) const;
    /// sum_{i=1..level} W^(i)_v (zero for level 0).
    DGFunction sum(Var v, int nt = 0) const;
    /// Projection of v (time derivative nt) with the variable's own weight.
    const DGFunction& projection(Var v, int nt = 0) const;

private:
    CorrectionContext ctx_;
    int level_ = 0;
    int time_orders_ = 0;
    // table_[i][nt]: level i, time derivative nt
    std::vector<std::vector<VarFunctions>> table_;
    std::vector<VarFunctions> projections_;
};

/// v_I = P_sigma v - W^level_v. Throws InvalidArgument if sigma is not the
/// weight paired with v, LevelOutOfRange if level exceeds the set.
DGFunction interpolation(Var v, int level, const CorrectionSet& corr, const DGFunction& projection, double sigma);

/// Cellwise h_j/2 * D^{-1} of w, truncated to modes below k.
DGFunction scaled_antiderivative_lower(const DGFunction& w);

}  // namespace ldg4
