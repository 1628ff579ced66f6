#include "ldg4/corrections.hpp"

#include <string>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"

namespace ldg4 {

ProjectionResidual build_w0(const SmoothField& u, double t, int nt, const CorrectionContext& ctx) {
    ProjectionResidual out;
    const auto top = static_cast<std::size_t>(ctx.k);
    for (Var v : all_vars) {
        const SampledField f = sample(ctx.mesh, u.component(v, nt).at(t), ctx.k);
        DGFunction proj = ggr_project(f, ctx.weights.weight(v), ctx.k, closure_for(v, ctx.bc));
        DGFunction res(ctx.mesh, ctx.k);
        for (std::size_t j = 0; j < res.num_cells(); ++j) {
            res(j, top) = f.moment(j, top) - proj(j, top);
        }
        out.projections[index(v)] = std::move(proj);
        out.residual_top[index(v)] = std::move(res);
    }
    return out;
}

DGFunction scaled_antiderivative_lower(const DGFunction& w) {
    DGFunction out(w.mesh_ptr(), w.degree());
    const std::size_t k = static_cast<std::size_t>(w.degree());
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        const auto anti = d_inverse(w.cell(j));
        const double hb = w.mesh().half_width(j);
        for (std::size_t m = 0; m < k; ++m) {
            out(j, m) = hb * anti[m];
        }
    }
    return out;
}

VarFunctions build_level(int i, const VarFunctions& prev, const DGFunction& prev_u_t, const CorrectionContext& ctx) {
    if (i < 1 || i > ctx.k) {
        throw LevelOutOfRange("correction level " + std::to_string(i) + " outside 1.." + std::to_string(ctx.k));
    }
    VarFunctions w;
    w[index(Var::u)] = scaled_antiderivative_lower(prev[index(Var::p)]);
    w[index(Var::p)] = scaled_antiderivative_lower(prev[index(Var::q)]);
    w[index(Var::q)] = scaled_antiderivative_lower(prev[index(Var::r)]);
    DGFunction r = scaled_antiderivative_lower(prev_u_t);
    r.axpy(ctx.coeffs.alpha, w[index(Var::u)]);
    r.axpy(ctx.coeffs.beta, w[index(Var::p)]);
    r.axpy(ctx.coeffs.sigma3, w[index(Var::q)]);
    r *= -1.0;
    w[index(Var::r)] = std::move(r);

    const std::vector<double> zeros(ctx.mesh->num_cells() + 1, 0.0);
    for (Var v : all_vars) {
        close_top_mode(w[index(v)], ctx.weights.weight(v), closure_for(v, ctx.bc), zeros);
    }
    return w;
}

CorrectionSet CorrectionSet::build(const SmoothField& u, double t, int level, const CorrectionContext& ctx,
                                   int time_orders) {
    if (level < 0 || level > ctx.k) {
        throw LevelOutOfRange("correction level " + std::to_string(level) + " outside 0.." + std::to_string(ctx.k));
    }
    if (time_orders < 0) {
        throw InvalidArgument("CorrectionSet: negative number of time derivatives");
    }
    if (ctx.coeffs.nonlinear != Nonlinearity::none && level > 0) {
        throw InvalidArgument("correction functions are only defined for linear problems");
    }
    CorrectionSet set;
    set.ctx_ = ctx;
    set.level_ = level;
    set.time_orders_ = time_orders;
    // level i is needed for time derivatives 0..time_orders + level - i
    const int top_order = time_orders + level;
    set.table_.resize(static_cast<std::size_t>(level + 1));
    for (int nt = 0; nt <= top_order; ++nt) {
        ProjectionResidual base = build_w0(u, t, nt, ctx);
        set.table_[0].push_back(std::move(base.residual_top));
        if (nt <= time_orders) {
            set.projections_.push_back(std::move(base.projections));
        }
    }
    for (int i = 1; i <= level; ++i) {
        const auto& prev = set.table_[static_cast<std::size_t>(i - 1)];
        for (int nt = 0; nt <= top_order - i; ++nt) {
            const auto& lower = prev[static_cast<std::size_t>(nt)];
            const auto& lower_t = prev[static_cast<std::size_t>(nt + 1)][index(Var::u)];
            set.table_[static_cast<std::size_t>(i)].push_back(build_level(i, lower, lower_t, ctx));
        }
    }
    return set;
}

const DGFunction& CorrectionSet::w(Var v, int i, int nt) const {
    if (i < 0 || i > level_) {
        throw LevelOutOfRange("CorrectionSet::w: level " + std::to_string(i) + " not built");
    }
    const auto& row = table_[static_cast<std::size_t>(i)];
    if (nt < 0 || nt >= static_cast<int>(row.size())) {
        throw InvalidArgument("CorrectionSet::w: time derivative not built");
    }
    return row[static_cast<std::size_t>(nt)][index(v)];
}

DGFunction CorrectionSet::sum(Var v, int nt) const {
    DGFunction out(ctx_.mesh, ctx_.k);
    for (int i = 1; i <= level_; ++i) {
        out += w(v, i, nt);
    }
    return out;
}

const DGFunction& CorrectionSet::projection(Var v, int nt) const {
    if (nt < 0 || nt >= static_cast<int>(projections_.size())) {
        throw InvalidArgument("CorrectionSet::projection: time derivative not built");
    }
    return projections_[static_cast<std::size_t>(nt)][index(v)];
}

DGFunction interpolation(Var v, int level, const CorrectionSet& corr, const DGFunction& projection, double sigma) {
    if (sigma != corr.context().weights.weight(v)) {
        throw InvalidArgument(std::string("interpolation: weight does not match variable ") + name(v));
    }
    if (level < 0 || level > corr.level()) {
        throw LevelOutOfRange("interpolation: level " + std::to_string(level) + " not available");
    }
    DGFunction out = projection;
    for (int i = 1; i <= level; ++i) {
        out -= corr.w(v, i);
    }
    return out;
}

}  // namespace ldg4
