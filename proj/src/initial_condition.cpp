#include "ldg4/initial_condition.hpp"

#include <string>
#include <vector>

#include "ldg4/errors.hpp"

namespace ldg4 {

DGFunction inverse_step(const DGFunction& source, Var target, double sigma, BoundaryKind bc,
                        const std::vector<double>& traces) {
    const Mesh1D& mesh = source.mesh();
    const std::size_t n = source.num_cells();
    const std::size_t k = static_cast<std::size_t>(source.degree());
    if (traces.size() != n + 1) {
        throw InvalidArgument("inverse_step: need one trace per interface");
    }
    const Closure closure = closure_for(target, bc);
    const std::vector<double>& tau = traces;

    DGFunction w(source.mesh_ptr(), source.degree());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 1; m <= k; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            double s = tau[j + 1] - sign * tau[j] - mesh.width(j) * source(j, m) / (2.0 * static_cast<double>(m) + 1.0);
            s *= 0.5;
            for (std::size_t a = (m + 1) % 2; a + 1 < m; a += 2) {
                s -= w(j, a);
            }
            w(j, m - 1) = s;
        }
    }
    close_top_mode(w, sigma, closure, tau);
    return w;
}

namespace {

std::vector<double> interface_values(const SmoothField& f, Var v, const Mesh1D& mesh) {
    std::vector<double> out(mesh.num_cells() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.derivative(0, x_order(v), mesh.interface(i), 0.0);
    }
    return out;
}

}  // namespace

InitialCondition build_initial_condition(const InitRecipe& recipe, std::shared_ptr<const Mesh1D> mesh, int k) {
    if (!recipe.exact) {
        throw InvalidArgument("initial condition needs an exact field");
    }
    if (recipe.level < 0 || recipe.level > k) {
        throw LevelOutOfRange("initial condition level " + std::to_string(recipe.level) + " outside 0.." +
                              std::to_string(k));
    }
    InitialCondition out;
    LdgOperator op(mesh, k, recipe.weights, recipe.bc, recipe.coeffs);

    if (recipe.mode == SeedMode::l2_projection) {
        const DGFunction u = l2_project(sample(mesh, recipe.exact.at(0.0), k), k);
        out.state = op.state(u.coeffs(), 0.0);
        out.reconstructed = {out.state.u, out.state.p, out.state.q, out.state.r};
        return out;
    }

    const CorrectionContext ctx{mesh, k, recipe.weights, recipe.bc.kind, recipe.coeffs};
    const CorrectionSet corr = CorrectionSet::build(recipe.exact, 0.0, recipe.level, ctx, 0);

    const BoundaryKind kind = recipe.bc.kind;
    const SmoothField& ex = recipe.exact;

    DGFunction r = corr.projection(Var::r) - corr.sum(Var::r);
    DGFunction q = inverse_step(r, Var::q, recipe.weights.lambda, kind, interface_values(ex, Var::q, *mesh));
    DGFunction p = inverse_step(q, Var::p, recipe.weights.lambda_tilde(), kind, interface_values(ex, Var::p, *mesh));
    DGFunction u = inverse_step(p, Var::u, recipe.weights.theta, kind, interface_values(ex, Var::u, *mesh));

    out.state = op.state(u.coeffs(), 0.0);
    out.reconstructed = {std::move(u), std::move(p), std::move(q), std::move(r)};
    return out;
}

LDGState build_initial_state(const InitRecipe& recipe, std::shared_ptr<const Mesh1D> mesh, int k) {
    return build_initial_condition(recipe, std::move(mesh), k).state;
}

}  // namespace ldg4
