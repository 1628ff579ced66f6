#include "ldg4/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "ldg4/errors.hpp"
#include "ldg4/projection.hpp"
#include "ldg4/quadrature.hpp"

namespace ldg4 {

double flux_error(const DGFunction& vh, Var role, const ScalarFunction& exact, double sigma,
                  const BoundaryCondition& bc, double t, const DGFunction* partner) {
    const std::size_t n = vh.num_cells();
    const Mesh1D& mesh = vh.mesh();
    double s = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double d = exact(mesh.interface(i)) - trace(vh, role, sigma, i, bc, t, partner);
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(n));
}

double cell_average_error(const DGFunction& vh, const ScalarFunction& exact) {
    const Mesh1D& mesh = vh.mesh();
    const Quadrature quad = error_rule(vh.degree());
    double s = 0.0;
    for (std::size_t j = 0; j < vh.num_cells(); ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
            mean += quad.weights[i] * exact(mesh.to_physical(j, quad.nodes[i]));
        }
        const double d = 0.5 * mean - vh.cell_mean(j);
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(vh.num_cells()));
}

std::pair<double, double> radau_errors(const DGFunction& vh, const ScalarFunction& exact,
                                       const ScalarFunction& exact_dx, const RadauSet& points, Closure closure) {
    const Mesh1D& mesh = vh.mesh();
    const std::size_t n = vh.num_cells();
    std::optional<RadauSet> edge;
    std::size_t edge_cell = n;
    if (closure == Closure::right_anchored) {
        edge = radau_points(1.0, points.k);
        edge_cell = n - 1;
    } else if (closure == Closure::left_anchored) {
        edge = radau_points(0.0, points.k);
        edge_cell = 0;
    }
    double ev = 0.0;
    double ed = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const RadauSet& set = (j == edge_cell) ? *edge : points;
        for (double xi : set.value_points) {
            ev = std::max(ev, std::abs(exact(mesh.to_physical(j, xi)) - vh.value(j, xi)));
        }
        for (double xi : set.derivative_points) {
            ed = std::max(ed, std::abs(exact_dx(mesh.to_physical(j, xi)) - vh.derivative(j, xi)));
        }
    }
    // weights near 1/2 can leave no admissible point for low k
    const double none = std::numeric_limits<double>::quiet_NaN();
    return {points.value_points.empty() ? none : ev, points.derivative_points.empty() ? none : ed};
}

double projection_distance(const DGFunction& vh, const ScalarFunction& exact, double sigma, Closure closure) {
    const int k = vh.degree();
    DGFunction proj = ggr_project(sample(vh.mesh_ptr(), exact, k), sigma, k, closure);
    proj -= vh;
    return proj.l2_norm();
}

double l2_error(const DGFunction& vh, const ScalarFunction& exact, int extra_points) {
    const Mesh1D& mesh = vh.mesh();
    const Quadrature quad = gauss_legendre(2 * (vh.degree() + 3) + extra_points);
    double s = 0.0;
    for (std::size_t j = 0; j < vh.num_cells(); ++j) {
        double c = 0.0;
        for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
            const double d = exact(mesh.to_physical(j, quad.nodes[i])) - vh.value(j, quad.nodes[i]);
            c += quad.weights[i] * d * d;
        }
        s += c * mesh.half_width(j);
    }
    return std::sqrt(s);
}

double linf_error(const DGFunction& vh, const ScalarFunction& exact) {
    const Mesh1D& mesh = vh.mesh();
    Quadrature quad = error_rule(vh.degree());
    quad.nodes.push_back(-1.0);
    quad.nodes.push_back(1.0);
    double e = 0.0;
    for (std::size_t j = 0; j < vh.num_cells(); ++j) {
        for (double xi : quad.nodes) {
            e = std::max(e, std::abs(exact(mesh.to_physical(j, xi)) - vh.value(j, xi)));
        }
    }
    return e;
}

double jump_product(const DGFunction& w, const DGFunction& v, bool periodic) {
    const std::size_t n = w.num_cells();
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        s += (w.left_end(i) - w.right_end(i - 1)) * (v.left_end(i) - v.right_end(i - 1));
    }
    if (periodic) {
        s += (w.left_end(0) - w.right_end(n - 1)) * (v.left_end(0) - v.right_end(n - 1));
    }
    return s;
}

double jump_seminorm(const DGFunction& w, bool periodic) { return std::sqrt(jump_product(w, w, periodic)); }

double broken_derivative_norm(const DGFunction& w) {
    const Quadrature quad = inner_product_rule(w.degree());
    const Mesh1D& mesh = w.mesh();
    double s = 0.0;
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
            const double d = w.derivative(j, quad.nodes[i]);
            s += quad.weights[i] * d * d * mesh.half_width(j);
        }
    }
    return std::sqrt(s);
}

std::vector<std::optional<double>> observed_order(std::span<const double> errors, std::span<const double> ns) {
    if (errors.size() != ns.size()) {
        throw InvalidArgument("observed_order: errors and N lists differ in length");
    }
    std::vector<std::optional<double>> out(errors.size());
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double a = errors[i - 1];
        const double b = errors[i];
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !(ns[i] > 0.0) ||
            !(ns[i - 1] > 0.0) || ns[i] == ns[i - 1]) {
            continue;
        }
        out[i] = std::log(a / b) / std::log(ns[i] / ns[i - 1]);
    }
    return out;
}

ErrorReport error_report(const LDGState& state, const SmoothField& exact, const FluxWeights& weights,
                         const BoundaryCondition& bc) {
    ErrorReport rep;
    rep.n = state.u.num_cells();
    rep.k = state.u.degree();
    rep.t = state.t;
    const bool periodic = bc.kind == BoundaryKind::periodic;
    for (Var v : all_vars) {
        const DGFunction& vh = state[v];
        const double sigma = weights.weight(v);
        const SmoothField field = exact.component(v);
        const ScalarFunction f = field.at(state.t);
        const double t = state.t;
        const ScalarFunction fx = [&field, t](double x) { return field.derivative(0, 1, x, t); };
        const DGFunction* partner = nullptr;
        if (v == Var::q) {
            partner = &state.p;
        } else if (v == Var::r) {
            partner = &state.u;
        }
        VariableErrors& e = rep.vars[index(v)];
        e.flux = flux_error(vh, v, f, sigma, bc, t, partner);
        e.cell_average = cell_average_error(vh, f);
        const auto [er, ed] = radau_errors(vh, f, fx, radau_points(sigma, rep.k), closure_for(v, bc.kind));
        e.radau = er;
        e.radau_derivative = ed;
        e.projection_distance = projection_distance(vh, f, sigma, closure_for(v, bc.kind));
        e.l2 = l2_error(vh, f);
        e.linf = linf_error(vh, f);
        e.jump = jump_seminorm(vh, periodic);
    }
    const double h = state.u.mesh().max_width();
    auto ratio = [&](const DGFunction& w, const DGFunction& next) {
        const double num = broken_derivative_norm(w) + jump_seminorm(w, periodic) / std::sqrt(h);
        const double den = next.l2_norm();
        return den > 0.0 ? num / den : 0.0;
    };
    rep.derivative_ratios = {ratio(state.q, state.r), ratio(state.p, state.q), ratio(state.u, state.p)};
    return rep;
}

}  // namespace ldg4
