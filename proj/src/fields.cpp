#include "ldg4/fields.hpp"

#include <cmath>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"
#include "ldg4/quadrature.hpp"

namespace ldg4 {

const char* name(Var v) {
    switch (v) {
        case Var::u:
            return "u";
        case Var::p:
            return "p";
        case Var::q:
            return "q";
        case Var::r:
            return "r";
    }
    return "?";
}

FluxWeights::FluxWeights(double theta_, double lambda_) : theta(theta_), lambda(lambda_) {
    if (!std::isfinite(theta) || !std::isfinite(lambda)) {
        throw InvalidWeight("flux weights must be finite");
    }
    if (theta == 0.5 || lambda == 0.5) {
        throw InvalidWeight("flux weights must differ from 1/2");
    }
}

double FluxWeights::weight(Var v) const {
    switch (v) {
        case Var::u:
            return theta;
        case Var::p:
            return lambda_tilde();
        case Var::q:
            return lambda;
        case Var::r:
            return theta_tilde();
    }
    return theta;
}

SmoothField SmoothField::component(Var v, int nt) const {
    const int nx = x_order(v);
    auto fn = fn_;
    return SmoothField([fn, nx, nt](int a, int b, double x, double t) { return fn(a + nt, b + nx, x, t); });
}

std::function<double(double)> SmoothField::at(double t) const {
    auto fn = fn_;
    return [fn, t](double x) { return fn(0, 0, x, t); };
}

SampledField SampledField::from_function(std::shared_ptr<const Mesh1D> mesh, const std::function<double(double)>& f,
                                         int max_mode, int quad_points) {
    const Quadrature quad = gauss_legendre(quad_points);
    const std::size_t n = mesh->num_cells();
    const auto modes = static_cast<std::size_t>(max_mode + 1);
    SampledField s;
    s.mesh = mesh;
    s.max_mode = max_mode;
    s.moments.assign(n * modes, 0.0);
    std::vector<std::vector<double>> basis(quad.nodes.size(), std::vector<double>(modes));
    for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
        legendre_values(quad.nodes[i], basis[i]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        double* row = s.moments.data() + j * modes;
        for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
            const double fv = f(mesh->to_physical(j, quad.nodes[i])) * quad.weights[i];
            for (std::size_t m = 0; m < modes; ++m) {
                row[m] += fv * basis[i][m];
            }
        }
        for (std::size_t m = 0; m < modes; ++m) {
            row[m] *= (2.0 * static_cast<double>(m) + 1.0) / 2.0;
        }
    }
    s.minus.resize(n + 1);
    s.plus.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double v = f(mesh->interface(i));
        s.minus[i] = v;
        s.plus[i] = v;
    }
    return s;
}

SampledField SampledField::from_dg(const DGFunction& w) {
    const std::size_t n = w.num_cells();
    SampledField s;
    s.mesh = w.mesh_ptr();
    s.max_mode = w.degree();
    s.moments.assign(w.coeffs().begin(), w.coeffs().end());
    s.minus.resize(n + 1);
    s.plus.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        s.minus[i] = w.right_end(i == 0 ? n - 1 : i - 1);
        s.plus[i] = w.left_end(i == n ? 0 : i);
    }
    return s;
}

}  // namespace ldg4
