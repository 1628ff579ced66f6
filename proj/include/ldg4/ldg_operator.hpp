#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ldg4/dg_function.hpp"
#include "ldg4/fields.hpp"
#include "ldg4/projection.hpp"
#include "ldg4/quadrature.hpp"

namespace ldg4 {

using TimeFunction = std::function<double(double)>;

/// Boundary treatment of the first-order system.
///
/// mixed: data = (u(a), u_x(b), u_xx(a), u_xxx(b)).
/// dirichlet: data = (u(a), u(b), u_x(a), u_x(b)) with penalties kappa1 on the
/// q-flux at the left end and kappa2 on the r-flux at the right end.
struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::periodic;
    std::array<TimeFunction, 4> data{};
    double kappa1 = 10.0;
    double kappa2 = 15.0;
    /// When set, the penalties are kappa1 / h and kappa2 / h^3.
    bool scale_penalties = false;

    static BoundaryCondition periodic() { return {}; }
    static BoundaryCondition mixed(TimeFunction g1, TimeFunction g2, TimeFunction g3, TimeFunction g4);
    static BoundaryCondition dirichlet(TimeFunction h1, TimeFunction h2, TimeFunction h3, TimeFunction h4,
                                       double kappa1 = 10.0, double kappa2 = 15.0);

    double penalty1(double h) const { return scale_penalties ? kappa1 / h : kappa1; }
    double penalty2(double h) const { return scale_penalties ? kappa2 / (h * h * h) : kappa2; }
};

enum class Nonlinearity { none, burgers_godunov };

/// u_t + alpha u_x + beta u_xx + sigma3 u_xxx + u_xxxx = 0, with alpha u_x
/// replaced by (u^2/2)_x when nonlinear is burgers_godunov.
struct ProblemCoefficients {
    double alpha = 1.0;
    double beta = 1.0;
    double sigma3 = 0.0;
    Nonlinearity nonlinear = Nonlinearity::none;
};

struct LDGState {
    DGFunction u;
    DGFunction p;
    DGFunction q;
    DGFunction r;
    double t = 0.0;

    DGFunction& operator[](Var v);
    const DGFunction& operator[](Var v) const;
};

/// Godunov flux for f(u) = u^2/2.
double godunov_flux(double u_left, double u_right);

/// Numerical trace of w (playing the role of variable v) at interface i.
///
/// Interior interfaces give sigma w^- + (1 - sigma) w^+. Boundary
/// interfaces follow bc; `partner` supplies p for the q-penalty and u for
/// the r-penalty of the Dirichlet variant.
double trace(const DGFunction& w, Var v, double sigma, std::size_t i, const BoundaryCondition& bc, double t,
             const DGFunction* partner = nullptr);

/// trace() at every interface 0..N.
std::vector<double> traces(const DGFunction& w, Var v, double sigma, const BoundaryCondition& bc, double t,
                           const DGFunction* partner = nullptr);

/// H_j(w, L_m) = (w, d/dx L_m)_j - what[j+1] L_m(1) + what[j] L_m(-1).
double h_operator(const DGFunction& w, std::span<const double> what, std::size_t j, std::size_t m);

/// out(j, m) = H_j(w, L_m) for all cells and modes.
DGFunction h_apply(const DGFunction& w, std::span<const double> what);

/// sum_j H_j(w, v) for v in V_h.
double h_bilinear(const DGFunction& w, std::span<const double> what, const DGFunction& v);

/// Recomputes p, q, r of the state from its u.
void solve_chain(LDGState& state, const FluxWeights& weights, const BoundaryCondition& bc);

/// Time derivative of u_h (Legendre coefficients) for a state whose
/// auxiliaries are consistent with u_h.
DGFunction semidiscrete_rhs(const LDGState& state, const ProblemCoefficients& coeffs, const FluxWeights& weights,
                            const BoundaryCondition& bc);

/// Flat-array evaluator of the scheme used inside time stepping.
///
/// Owns scratch buffers, so one instance must not be used from several
/// threads at once.
class LdgOperator {
public:
    LdgOperator(std::shared_ptr<const Mesh1D> mesh, int k, FluxWeights weights, BoundaryCondition bc,
                ProblemCoefficients coeffs = {});

    std::size_t size() const { return n_ * modes_; }
    int degree() const { return k_; }
    const std::shared_ptr<const Mesh1D>& mesh() const { return mesh_; }
    const FluxWeights& weights() const { return weights_; }
    const BoundaryCondition& bc() const { return bc_; }
    const ProblemCoefficients& coefficients() const { return coeffs_; }

    /// du/dt for coefficients u at time t.
    void rhs(double t, std::span<const double> u, std::span<double> dudt);

    /// Builds the consistent state for coefficients u at time t.
    LDGState state(std::span<const double> u, double t);

    std::size_t rhs_evaluations() const { return evaluations_; }

    /// Accumulation type of the derivative chain and its traces.
    using Real = double;

private:
    void chain(double t, const double* u);
    template <class T, class P>
    void var_traces(Var v, const T* w, Real* tr, double t, const P* partner) const;
    template <int K>
    void chain_impl(double t, const double* u);
    template <int K>
    void rhs_impl(double t, const double* u, double* dudt);
    template <int K>
    void add_convection(const double* u, double* acc);

    std::shared_ptr<const Mesh1D> mesh_;
    int k_;
    std::size_t n_;
    std::size_t modes_;
    FluxWeights weights_;
    BoundaryCondition bc_;
    ProblemCoefficients coeffs_;
    std::vector<double> inv_h_;
    std::vector<Real> p_, q_, r_, comb_;
    std::vector<Real> tu_, tp_, tq_, tr_, tc_;
    std::vector<double> flux_;
    Quadrature quad_;
    std::vector<double> quad_vals_;    // L_m at quadrature nodes
    std::vector<double> quad_dvals_;   // w_i * L_m' at quadrature nodes
    std::size_t evaluations_ = 0;
};

}  // namespace ldg4
