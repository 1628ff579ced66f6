#include "ldg4/ldg_operator.hpp"

#include <algorithm>
#include <cmath>

#include "ldg4/errors.hpp"
#include "ldg4/legendre.hpp"

namespace ldg4 {

BoundaryCondition BoundaryCondition::mixed(TimeFunction g1, TimeFunction g2, TimeFunction g3, TimeFunction g4) {
    BoundaryCondition bc;
    bc.kind = BoundaryKind::mixed;
    bc.data = {std::move(g1), std::move(g2), std::move(g3), std::move(g4)};
    return bc;
}

BoundaryCondition BoundaryCondition::dirichlet(TimeFunction h1, TimeFunction h2, TimeFunction h3, TimeFunction h4,
                                               double kappa1, double kappa2) {
    if (!(kappa1 > 0.0) || !(kappa2 > 0.0)) {
        throw InvalidArgument("dirichlet penalties must be positive");
    }
    BoundaryCondition bc;
    bc.kind = BoundaryKind::dirichlet;
    bc.data = {std::move(h1), std::move(h2), std::move(h3), std::move(h4)};
    bc.kappa1 = kappa1;
    bc.kappa2 = kappa2;
    return bc;
}

DGFunction& LDGState::operator[](Var v) {
    switch (v) {
        case Var::u:
            return u;
        case Var::p:
            return p;
        case Var::q:
            return q;
        case Var::r:
            return r;
    }
    return u;
}

const DGFunction& LDGState::operator[](Var v) const { return const_cast<LDGState&>(*this)[v]; }

double godunov_flux(double u_left, double u_right) {
    if (u_left <= u_right) {
        if (u_left <= 0.0 && u_right >= 0.0) {
            return 0.0;
        }
        return 0.5 * std::min(u_left * u_left, u_right * u_right);
    }
    return 0.5 * std::max(u_left * u_left, u_right * u_right);
}

namespace {

// Boundary trace given the one-sided interior limit and, for Dirichlet
// penalties, the partner's interior limit.
double boundary_trace(Var v, bool left, double inside, double partner_inside, const BoundaryCondition& bc, double t,
                      double h) {
    const auto& d = bc.data;
    if (bc.kind == BoundaryKind::mixed) {
        if (left) {
            switch (v) {
                case Var::u:
                    return d[0](t);
                case Var::q:
                    return d[2](t);
                default:
                    return inside;
            }
        }
        switch (v) {
            case Var::p:
                return d[1](t);
            case Var::r:
                return d[3](t);
            default:
                return inside;
        }
    }
    // dirichlet
    if (left) {
        switch (v) {
            case Var::u:
                return d[0](t);
            case Var::p:
                return d[2](t);
            case Var::q:
                return inside + bc.penalty1(h) * (partner_inside - d[2](t));
            case Var::r:
                return inside;
        }
    }
    switch (v) {
        case Var::u:
            return d[1](t);
        case Var::p:
            return d[3](t);
        case Var::q:
            return inside;
        case Var::r:
            return inside - bc.penalty2(h) * (d[1](t) - partner_inside);
    }
    return inside;
}

bool needs_partner(const BoundaryCondition& bc, Var v) {
    return bc.kind == BoundaryKind::dirichlet && (v == Var::q || v == Var::r);
}

}  // namespace

double trace(const DGFunction& w, Var v, double sigma, std::size_t i, const BoundaryCondition& bc, double t,
             const DGFunction* partner) {
    const std::size_t n = w.num_cells();
    if (i > n) {
        throw InvalidArgument("trace: interface index out of range");
    }
    if (i > 0 && i < n) {
        return sigma * w.right_end(i - 1) + (1.0 - sigma) * w.left_end(i);
    }
    if (bc.kind == BoundaryKind::periodic) {
        return sigma * w.right_end(n - 1) + (1.0 - sigma) * w.left_end(0);
    }
    if (needs_partner(bc, v) && partner == nullptr) {
        throw InvalidArgument("trace: dirichlet penalty flux needs its partner variable");
    }
    const bool left = (i == 0);
    const double inside = left ? w.left_end(0) : w.right_end(n - 1);
    double other = 0.0;
    if (partner != nullptr) {
        other = left ? partner->left_end(0) : partner->right_end(n - 1);
    }
    return boundary_trace(v, left, inside, other, bc, t, w.mesh().max_width());
}

std::vector<double> traces(const DGFunction& w, Var v, double sigma, const BoundaryCondition& bc, double t,
                           const DGFunction* partner) {
    std::vector<double> out(w.num_cells() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = trace(w, v, sigma, i, bc, t, partner);
    }
    return out;
}

double h_operator(const DGFunction& w, std::span<const double> what, std::size_t j, std::size_t m) {
    double s = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
        s += stiffness_entry(static_cast<int>(n), static_cast<int>(m)) * w(j, n);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return s - what[j + 1] + sign * what[j];
}

DGFunction h_apply(const DGFunction& w, std::span<const double> what) {
    DGFunction out(w.mesh_ptr(), w.degree());
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        for (std::size_t m = 0; m < w.modes(); ++m) {
            out(j, m) = h_operator(w, what, j, m);
        }
    }
    return out;
}

double h_bilinear(const DGFunction& w, std::span<const double> what, const DGFunction& v) {
    if (!w.same_space(v)) {
        throw InvalidArgument("h_bilinear: w and v live in different spaces");
    }
    double s = 0.0;
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        for (std::size_t m = 0; m < w.modes(); ++m) {
            s += v(j, m) * h_operator(w, what, j, m);
        }
    }
    return s;
}

namespace {

// Applies -M^{-1} H(w, .) with the given traces.
DGFunction derivative_step(const DGFunction& w, std::span<const double> what) {
    DGFunction out = h_apply(w, what);
    const Mesh1D& mesh = w.mesh();
    for (std::size_t j = 0; j < out.num_cells(); ++j) {
        for (std::size_t m = 0; m < out.modes(); ++m) {
            out(j, m) *= -(2.0 * static_cast<double>(m) + 1.0) / mesh.width(j);
        }
    }
    return out;
}

}  // namespace

void solve_chain(LDGState& s, const FluxWeights& wts, const BoundaryCondition& bc) {
    s.p = derivative_step(s.u, traces(s.u, Var::u, wts.theta, bc, s.t));
    s.q = derivative_step(s.p, traces(s.p, Var::p, wts.lambda_tilde(), bc, s.t));
    s.r = derivative_step(s.q, traces(s.q, Var::q, wts.lambda, bc, s.t, &s.p));
}

DGFunction semidiscrete_rhs(const LDGState& s, const ProblemCoefficients& c, const FluxWeights& wts,
                            const BoundaryCondition& bc) {
    if (c.nonlinear != Nonlinearity::none && bc.kind != BoundaryKind::periodic) {
        throw InvalidArgument("the Godunov convection term is only available with periodic boundaries");
    }
    const Mesh1D& mesh = s.u.mesh();
    const int k = s.u.degree();
    DGFunction acc(s.u.mesh_ptr(), k);
    if (c.nonlinear == Nonlinearity::none) {
        acc.axpy(c.alpha, h_apply(s.u, traces(s.u, Var::u, wts.theta, bc, s.t)));
    } else {
        const std::size_t n = s.u.num_cells();
        std::vector<double> flux(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            const double ul = s.u.right_end(i == 0 ? n - 1 : i - 1);
            const double ur = s.u.left_end(i == n ? 0 : i);
            flux[i] = godunov_flux(ul, ur);
        }
        const Quadrature quad = inner_product_rule(k);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < acc.modes(); ++m) {
                double vol = 0.0;
                for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
                    const double uv = s.u.value(j, quad.nodes[i]);
                    vol += quad.weights[i] * 0.5 * uv * uv * legendre_eval(static_cast<int>(m), quad.nodes[i], 1);
                }
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                acc(j, m) += vol - flux[j + 1] + sign * flux[j];
            }
        }
    }
    acc.axpy(c.beta, h_apply(s.p, traces(s.p, Var::p, wts.lambda_tilde(), bc, s.t)));
    if (c.sigma3 != 0.0) {
        acc.axpy(c.sigma3, h_apply(s.q, traces(s.q, Var::q, wts.lambda, bc, s.t, &s.p)));
    }
    acc.axpy(1.0, h_apply(s.r, traces(s.r, Var::r, wts.theta_tilde(), bc, s.t, &s.u)));
    for (std::size_t j = 0; j < acc.num_cells(); ++j) {
        for (std::size_t m = 0; m < acc.modes(); ++m) {
            acc(j, m) *= (2.0 * static_cast<double>(m) + 1.0) / mesh.width(j);
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// LdgOperator

LdgOperator::LdgOperator(std::shared_ptr<const Mesh1D> mesh, int k, FluxWeights weights, BoundaryCondition bc,
                         ProblemCoefficients coeffs)
    : mesh_(std::move(mesh)),
      k_(k),
      n_(mesh_->num_cells()),
      modes_(static_cast<std::size_t>(k + 1)),
      weights_(weights),
      bc_(std::move(bc)),
      coeffs_(coeffs) {
    if (k < 0) {
        throw InvalidArgument("LdgOperator: negative degree");
    }
    if (coeffs_.nonlinear != Nonlinearity::none && bc_.kind != BoundaryKind::periodic) {
        throw InvalidArgument("the Godunov convection term is only available with periodic boundaries");
    }
    inv_h_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        inv_h_[j] = 1.0 / mesh_->width(j);
    }
    const std::size_t sz = n_ * modes_;
    p_.assign(sz, 0.0);
    q_.assign(sz, 0.0);
    r_.assign(sz, 0.0);
    comb_.assign(sz, 0.0);
    tu_.assign(n_ + 1, 0.0);
    tp_.assign(n_ + 1, 0.0);
    tq_.assign(n_ + 1, 0.0);
    tr_.assign(n_ + 1, 0.0);
    tc_.assign(n_ + 1, 0.0);
    flux_.assign(n_ + 1, 0.0);
    quad_ = inner_product_rule(k);
    const std::size_t nq = quad_.nodes.size();
    quad_vals_.resize(nq * modes_);
    quad_dvals_.resize(nq * modes_);
    std::vector<double> vals(modes_);
    std::vector<double> ders(modes_);
    for (std::size_t i = 0; i < nq; ++i) {
        legendre_values_and_derivs(quad_.nodes[i], vals, ders);
        for (std::size_t m = 0; m < modes_; ++m) {
            quad_vals_[i * modes_ + m] = vals[m];
            quad_dvals_[i * modes_ + m] = quad_.weights[i] * ders[m];
        }
    }
}

template <class T, class P>
void LdgOperator::var_traces(Var v, const T* w, Real* tr, double t, const P* partner) const {
    const Real sigma = weights_.weight(v);
    const Real tilde = 1.0L - sigma;
    const std::size_t m = modes_;
    Real prev_right = 0.0;
    Real first_left = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        const T* c = w + j * m;
        Real right = 0.0;
        Real left = 0.0;
        Real s = 1.0;
        for (std::size_t a = 0; a < m; ++a) {
            right += c[a];
            left += s * c[a];
            s = -s;
        }
        if (j == 0) {
            first_left = left;
        } else {
            tr[j] = sigma * prev_right + tilde * left;
        }
        prev_right = right;
    }
    if (bc_.kind == BoundaryKind::periodic) {
        tr[0] = tr[n_] = sigma * prev_right + tilde * first_left;
        return;
    }
    auto left_end = [m](const P* c) {
        Real s = 1.0;
        Real acc = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            acc += s * c[a];
            s = -s;
        }
        return acc;
    };
    auto right_end = [m](const P* c) {
        Real acc = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            acc += c[a];
        }
        return acc;
    };
    const double h = mesh_->max_width();
    const Real pl = partner ? left_end(partner) : 0.0L;
    const Real pr = partner ? right_end(partner + (n_ - 1) * m) : 0.0L;
    tr[0] = boundary_trace(v, true, static_cast<double>(first_left), static_cast<double>(pl), bc_, t, h);
    tr[n_] = boundary_trace(v, false, static_cast<double>(prev_right), static_cast<double>(pr), bc_, t, h);
}

namespace {

using Real = LdgOperator::Real;

// out(j, m) = scale(j, m) * (S_m(w_j) - tr[j+1] + (-1)^m tr[j]) where
// S_m = 2 * sum_{n < m, n + m odd} w_n.
template <int K, class In, class Out>
inline void apply_h(int k_rt, std::size_t n, const In* w, const Real* tr, const double* inv_h, double factor,
                    Out* out) {
    const int k = K >= 0 ? K : k_rt;
    const std::size_t modes = static_cast<std::size_t>(k + 1);
    for (std::size_t j = 0; j < n; ++j) {
        const In* c = w + j * modes;
        Out* o = out + j * modes;
        const Real tl = tr[j];
        const Real trr = tr[j + 1];
        const Real f = factor * inv_h[j];
        Real s_even = 0.0;  // S_m for the most recent even m
        Real s_odd = 0.0;   // S_m for the most recent odd m
        for (int m = 0; m <= k; ++m) {
            Real s;
            if (m == 0) {
                s = 0.0;
            } else if (m % 2 == 1) {
                s_odd += 2.0 * c[m - 1];
                s = s_odd;
            } else {
                s_even += 2.0 * c[m - 1];
                s = s_even;
            }
            const Real sign = (m % 2 == 0) ? 1.0 : -1.0;
            o[m] = static_cast<Out>(f * (2 * m + 1) * (s - trr + sign * tl));
        }
    }
}

}  // namespace

template <int K>
void LdgOperator::chain_impl(double t, const double* u) {
    const bool dir = bc_.kind == BoundaryKind::dirichlet;
    var_traces(Var::u, u, tu_.data(), t, static_cast<const Real*>(nullptr));
    apply_h<K>(k_, n_, u, tu_.data(), inv_h_.data(), -1.0, p_.data());
    var_traces(Var::p, p_.data(), tp_.data(), t, static_cast<const Real*>(nullptr));
    apply_h<K>(k_, n_, p_.data(), tp_.data(), inv_h_.data(), -1.0, q_.data());
    var_traces(Var::q, q_.data(), tq_.data(), t, dir ? p_.data() : static_cast<const Real*>(nullptr));
    apply_h<K>(k_, n_, q_.data(), tq_.data(), inv_h_.data(), -1.0, r_.data());
    var_traces(Var::r, r_.data(), tr_.data(), t, dir ? u : static_cast<const double*>(nullptr));
}

template <int K>
void LdgOperator::add_convection(const double* u, double* acc) {
    const int k = K >= 0 ? K : k_;
    const std::size_t modes = static_cast<std::size_t>(k + 1);
    const std::size_t nq = quad_.nodes.size();
    double prev_right = 0.0;
    double first_left = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        const double* c = u + j * modes;
        double right = 0.0;
        double left = 0.0;
        double s = 1.0;
        for (std::size_t a = 0; a < modes; ++a) {
            right += c[a];
            left += s * c[a];
            s = -s;
        }
        if (j == 0) {
            first_left = left;
        } else {
            flux_[j] = godunov_flux(prev_right, left);
        }
        prev_right = right;
    }
    flux_[0] = flux_[n_] = godunov_flux(prev_right, first_left);
    for (std::size_t j = 0; j < n_; ++j) {
        const double* c = u + j * modes;
        double* o = acc + j * modes;
        const double f = inv_h_[j];
        for (std::size_t i = 0; i < nq; ++i) {
            const double* lv = quad_vals_.data() + i * modes;
            const double* ld = quad_dvals_.data() + i * modes;
            double uv = 0.0;
            for (std::size_t a = 0; a < modes; ++a) {
                uv += c[a] * lv[a];
            }
            const double fv = 0.5 * uv * uv;
            for (std::size_t m = 1; m < modes; ++m) {
                o[m] += f * static_cast<double>(2 * m + 1) * fv * ld[m];
            }
        }
        for (std::size_t m = 0; m < modes; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            o[m] += f * static_cast<double>(2 * m + 1) * (-flux_[j + 1] + sign * flux_[j]);
        }
    }
}

template <int K>
void LdgOperator::rhs_impl(double t, const double* u, double* dudt) {
    chain_impl<K>(t, u);
    const bool linear = coeffs_.nonlinear == Nonlinearity::none;
    const Real a = linear ? coeffs_.alpha : 0.0;
    const Real b = coeffs_.beta;
    const Real s3 = coeffs_.sigma3;
    const std::size_t sz = n_ * modes_;
    if (s3 != 0.0) {
        var_traces(Var::q, q_.data(), tq_.data(), t,
                   bc_.kind == BoundaryKind::dirichlet ? p_.data() : static_cast<const Real*>(nullptr));
    }
    for (std::size_t i = 0; i < sz; ++i) {
        comb_[i] = a * u[i] + b * p_[i] + s3 * q_[i] + r_[i];
    }
    for (std::size_t i = 0; i <= n_; ++i) {
        tc_[i] = a * tu_[i] + b * tp_[i] + s3 * tq_[i] + tr_[i];
    }
    apply_h<K>(k_, n_, comb_.data(), tc_.data(), inv_h_.data(), 1.0, dudt);
    if (!linear) {
        add_convection<K>(u, dudt);
    }
}

void LdgOperator::chain(double t, const double* u) {
    switch (k_) {
        case 0:
            chain_impl<0>(t, u);
            break;
        case 1:
            chain_impl<1>(t, u);
            break;
        case 2:
            chain_impl<2>(t, u);
            break;
        case 3:
            chain_impl<3>(t, u);
            break;
        case 4:
            chain_impl<4>(t, u);
            break;
        default:
            chain_impl<-1>(t, u);
    }
}

void LdgOperator::rhs(double t, std::span<const double> u, std::span<double> dudt) {
    if (u.size() != size() || dudt.size() != size()) {
        throw InvalidArgument("LdgOperator::rhs: coefficient vector has the wrong length");
    }
    ++evaluations_;
    switch (k_) {
        case 0:
            rhs_impl<0>(t, u.data(), dudt.data());
            break;
        case 1:
            rhs_impl<1>(t, u.data(), dudt.data());
            break;
        case 2:
            rhs_impl<2>(t, u.data(), dudt.data());
            break;
        case 3:
            rhs_impl<3>(t, u.data(), dudt.data());
            break;
        case 4:
            rhs_impl<4>(t, u.data(), dudt.data());
            break;
        default:
            rhs_impl<-1>(t, u.data(), dudt.data());
    }
}

LDGState LdgOperator::state(std::span<const double> u, double t) {
    if (u.size() != size()) {
        throw InvalidArgument("LdgOperator::state: coefficient vector has the wrong length");
    }
    chain(t, u.data());
    LDGState s{DGFunction(mesh_, k_), DGFunction(mesh_, k_), DGFunction(mesh_, k_), DGFunction(mesh_, k_), t};
    std::copy(u.begin(), u.end(), s.u.coeffs().begin());
    std::copy(p_.begin(), p_.end(), s.p.coeffs().begin());
    std::copy(q_.begin(), q_.end(), s.q.coeffs().begin());
    std::copy(r_.begin(), r_.end(), s.r.coeffs().begin());
    return s;
}

}  // namespace ldg4
