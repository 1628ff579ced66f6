#include <doctest.h>

#include <cmath>
#include <random>

#include "ldg4/diagnostics.hpp"
#include "ldg4/errors.hpp"
#include "ldg4/ldg_operator.hpp"
#include "ldg4/problems.hpp"
#include "test_helpers.hpp"

using namespace ldg4;
using ldg4::testing::random_dg;
using ldg4::testing::uniform_mesh;

namespace {

BoundaryCondition zero_bc(BoundaryKind kind) {
    const TimeFunction zero = [](double) { return 0.0; };
    switch (kind) {
        case BoundaryKind::mixed:
            return BoundaryCondition::mixed(zero, zero, zero, zero);
        case BoundaryKind::dirichlet:
            return BoundaryCondition::dirichlet(zero, zero, zero, zero);
        default:
            return BoundaryCondition::periodic();
    }
}

double inner(const DGFunction& a, const DGFunction& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.num_cells(); ++j) {
        for (std::size_t m = 0; m < a.modes(); ++m) {
            s += a(j, m) * b(j, m) * a.mesh().width(j) / (2.0 * static_cast<double>(m) + 1.0);
        }
    }
    return s;
}

LDGState random_state(const std::shared_ptr<const Mesh1D>& mesh, int k, std::mt19937& rng) {
    DGFunction u = random_dg(mesh, k, rng);
    DGFunction z(mesh, k);
    return {u, z, z, z, 0.0};
}

}  // namespace

TEST_CASE("weighted traces are skew-symmetric under complementary weights") {
    std::mt19937 rng(7);
    const auto mesh = uniform_mesh(12);
    for (BoundaryKind kind : {BoundaryKind::periodic, BoundaryKind::mixed}) {
        CAPTURE(static_cast<int>(kind));
        const auto bc = zero_bc(kind);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 1 + trial % 3;
            const DGFunction w = random_dg(mesh, k, rng);
            const DGFunction v = random_dg(mesh, k, rng);
            // (u, r) share theta / 1 - theta, (p, q) share 1 - lambda / lambda
            const FluxWeights wts(0.8 + 0.1 * (trial % 5), 1.2 - 0.05 * (trial % 7));
            const double s1 = h_bilinear(w, traces(w, Var::u, wts.theta, bc, 0.0), v) +
                              h_bilinear(v, traces(v, Var::r, wts.theta_tilde(), bc, 0.0, &w), w);
            const double s2 = h_bilinear(w, traces(w, Var::p, wts.lambda_tilde(), bc, 0.0), v) +
                              h_bilinear(v, traces(v, Var::q, wts.lambda, bc, 0.0, &w), w);
            CHECK(std::abs(s1) <= 1e-12);
            CHECK(std::abs(s2) <= 1e-12);
        }
    }
}

TEST_CASE("godunov flux truth table") {
    // rarefaction across zero
    CHECK(godunov_flux(-1.0, 2.0) == 0.0);
    CHECK(godunov_flux(-3.0, 0.5) == 0.0);
    // rightward and leftward rarefaction
    CHECK(godunov_flux(1.0, 2.0) == doctest::Approx(0.5));
    CHECK(godunov_flux(-2.0, -1.0) == doctest::Approx(0.5));
    // shocks take the larger flux
    CHECK(godunov_flux(2.0, -1.0) == doctest::Approx(2.0));
    CHECK(godunov_flux(1.0, -3.0) == doctest::Approx(4.5));
    CHECK(godunov_flux(3.0, 1.0) == doctest::Approx(4.5));
    CHECK(godunov_flux(-1.0, -3.0) == doctest::Approx(4.5));
    // consistency
    for (double u : {-2.5, -0.3, 0.0, 0.7, 4.0}) {
        CHECK(godunov_flux(u, u) == doctest::Approx(0.5 * u * u));
    }
}

TEST_CASE("auxiliary variables satisfy the chain equations") {
    std::mt19937 rng(11);
    const auto mesh = uniform_mesh(9);
    const FluxWeights wts(1.1, 0.9);
    for (BoundaryKind kind : {BoundaryKind::periodic, BoundaryKind::mixed, BoundaryKind::dirichlet}) {
        CAPTURE(static_cast<int>(kind));
        const auto bc = zero_bc(kind);
        for (int k = 1; k <= 3; ++k) {
            LDGState s = random_state(mesh, k, rng);
            solve_chain(s, wts, bc);
            // (next, L_m)_j + H_j(prev, L_m) = 0
            auto residual = [&](const DGFunction& prev, const DGFunction& next, const std::vector<double>& tr) {
                double worst = 0.0;
                const DGFunction h = h_apply(prev, tr);
                for (std::size_t j = 0; j < prev.num_cells(); ++j) {
                    for (std::size_t m = 0; m < prev.modes(); ++m) {
                        const double mass = mesh->width(j) / (2.0 * static_cast<double>(m) + 1.0);
                        worst = std::max(worst, std::abs(mass * next(j, m) + h(j, m)));
                    }
                }
                return worst;
            };
            CHECK(residual(s.u, s.p, traces(s.u, Var::u, wts.theta, bc, 0.0)) < 1e-12);
            CHECK(residual(s.p, s.q, traces(s.p, Var::p, wts.lambda_tilde(), bc, 0.0)) < 1e-11);
            CHECK(residual(s.q, s.r, traces(s.q, Var::q, wts.lambda, bc, 0.0, &s.p)) < 1e-10);
        }
    }
}

TEST_CASE("flat operator agrees with the reference assembly") {
    std::mt19937 rng(3);
    const auto mesh = uniform_mesh(10);
    const FluxWeights wts(0.8, 1.2);
    const ProblemCoefficients lin{1.0, 1.0, 0.7, Nonlinearity::none};
    const ProblemCoefficients ks{0.0, 1.0, 0.0, Nonlinearity::burgers_godunov};
    struct Setup {
        BoundaryKind kind;
        ProblemCoefficients coeffs;
    };
    for (const Setup& st : {Setup{BoundaryKind::periodic, lin}, Setup{BoundaryKind::mixed, lin},
                            Setup{BoundaryKind::dirichlet, lin}, Setup{BoundaryKind::periodic, ks}}) {
        CAPTURE(static_cast<int>(st.kind));
        const auto bc = zero_bc(st.kind);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(k);
            LDGState s = random_state(mesh, k, rng);
            LdgOperator op(mesh, k, wts, bc, st.coeffs);
            solve_chain(s, wts, bc);
            const DGFunction ref = semidiscrete_rhs(s, st.coeffs, wts, bc);
            std::vector<double> out(op.size());
            op.rhs(0.0, s.u.coeffs(), out);
            double worst = 0.0;
            double scale = 0.0;
            for (std::size_t i = 0; i < out.size(); ++i) {
                worst = std::max(worst, std::abs(out[i] - ref.coeffs()[i]));
                scale = std::max(scale, std::abs(ref.coeffs()[i]));
            }
            CHECK(worst <= 1e-13 * scale);
            const LDGState built = op.state(s.u.coeffs(), 0.0);
            CHECK((built.r - s.r).l2_norm() <= 1e-13 * s.r.l2_norm());
        }
    }
}

TEST_CASE("pure biharmonic part dissipates exactly the q energy") {
    std::mt19937 rng(5);
    const auto mesh = uniform_mesh(14);
    const ProblemCoefficients bih{0.0, 0.0, 0.0, Nonlinearity::none};
    for (BoundaryKind kind : {BoundaryKind::periodic, BoundaryKind::mixed}) {
        const auto bc = zero_bc(kind);
        for (const FluxWeights wts : {FluxWeights(0.8, 1.2), FluxWeights(1.1, 0.9), FluxWeights(1.0, 1.0)}) {
            for (int k = 1; k <= 3; ++k) {
                LDGState s = random_state(mesh, k, rng);
                solve_chain(s, wts, bc);
                const DGFunction ut = semidiscrete_rhs(s, bih, wts, bc);
                const double qq = inner(s.q, s.q);
                CHECK(std::abs(inner(ut, s.u) + qq) <= 1e-12 * qq);
            }
        }
    }
}

TEST_CASE("penalised boundary terms make the dirichlet variant dissipative") {
    std::mt19937 rng(9);
    const auto mesh = uniform_mesh(14);
    const ProblemCoefficients bih{0.0, 0.0, 0.0, Nonlinearity::none};
    const auto bc = zero_bc(BoundaryKind::dirichlet);
    const FluxWeights wts(1.1, 0.9);
    for (int k = 1; k <= 3; ++k) {
        LDGState s = random_state(mesh, k, rng);
        solve_chain(s, wts, bc);
        const DGFunction ut = semidiscrete_rhs(s, bih, wts, bc);
        const double pa = s.p.left_end(0);
        const double ub = s.u.right_end(mesh->num_cells() - 1);
        const double expected = -inner(s.q, s.q) - bc.kappa1 * pa * pa - bc.kappa2 * ub * ub;
        CHECK(inner(ut, s.u) == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("dirichlet penalties scale with the mesh when asked") {
    auto bc = zero_bc(BoundaryKind::dirichlet);
    CHECK(bc.penalty1(0.1) == 10.0);
    CHECK(bc.penalty2(0.1) == 15.0);
    bc.scale_penalties = true;
    CHECK(bc.penalty1(0.1) == doctest::Approx(100.0));
    CHECK(bc.penalty2(0.1) == doctest::Approx(15000.0));
    const TimeFunction zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(BoundaryCondition::dirichlet(zero, zero, zero, zero, 0.0, 1.0), InvalidArgument);
}

TEST_CASE("scheme reproduces derivatives of smooth data") {
    const SmoothField ex = sine_wave();
    const FluxWeights wts(0.8, 1.2);
    const auto bc = BoundaryCondition::periodic();
    for (int k = 1; k <= 3; ++k) {
        double prev = 0.0;
        for (std::size_t n : {16u, 32u}) {
            const auto mesh = uniform_mesh(n);
            LdgOperator op(mesh, k, wts, bc);
            const DGFunction u = ggr_project(sample(mesh, ex.at(0.0), k), wts.theta, k, Closure::periodic);
            const LDGState s = op.state(u.coeffs(), 0.0);
            const double err = l2_error(s.q, ex.component(Var::q).at(0.0));
            if (prev > 0.0) {
                CHECK(ldg4::testing::order(prev, err, 16, 32) > k - 0.2);
            }
            prev = err;
        }
    }
}

TEST_CASE("operator rejects bad inputs") {
    const auto mesh = uniform_mesh(4);
    CHECK_THROWS_AS(LdgOperator(mesh, -1, FluxWeights(0.8, 1.2), BoundaryCondition::periodic()), InvalidArgument);
    DGFunction w(mesh, 1);
    CHECK_THROWS_AS(trace(w, Var::u, 0.8, 5, BoundaryCondition::periodic(), 0.0), InvalidArgument);
    CHECK_THROWS_AS(trace(w, Var::r, 0.2, 4, zero_bc(BoundaryKind::dirichlet), 0.0), InvalidArgument);
    CHECK_THROWS_AS(FluxWeights(0.5, 1.2), InvalidWeight);
    CHECK_THROWS_AS(FluxWeights(0.8, 0.5), InvalidWeight);
}
