#include "ldg4/problems.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ldg4/errors.hpp"

namespace ldg4 {

std::string to_string(ProblemId id) {
    switch (id) {
        case ProblemId::linear_sine:
            return "linear-sine";
        case ProblemId::linear_sine_mixed:
            return "linear-sine-mixed";
        case ProblemId::linear_sine_dirichlet:
            return "linear-sine-dirichlet";
        case ProblemId::discontinuous_pulse:
            return "discontinuous-pulse";
        case ProblemId::kuramoto_sivashinsky:
            return "kuramoto-sivashinsky";
    }
    return "?";
}

ProblemId parse_problem(std::string_view name) {
    for (ProblemId id : {ProblemId::linear_sine, ProblemId::linear_sine_mixed, ProblemId::linear_sine_dirichlet,
                         ProblemId::discontinuous_pulse, ProblemId::kuramoto_sivashinsky}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    throw InvalidConfig("unknown problem '" + std::string(name) + "'");
}

SmoothField sine_wave() {
    return SmoothField([](int nt, int nx, double x, double t) {
        const double phase = x - t + 0.5 * std::numbers::pi * (nt + nx);
        return ((nt % 2 == 0) ? 1.0 : -1.0) * std::sin(phase);
    });
}

SmoothField pulse_series() {
    return SmoothField([](int nt, int nx, double x, double t) {
        using cd = std::complex<double>;
        const double pi = std::numbers::pi;
        double sum = (nt == 0 && nx == 0) ? 0.5 : 0.0;
        for (int w = 1; w <= 5; ++w) {
            const double a = w * pi;
            const double amp = 2.0 * std::sin(0.5 * a) / a;
            if (amp == 0.0) {
                continue;
            }
            const double b = a * a - a * a * a * a;
            const cd dt_factor(b, -a);
            const cd dx_factor(0.0, a);
            const cd e = std::exp(cd(b * t, a * (x - t)));
            sum += amp * (std::pow(dt_factor, nt) * std::pow(dx_factor, nx) * e).real();
        }
        return sum;
    });
}

SmoothField ks_travelling_wave(double c, double kappa, double x0) {
    return SmoothField([c, kappa, x0](int nt, int nx, double x, double t) {
        // profile c + 9 - 15 (T + T^2 - T^3) as a polynomial in T, differentiated
        // through d/ds P(T) = kappa P'(T) (1 - T^2)
        std::vector<double> poly = {c + 9.0, -15.0, -15.0, 15.0};
        const int order = nt + nx;
        for (int d = 0; d < order; ++d) {
            std::vector<double> next(poly.size() + 1, 0.0);
            for (std::size_t i = 1; i < poly.size(); ++i) {
                const double di = static_cast<double>(i) * poly[i] * kappa;
                next[i - 1] += di;
                next[i + 1] -= di;
            }
            poly = std::move(next);
        }
        const double tv = std::tanh(kappa * (x - c * t - x0));
        double v = 0.0;
        for (std::size_t i = poly.size(); i-- > 0;) {
            v = v * tv + poly[i];
        }
        return std::pow(-c, nt) * v;
    });
}

BoundaryCondition boundary_from_exact(BoundaryKind kind, const SmoothField& exact, Interval domain, double kappa1,
                                      double kappa2) {
    auto at = [exact](int nx, double x) { return [exact, nx, x](double t) { return exact.derivative(0, nx, x, t); }; };
    switch (kind) {
        case BoundaryKind::periodic:
            return BoundaryCondition::periodic();
        case BoundaryKind::mixed:
            return BoundaryCondition::mixed(at(0, domain.a), at(1, domain.b), at(2, domain.a), at(3, domain.b));
        case BoundaryKind::dirichlet:
            return BoundaryCondition::dirichlet(at(0, domain.a), at(0, domain.b), at(1, domain.a), at(1, domain.b),
                                                kappa1, kappa2);
    }
    return BoundaryCondition::periodic();
}

ProblemSpec make_problem(ProblemId id, double kappa1, double kappa2) {
    ProblemSpec p;
    p.id = id;
    const double two_pi = 2.0 * std::numbers::pi;
    switch (id) {
        case ProblemId::linear_sine:
            p.exact = sine_wave();
            p.domain = {0.0, two_pi};
            p.weights = FluxWeights(0.8, 1.2);
            break;
        case ProblemId::linear_sine_mixed:
        case ProblemId::linear_sine_dirichlet:
            p.exact = sine_wave();
            p.domain = {0.0, two_pi};
            p.weights = FluxWeights(1.1, 0.9);
            p.bc = boundary_from_exact(id == ProblemId::linear_sine_mixed ? BoundaryKind::mixed : BoundaryKind::dirichlet,
                                       p.exact, p.domain, kappa1, kappa2);
            break;
        case ProblemId::discontinuous_pulse:
            p.exact = pulse_series();
            p.domain = {-1.0, 1.0};
            p.weights = FluxWeights(0.8, 1.2);
            p.t_final = 0.01;
            break;
        case ProblemId::kuramoto_sivashinsky:
            p.exact = ks_travelling_wave();
            p.domain = {-30.0, 30.0};
            p.weights = FluxWeights(1.1, 0.9);
            p.coeffs = {1.0, 1.0, 4.0, Nonlinearity::burgers_godunov};
            break;
    }
    return p;
}

std::vector<std::size_t> ProblemSpec::default_n_list(int k) const {
    switch (id) {
        case ProblemId::linear_sine:
        case ProblemId::linear_sine_mixed:
        case ProblemId::linear_sine_dirichlet:
            if (k <= 1) return {16, 32, 64, 128};
            if (k == 2) return {8, 16, 32, 64};
            return {10, 15, 20, 25};
        case ProblemId::discontinuous_pulse:
            if (k <= 1) return {8, 16, 24, 32};
            if (k == 2) return {12, 16, 20, 24};
            return {4, 8, 12, 16};
        case ProblemId::kuramoto_sivashinsky:
            if (k <= 1) return {160, 320, 480, 640};
            if (k == 2) return {120, 160, 200, 240};
            return {40, 80, 120, 160};
    }
    return {16, 32};
}

}  // namespace ldg4
