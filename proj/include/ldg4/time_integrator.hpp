#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ldg4/errors.hpp"
#include "ldg4/ldg_operator.hpp"

namespace ldg4 {

struct TimeStepConfig {
    double cfl = 1e-3;
    double t_final = 0.0;
    std::optional<double> dt_override;
};

/// CFL constant paired with the h^4 step restriction: 1e-3, 1e-4, 1e-5 for k = 1, 2, 3.
double default_cfl(int k);

/// dt = cfl * h^4 unless overridden.
double time_step(const TimeStepConfig& config, double h);

/// Number of steps to reach t_final with the last one truncated.
std::size_t step_count(const TimeStepConfig& config, double h);

struct Rk3Workspace {
    std::vector<double> stage;
    std::vector<double> rate;
    std::vector<double> increment;
    /// Low-order bits lost when the increment was added to y (Kahan carry).
    /// Persists between steps; resized and zeroed when the length changes.
    std::vector<double> carry;
};

/// One Shu-Osher TVD-RK3 step of y' = rhs(t, y) in place. Throws BlowUp
/// (carrying `step`) as soon as a stage produces a non-finite value.
///
/// The stages are written in increment form, y_new = y + (k1 + k2 + 4 k3) / 6,
/// and the increment is added with compensated summation, which keeps the
/// rounding of 10^6-10^7 step runs below the 1e-12 level.
template <class Rhs>
void rk3_step(std::span<double> y, double t, double dt, Rhs&& rhs, Rk3Workspace& ws, std::size_t step = 0) {
    const std::size_t n = y.size();
    ws.stage.resize(n);
    ws.rate.resize(n);
    ws.increment.resize(n);
    if (ws.carry.size() != n) {
        ws.carry.assign(n, 0.0);
    }
    auto check = [&](std::span<const double> v, double at) {
        double s = 0.0;
        for (double x : v) {
            s += x;
        }
        if (!std::isfinite(s)) {
            throw BlowUp(step, at);
        }
    };
    const std::span<const double> yc(y.data(), n);

    rhs(t, yc, std::span<double>(ws.rate));
    for (std::size_t i = 0; i < n; ++i) {
        const double k1 = dt * ws.rate[i];
        ws.increment[i] = k1;
        ws.stage[i] = y[i] + k1;
    }
    check(ws.stage, t + dt);

    rhs(t + dt, std::span<const double>(ws.stage), std::span<double>(ws.rate));
    for (std::size_t i = 0; i < n; ++i) {
        ws.increment[i] += dt * ws.rate[i];
        ws.stage[i] = y[i] + 0.25 * ws.increment[i];
    }
    check(ws.stage, t + 0.5 * dt);

    rhs(t + 0.5 * dt, std::span<const double>(ws.stage), std::span<double>(ws.rate));
    for (std::size_t i = 0; i < n; ++i) {
        const double delta = (ws.increment[i] + 4.0 * dt * ws.rate[i]) / 6.0 - ws.carry[i];
        const double sum = y[i] + delta;
        ws.carry[i] = (sum - y[i]) - delta;
        y[i] = sum;
    }
    check(yc, t + dt);
}

/// Advances the state by one step through the operator's rhs.
LDGState rk3_step(const LDGState& state, double dt, LdgOperator& op);

/// Called after each accepted step with (step index, time).
using ProgressCallback = std::function<void(std::size_t, double)>;

/// Probe invoked with the consistent state at each requested time.
struct Probe {
    std::vector<double> times;
    std::function<void(const LDGState&)> callback;
};

/// Integrates from the initial state to config.t_final. Steps are shortened
/// so that every probe time and the final time are hit exactly.
LDGState run(const LDGState& initial, const TimeStepConfig& config, LdgOperator& op, const Probe* probe = nullptr,
             const ProgressCallback& progress = {});

}  // namespace ldg4
