#include "ldg4/time_integrator.hpp"

#include <algorithm>
#include <string>

namespace ldg4 {

double default_cfl(int k) {
    switch (k) {
        case 0:
        case 1:
            return 1e-3;
        case 2:
            return 1e-4;
        default:
            return 1e-5;
    }
}

double time_step(const TimeStepConfig& config, double h) {
    if (config.dt_override) {
        if (!(*config.dt_override > 0.0)) {
            throw InvalidArgument("time step override must be positive");
        }
        return *config.dt_override;
    }
    if (!(config.cfl > 0.0)) {
        throw InvalidArgument("cfl must be positive");
    }
    return config.cfl * h * h * h * h;
}

std::size_t step_count(const TimeStepConfig& config, double h) {
    if (config.t_final <= 0.0) {
        return 0;
    }
    const double dt = time_step(config, h);
    const auto n = static_cast<std::size_t>(std::ceil(config.t_final / dt - 1e-9));
    return std::max<std::size_t>(n, 1);
}

LDGState rk3_step(const LDGState& state, double dt, LdgOperator& op) {
    if (!(dt > 0.0)) {
        throw InvalidArgument("rk3_step: dt must be positive");
    }
    std::vector<double> y(state.u.coeffs().begin(), state.u.coeffs().end());
    Rk3Workspace ws;
    rk3_step(
        std::span<double>(y), state.t, dt,
        [&op](double t, std::span<const double> in, std::span<double> out) { op.rhs(t, in, out); }, ws);
    return op.state(y, state.t + dt);
}

LDGState run(const LDGState& initial, const TimeStepConfig& config, LdgOperator& op, const Probe* probe,
             const ProgressCallback& progress) {
    if (!(config.t_final >= 0.0)) {
        throw InvalidArgument("t_final must be nonnegative");
    }
    const double t_end = config.t_final;
    const double t0 = initial.t;
    std::vector<double> stops;
    if (probe != nullptr) {
        for (double s : probe->times) {
            if (s >= t0 && s <= t_end) {
                stops.push_back(s);
            }
        }
        std::sort(stops.begin(), stops.end());
        stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    }
    std::size_t next_stop = 0;
    auto fire_probes = [&](double t, std::span<const double> y) {
        while (next_stop < stops.size() && stops[next_stop] <= t) {
            probe->callback(op.state(y, stops[next_stop]));
            ++next_stop;
        }
    };

    std::vector<double> y(initial.u.coeffs().begin(), initial.u.coeffs().end());
    fire_probes(t0, y);
    if (t_end <= t0) {
        return initial;
    }
    const double dt = time_step(config, op.mesh()->max_width());
    auto rhs = [&op](double t, std::span<const double> in, std::span<double> out) { op.rhs(t, in, out); };
    Rk3Workspace ws;
    // Time is anchor + count * dt rather than a running sum: over 10^7 steps
    // the rounding in t += dt drifts by ~1e-11, which shows up as a phase error.
    double anchor = t0;
    std::size_t since_anchor = 0;
    double t = t0;
    std::size_t step = 0;
    while (t < t_end) {
        double target = t_end;
        if (next_stop < stops.size()) {
            target = std::min(target, stops[next_stop]);
        }
        double h = dt;
        bool lands = false;
        // land exactly on the next stop; avoid a sliver step just before it
        if (t + h >= target || target - (t + h) < 1e-12 * dt) {
            h = target - t;
            lands = true;
        }
        rk3_step(std::span<double>(y), t, h, rhs, ws, step);
        ++step;
        if (lands) {
            t = anchor = target;
            since_anchor = 0;
        } else {
            ++since_anchor;
            t = anchor + static_cast<double>(since_anchor) * dt;
        }
        if (progress) {
            progress(step, t);
        }
        fire_probes(t, y);
    }
    return op.state(y, t_end);
}

}  // namespace ldg4
