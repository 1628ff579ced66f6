#include "ldg4/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "ldg4/errors.hpp"
#include "ldg4/time_integrator.hpp"

namespace ldg4 {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw InvalidConfig("invalid number for '" + key + "': '" + text + "'");
    }
    return v;
}

long parse_int(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw InvalidConfig("invalid integer for '" + key + "': '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

}  // namespace

std::string to_string(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::periodic:
            return "periodic";
        case BoundaryKind::mixed:
            return "mixed";
        case BoundaryKind::dirichlet:
            return "dirichlet";
    }
    return "?";
}

BoundaryKind parse_boundary(const std::string& name) {
    if (name == "periodic") return BoundaryKind::periodic;
    if (name == "mixed") return BoundaryKind::mixed;
    if (name == "dirichlet") return BoundaryKind::dirichlet;
    throw InvalidConfig("unknown boundary condition '" + name + "'");
}

std::string to_string(SeedMode mode) {
    return mode == SeedMode::superconvergent ? "superconvergent" : "l2-projection";
}

SeedMode parse_seed_mode(const std::string& name) {
    if (name == "superconvergent") return SeedMode::superconvergent;
    if (name == "l2-projection") return SeedMode::l2_projection;
    throw InvalidConfig("unknown seed mode '" + name + "'");
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& part : split(text, ',')) {
        const long v = parse_int("n-list", part);
        if (v <= 0) {
            throw InvalidConfig("n-list entries must be positive");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

RunConfig default_config(ProblemId problem, int k, RunMode mode) {
    const ProblemSpec spec = make_problem(problem);
    RunConfig c;
    c.mode = mode;
    c.problem = problem;
    c.k = k;
    c.n_list = spec.default_n_list(k);
    c.theta = spec.weights.theta;
    c.lambda = spec.weights.lambda;
    c.level = spec.default_level(k);
    c.t_final = spec.t_final;
    c.cfl = default_cfl(k);
    if (mode == RunMode::longtime) {
        c.t_final = 100.0;
        c.n_list = {16};
        c.probe_interval = 1.0;
        c.weight_pairs = {{1.0, 1.0}, {0.9, 0.9}, {0.6, 0.6}};
    }
    return c;
}

void validate(const RunConfig& c) {
    if (c.k < 0 || c.k > 8) {
        throw InvalidConfig("k must lie in 0..8");
    }
    if (c.n_list.empty()) {
        throw InvalidConfig("the N list is empty");
    }
    for (std::size_t i = 0; i < c.n_list.size(); ++i) {
        if (c.n_list[i] < 2) {
            throw InvalidConfig("every N must be at least 2");
        }
        if (i > 0 && c.n_list[i] <= c.n_list[i - 1]) {
            throw InvalidConfig("the N list must be strictly increasing");
        }
    }
    if (c.theta == 0.5 || c.lambda == 0.5 || !std::isfinite(c.theta) || !std::isfinite(c.lambda)) {
        throw InvalidConfig("theta and lambda must be finite and differ from 1/2");
    }
    for (const auto& [a, b] : c.weight_pairs) {
        if (a == 0.5 || b == 0.5) {
            throw InvalidConfig("weight pairs must differ from 1/2");
        }
    }
    if (c.level < 0 || c.level > c.k) {
        throw InvalidConfig("level must lie in 0..k");
    }
    if (!(c.t_final >= 0.0)) {
        throw InvalidConfig("t-final must be nonnegative");
    }
    if (!(c.cfl > 0.0)) {
        throw InvalidConfig("cfl must be positive");
    }
    if (!(c.kappa1 > 0.0) || !(c.kappa2 > 0.0)) {
        throw InvalidConfig("penalties must be positive");
    }
    if (!(c.probe_interval > 0.0)) {
        throw InvalidConfig("probe-interval must be positive");
    }
    if (c.jobs == 0) {
        throw InvalidConfig("jobs must be at least 1");
    }
    if (c.bc && *c.bc != BoundaryKind::periodic && c.problem != ProblemId::linear_sine &&
        c.problem != ProblemId::linear_sine_mixed && c.problem != ProblemId::linear_sine_dirichlet) {
        throw InvalidConfig("only the linear-sine problem supports non-periodic boundaries");
    }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig("config line " + std::to_string(lineno) + " is not 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_config(const std::map<std::string, std::string>& values, RunConfig& c) {
    for (const auto& [key, value] : values) {
        if (key == "problem") {
            c.problem = parse_problem(value);
        } else if (key == "bc") {
            c.bc = parse_boundary(value);
        } else if (key == "k") {
            c.k = static_cast<int>(parse_int(key, value));
        } else if (key == "n-list") {
            c.n_list = parse_n_list(value);
        } else if (key == "theta") {
            c.theta = parse_double(key, value);
        } else if (key == "lambda") {
            c.lambda = parse_double(key, value);
        } else if (key == "level") {
            c.level = static_cast<int>(parse_int(key, value));
        } else if (key == "t-final") {
            c.t_final = parse_double(key, value);
        } else if (key == "cfl") {
            c.cfl = parse_double(key, value);
        } else if (key == "kappa1") {
            c.kappa1 = parse_double(key, value);
        } else if (key == "kappa2") {
            c.kappa2 = parse_double(key, value);
        } else if (key == "scale-penalties") {
            if (value == "true" || value == "1") {
                c.scale_penalties = true;
            } else if (value == "false" || value == "0") {
                c.scale_penalties = false;
            } else {
                throw InvalidConfig("scale-penalties must be true or false");
            }
        } else if (key == "seed-mode") {
            c.seed_mode = parse_seed_mode(value);
        } else if (key == "out") {
            c.out = value;
        } else if (key == "format") {
            if (value == "csv") {
                c.format = OutputFormat::csv;
            } else if (value == "markdown") {
                c.format = OutputFormat::markdown;
            } else {
                throw InvalidConfig("unknown format '" + value + "'");
            }
        } else if (key == "probe-interval") {
            c.probe_interval = parse_double(key, value);
        } else if (key == "weights") {
            c.weight_pairs.clear();
            for (const auto& pair : split(value, ';')) {
                const auto ab = split(pair, ',');
                if (ab.size() != 2) {
                    throw InvalidConfig("weights must look like 'theta,lambda;theta,lambda'");
                }
                c.weight_pairs.emplace_back(parse_double(key, ab[0]), parse_double(key, ab[1]));
            }
        } else if (key == "jobs") {
            const long j = parse_int(key, value);
            if (j < 1) {
                throw InvalidConfig("jobs must be at least 1");
            }
            c.jobs = static_cast<unsigned>(j);
        } else {
            throw InvalidConfig("unknown configuration key '" + key + "'");
        }
    }
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> d;
    const char* modes[] = {"convergence", "long-time", "single"};
    d.emplace_back("mode", modes[static_cast<int>(c.mode)]);
    d.emplace_back("problem", to_string(c.problem));
    d.emplace_back("bc", to_string(resolve_problem(c).bc.kind));
    d.emplace_back("k", std::to_string(c.k));
    std::string ns;
    for (std::size_t i = 0; i < c.n_list.size(); ++i) {
        ns += (i ? "," : "") + std::to_string(c.n_list[i]);
    }
    d.emplace_back("n-list", ns);
    d.emplace_back("theta", shortest(c.theta));
    d.emplace_back("lambda", shortest(c.lambda));
    d.emplace_back("level", std::to_string(c.level));
    d.emplace_back("t-final", shortest(c.t_final));
    d.emplace_back("cfl", shortest(c.cfl));
    d.emplace_back("kappa1", shortest(c.kappa1));
    d.emplace_back("kappa2", shortest(c.kappa2));
    d.emplace_back("scale-penalties", c.scale_penalties ? "true" : "false");
    d.emplace_back("seed-mode", to_string(c.seed_mode));
    if (c.mode == RunMode::longtime) {
        d.emplace_back("probe-interval", shortest(c.probe_interval));
        std::string w;
        for (std::size_t i = 0; i < c.weight_pairs.size(); ++i) {
            w += (i ? ";" : "") + shortest(c.weight_pairs[i].first) + "," + shortest(c.weight_pairs[i].second);
        }
        d.emplace_back("weights", w);
    }
    return d;
}

ProblemSpec resolve_problem(const RunConfig& c) {
    ProblemId id = c.problem;
    if (c.bc) {
        const bool sine = id == ProblemId::linear_sine || id == ProblemId::linear_sine_mixed ||
                          id == ProblemId::linear_sine_dirichlet;
        if (sine) {
            switch (*c.bc) {
                case BoundaryKind::periodic:
                    id = ProblemId::linear_sine;
                    break;
                case BoundaryKind::mixed:
                    id = ProblemId::linear_sine_mixed;
                    break;
                case BoundaryKind::dirichlet:
                    id = ProblemId::linear_sine_dirichlet;
                    break;
            }
        } else if (*c.bc != BoundaryKind::periodic) {
            throw InvalidConfig("only the linear-sine problem supports non-periodic boundaries");
        }
    }
    ProblemSpec spec = make_problem(id, c.kappa1, c.kappa2);
    spec.bc.scale_penalties = c.scale_penalties;
    return spec;
}

namespace {

ErrorReport run_case(const RunConfig& c, std::size_t n, const FluxWeights& weights, const Probe* probe) {
    const ProblemSpec spec = resolve_problem(c);
    auto mesh = std::make_shared<const Mesh1D>(build_mesh(n, spec.domain));
    const InitRecipe recipe{spec.exact, c.level, weights, spec.bc, spec.coeffs, c.seed_mode};
    const LDGState init = build_initial_state(recipe, mesh, c.k);
    LdgOperator op(mesh, c.k, weights, spec.bc, spec.coeffs);
    TimeStepConfig ts;
    ts.cfl = c.cfl;
    ts.t_final = c.t_final;
    const LDGState final_state = run(init, ts, op, probe);
    return error_report(final_state, spec.exact, weights, spec.bc);
}

template <class Task>
void run_parallel(std::size_t count, unsigned jobs, Task&& task) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                task(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace

ErrorReport run_single(const RunConfig& c, std::size_t n) {
    validate(c);
    return run_case(c, n, FluxWeights(c.theta, c.lambda), nullptr);
}

bool ConvergenceResult::all_ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& r) { return r.report.has_value(); });
}

double measure_value(const VariableErrors& e, const std::string& measure) {
    if (measure == "flux") return e.flux;
    if (measure == "cell_avg") return e.cell_average;
    if (measure == "radau") return e.radau;
    if (measure == "radau_deriv") return e.radau_derivative;
    if (measure == "proj_dist") return e.projection_distance;
    if (measure == "l2") return e.l2;
    if (measure == "linf") return e.linf;
    throw InvalidArgument("unknown measure '" + measure + "'");
}

ConvergenceResult run_convergence(const RunConfig& c) {
    validate(c);
    ConvergenceResult res;
    res.config = c;
    res.cases.resize(c.n_list.size());
    const FluxWeights weights(c.theta, c.lambda);
    run_parallel(c.n_list.size(), c.jobs, [&](std::size_t i) {
        CaseResult& cr = res.cases[i];
        cr.n = c.n_list[i];
        try {
            cr.report = run_case(c, cr.n, weights, nullptr);
        } catch (const std::exception& e) {
            cr.failure = e.what();
        }
    });

    res.table.header = describe(c);
    const std::string problem = to_string(resolve_problem(c).id);
    std::vector<double> ns;
    for (std::size_t n : c.n_list) {
        ns.push_back(static_cast<double>(n));
    }
    for (Var v : all_vars) {
        for (const char* m : measure_names) {
            std::vector<double> errs;
            for (const auto& cr : res.cases) {
                errs.push_back(cr.report ? measure_value((*cr.report)[v], m) : std::nan(""));
            }
            const auto orders = observed_order(errs, ns);
            for (std::size_t i = 0; i < res.cases.size(); ++i) {
                if (!res.cases[i].report) {
                    continue;
                }
                res.table.rows.push_back(
                    {problem, c.k, c.theta, c.lambda, c.level, c.n_list[i], c.t_final, name(v), m, errs[i], orders[i]});
            }
        }
    }
    return res;
}

std::vector<double> probe_schedule(double t_final, double interval) {
    std::vector<double> times{0.0};
    if (t_final <= 0.0) {
        return times;
    }
    double next_log = 1.0;
    const double log_step = std::pow(10.0, 0.1);
    for (long i = 1;; ++i) {
        const double t = static_cast<double>(i) * interval;
        if (t >= t_final) {
            break;
        }
        if (t <= 1.0) {
            times.push_back(t);
        } else if (t >= next_log) {
            times.push_back(t);
            while (next_log <= t) {
                next_log *= log_step;
            }
        }
    }
    times.push_back(t_final);
    return times;
}

std::vector<LongtimeSeries> run_longtime(const RunConfig& c, std::size_t n) {
    validate(c);
    std::vector<std::pair<double, double>> pairs = c.weight_pairs;
    if (pairs.empty()) {
        pairs.emplace_back(c.theta, c.lambda);
    }
    std::vector<LongtimeSeries> series(pairs.size());
    const std::vector<double> times = probe_schedule(c.t_final, c.probe_interval);
    run_parallel(pairs.size(), c.jobs, [&](std::size_t i) {
        LongtimeSeries& s = series[i];
        s.weights = FluxWeights(pairs[i].first, pairs[i].second);
        const ProblemSpec spec = resolve_problem(c);
        Probe probe;
        probe.times = times;
        probe.callback = [&](const LDGState& st) {
            s.samples.push_back({st.t, error_report(st, spec.exact, s.weights, spec.bc)});
        };
        try {
            run_case(c, n, s.weights, &probe);
        } catch (const std::exception& e) {
            s.failure = e.what();
        }
    });
    return series;
}

ResultTable longtime_table(const RunConfig& c, std::size_t n, const std::vector<LongtimeSeries>& series) {
    ResultTable table;
    table.header = describe(c);
    const std::string problem = to_string(resolve_problem(c).id);
    for (const auto& s : series) {
        for (const auto& sample : s.samples) {
            for (Var v : all_vars) {
                for (const char* m : {"flux", "cell_avg", "radau", "radau_deriv", "proj_dist", "l2"}) {
                    table.rows.push_back({problem, c.k, s.weights.theta, s.weights.lambda, c.level, n, sample.t,
                                          name(v), m, measure_value(sample.report[v], m), std::nullopt});
                }
            }
        }
    }
    return table;
}

}  // namespace ldg4
