#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "ldg4/errors.hpp"
#include "ldg4/experiment.hpp"
#include "ldg4/report.hpp"
#include "ldg4/time_integrator.hpp"

namespace {

struct Flags {
    std::string config_file;
    std::map<std::string, std::string> set;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_file, "flat key = value configuration file");
    auto opt = [&](const char* name, const char* help) {
        const std::string key = std::string(name).substr(2);
        cmd->add_option_function<std::string>(
            name, [&flags, key](const std::string& v) { flags.set[key] = v; }, help);
    };
    opt("--problem", "linear-sine | linear-sine-mixed | linear-sine-dirichlet | discontinuous-pulse | kuramoto-sivashinsky");
    opt("--bc", "periodic | mixed | dirichlet");
    opt("--k", "polynomial degree");
    opt("--n-list", "comma-separated mesh sizes, e.g. 16,32,64");
    opt("--theta", "flux weight theta");
    opt("--lambda", "flux weight lambda");
    opt("--level", "correction level of the initial data (default k)");
    opt("--t-final", "final time");
    opt("--cfl", "dt = cfl * h^4");
    opt("--kappa1", "Dirichlet penalty on the q flux");
    opt("--kappa2", "Dirichlet penalty on the r flux");
    opt("--scale-penalties", "true: penalties are kappa1/h and kappa2/h^3");
    opt("--out", "output path (default stdout)");
    opt("--format", "csv | markdown");
    opt("--seed-mode", "superconvergent | l2-projection");
    opt("--jobs", "number of concurrent cases");
}

ldg4::RunConfig resolve(const Flags& flags, ldg4::RunMode mode) {
    std::map<std::string, std::string> file;
    if (!flags.config_file.empty()) {
        std::ifstream in(flags.config_file);
        if (!in) {
            throw ldg4::IoError("cannot read config file '" + flags.config_file + "'");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        file = ldg4::parse_config_text(ss.str());
    }
    auto pick = [&](const std::string& key, const std::string& fallback) {
        if (auto it = flags.set.find(key); it != flags.set.end()) return it->second;
        if (auto it = file.find(key); it != file.end()) return it->second;
        return fallback;
    };
    const auto problem = ldg4::parse_problem(pick("problem", "linear-sine"));
    const int k = std::stoi(pick("k", mode == ldg4::RunMode::longtime ? "2" : "1"));
    ldg4::RunConfig config = ldg4::default_config(problem, k, mode);
    ldg4::apply_config(file, config);
    ldg4::apply_config(flags.set, config);
    if (!flags.set.count("level") && !file.count("level")) {
        config.level = ldg4::make_problem(config.problem).default_level(config.k);
    }
    if (!flags.set.count("cfl") && !file.count("cfl")) {
        config.cfl = ldg4::default_cfl(config.k);
    }
    ldg4::validate(config);
    return config;
}

int run_convergence(const Flags& flags) {
    const auto config = resolve(flags, ldg4::RunMode::convergence);
    const auto result = ldg4::run_convergence(config);
    ldg4::emit(result.table, config.format, config.out);
    int failures = 0;
    for (const auto& c : result.cases) {
        if (!c.report) {
            std::cerr << "N = " << c.n << ": " << c.failure << '\n';
            ++failures;
        }
    }
    if (failures > 0) {
        std::cerr << failures << " of " << result.cases.size() << " cases failed\n";
        return 1;
    }
    return 0;
}

int run_single(const Flags& flags) {
    auto config = resolve(flags, ldg4::RunMode::single);
    int failures = 0;
    ldg4::ResultTable table;
    table.header = ldg4::describe(config);
    const std::string problem = ldg4::to_string(ldg4::resolve_problem(config).id);
    for (std::size_t n : config.n_list) {
        try {
            const auto rep = ldg4::run_single(config, n);
            for (ldg4::Var v : ldg4::all_vars) {
                for (const char* m : ldg4::measure_names) {
                    table.rows.push_back({problem, config.k, config.theta, config.lambda, config.level, n,
                                          config.t_final, ldg4::name(v), m, ldg4::measure_value(rep[v], m),
                                          std::nullopt});
                }
            }
        } catch (const ldg4::Error& e) {
            std::cerr << "N = " << n << ": " << e.what() << '\n';
            ++failures;
        }
    }
    ldg4::emit(table, config.format, config.out);
    return failures > 0 ? 1 : 0;
}

int run_longtime(const Flags& flags, double interval, const std::string& weights) {
    Flags f = flags;
    if (!weights.empty()) {
        f.set["weights"] = weights;
    }
    auto config = resolve(f, ldg4::RunMode::longtime);
    if (interval > 0.0) {
        config.probe_interval = interval;
    }
    const std::size_t n = config.n_list.front();
    const auto series = ldg4::run_longtime(config, n);
    ldg4::emit(ldg4::longtime_table(config, n, series), config.format, config.out);
    int failures = 0;
    for (const auto& s : series) {
        if (!s.failure.empty()) {
            std::cerr << "theta = " << s.weights.theta << ", lambda = " << s.weights.lambda << ": " << s.failure
                      << '\n';
            ++failures;
        }
    }
    return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDG solver for fourth-order problems with generalized fluxes: convergence and long-time studies"};
    app.require_subcommand(1);

    Flags conv_flags;
    Flags single_flags;
    Flags long_flags;
    double interval = 0.0;
    std::string weights;

    auto* conv = app.add_subcommand("run-convergence", "error table over a list of mesh sizes");
    add_common(conv, conv_flags);
    auto* single = app.add_subcommand("run-single", "errors of independent runs without orders");
    add_common(single, single_flags);
    auto* longtime = app.add_subcommand("run-longtime", "error histories for several weight settings");
    add_common(longtime, long_flags);
    longtime->add_option("--probe-interval", interval, "spacing of probe times (thinned after t = 1)");
    longtime->add_option("--weights", weights, "settings as 'theta,lambda;theta,lambda;...'");

    CLI11_PARSE(app, argc, argv);
    try {
        if (conv->parsed()) {
            return run_convergence(conv_flags);
        }
        if (single->parsed()) {
            return run_single(single_flags);
        }
        return run_longtime(long_flags, interval, weights);
    } catch (const ldg4::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
