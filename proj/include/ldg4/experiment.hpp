#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldg4/diagnostics.hpp"
#include "ldg4/initial_condition.hpp"
#include "ldg4/problems.hpp"
#include "ldg4/projection.hpp"

namespace ldg4 {

enum class RunMode { convergence, longtime, single };
enum class OutputFormat { csv, markdown };

struct RunConfig {
    RunMode mode = RunMode::convergence;
    ProblemId problem = ProblemId::linear_sine;
    std::optional<BoundaryKind> bc;  // overrides the problem's own boundary kind
    int k = 1;
    std::vector<std::size_t> n_list;
    double theta = 0.8;
    double lambda = 1.2;
    int level = 1;
    double t_final = 0.1;
    double cfl = 1e-3;
    double kappa1 = 10.0;
    double kappa2 = 15.0;
    /// Penalties become kappa1 / h and kappa2 / h^3.
    bool scale_penalties = false;
    SeedMode seed_mode = SeedMode::superconvergent;
    std::string out;
    OutputFormat format = OutputFormat::csv;
    double probe_interval = 1.0;
    /// (theta, lambda) settings compared in long-time runs.
    std::vector<std::pair<double, double>> weight_pairs;
    unsigned jobs = 1;
};

/// Defaults for a problem and degree: the reference mesh list, weights,
/// final time, correction level and the CFL constant paired with k.
RunConfig default_config(ProblemId problem, int k, RunMode mode = RunMode::convergence);

/// Throws InvalidConfig when a field is out of range.
void validate(const RunConfig& config);

/// Parses flat "key = value" text ('#' starts a comment) into a map.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Applies parsed keys (CLI long-option names) on top of a configuration.
void apply_config(const std::map<std::string, std::string>& values, RunConfig& config);

/// Resolved configuration as ordered (key, value) pairs.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config);

std::string to_string(BoundaryKind kind);
BoundaryKind parse_boundary(const std::string& name);
std::string to_string(SeedMode mode);
SeedMode parse_seed_mode(const std::string& name);
std::vector<std::size_t> parse_n_list(const std::string& text);

/// Problem specification with the configuration's boundary and penalty overrides applied.
ProblemSpec resolve_problem(const RunConfig& config);

/// Builds the initial data, integrates to t_final and measures the errors.
ErrorReport run_single(const RunConfig& config, std::size_t n);

struct CaseResult {
    std::size_t n = 0;
    std::optional<ErrorReport> report;
    std::string failure;
};

/// One output line.
struct ResultRow {
    std::string problem;
    int k = 0;
    double theta = 0.0;
    double lambda = 0.0;
    int level = 0;
    std::size_t n = 0;
    double t = 0.0;
    std::string variable;
    std::string measure;
    double value = 0.0;
    std::optional<double> order;
};

struct ResultTable {
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<ResultRow> rows;
};

struct ConvergenceResult {
    RunConfig config;
    std::vector<CaseResult> cases;
    ResultTable table;
    bool all_ok() const;
};

/// Runs every N of the list (concurrently up to config.jobs); failures are
/// recorded per case.
ConvergenceResult run_convergence(const RunConfig& config);

struct LongtimeSample {
    double t = 0.0;
    ErrorReport report;
};

struct LongtimeSeries {
    FluxWeights weights;
    std::vector<LongtimeSample> samples;
    std::string failure;
};

/// Probe times: multiples of the interval up to t = 1, then thinned to
/// about ten per decade, always including 0 and t_final.
std::vector<double> probe_schedule(double t_final, double interval);

std::vector<LongtimeSeries> run_longtime(const RunConfig& config, std::size_t n);

ResultTable longtime_table(const RunConfig& config, std::size_t n, const std::vector<LongtimeSeries>& series);

/// Names of the per-variable measures in output tables.
inline constexpr const char* measure_names[] = {"flux", "cell_avg", "radau", "radau_deriv", "proj_dist"};
double measure_value(const VariableErrors& e, const std::string& measure);

}  // namespace ldg4
