#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "ldg4/circulant.hpp"
#include "ldg4/diagnostics.hpp"
#include "ldg4/errors.hpp"
#include "ldg4/experiment.hpp"
#include "ldg4/radau.hpp"

namespace py = pybind11;

namespace {

using Overrides = std::map<std::string, std::string>;

ldg4::RunConfig make_config(const std::string& problem, int k, const std::string& mode, const Overrides& overrides) {
    ldg4::RunMode m = ldg4::RunMode::convergence;
    if (mode == "longtime") {
        m = ldg4::RunMode::longtime;
    } else if (mode == "single") {
        m = ldg4::RunMode::single;
    } else if (mode != "convergence") {
        throw ldg4::InvalidConfig("unknown mode '" + mode + "'");
    }
    ldg4::RunConfig c = ldg4::default_config(ldg4::parse_problem(problem), k, m);
    ldg4::apply_config(overrides, c);
    ldg4::validate(c);
    return c;
}

py::dict report_dict(const ldg4::ErrorReport& r) {
    py::dict out;
    out["n"] = r.n;
    out["k"] = r.k;
    out["t"] = r.t;
    for (ldg4::Var v : ldg4::all_vars) {
        const ldg4::VariableErrors& e = r[v];
        py::dict d;
        d["flux"] = e.flux;
        d["cell_avg"] = e.cell_average;
        d["radau"] = e.radau;
        d["radau_deriv"] = e.radau_derivative;
        d["proj_dist"] = e.projection_distance;
        d["l2"] = e.l2;
        d["linf"] = e.linf;
        d["jump"] = e.jump;
        out[ldg4::name(v)] = d;
    }
    out["derivative_ratios"] = std::vector<double>(r.derivative_ratios.begin(), r.derivative_ratios.end());
    return out;
}

py::dict row_dict(const ldg4::ResultRow& row) {
    py::dict d;
    d["problem"] = row.problem;
    d["k"] = row.k;
    d["theta"] = row.theta;
    d["lambda"] = row.lambda;
    d["level"] = row.level;
    d["N"] = row.n;
    d["T"] = row.t;
    d["variable"] = row.variable;
    d["measure"] = row.measure;
    d["value"] = row.value;
    d["order"] = row.order ? py::object(py::float_(*row.order)) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_ldg4, m) {
    m.doc() = "LDG solver for fourth-order equations with generalized fluxes";

    auto base = py::register_exception<ldg4::Error>(m, "Error");
    py::register_exception<ldg4::InvalidConfig>(m, "InvalidConfig", base.ptr());
    py::register_exception<ldg4::InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<ldg4::InvalidWeight>(m, "InvalidWeight", base.ptr());
    py::register_exception<ldg4::SingularSystem>(m, "SingularSystem", base.ptr());
    py::register_exception<ldg4::LevelOutOfRange>(m, "LevelOutOfRange", base.ptr());
    py::register_exception<ldg4::BlowUp>(m, "BlowUp", base.ptr());
    py::register_exception<ldg4::IoError>(m, "IoError", base.ptr());

    m.def(
        "describe_config",
        [](const std::string& problem, int k, const std::string& mode, const Overrides& overrides) {
            return ldg4::describe(make_config(problem, k, mode, overrides));
        },
        py::arg("problem"), py::arg("k"), py::arg("mode") = "convergence", py::arg("overrides") = Overrides{},
        "Resolved configuration as (key, value) pairs.");

    m.def(
        "run_single",
        [](const std::string& problem, int k, std::size_t n, const Overrides& overrides) {
            const ldg4::RunConfig c = make_config(problem, k, "single", overrides);
            ldg4::ErrorReport r;
            {
                py::gil_scoped_release release;
                r = ldg4::run_single(c, n);
            }
            return report_dict(r);
        },
        py::arg("problem"), py::arg("k"), py::arg("n"), py::arg("overrides") = Overrides{},
        "Integrates one mesh to the final time and returns the error report.");

    m.def(
        "run_convergence",
        [](const std::string& problem, int k, const Overrides& overrides) {
            const ldg4::RunConfig c = make_config(problem, k, "convergence", overrides);
            ldg4::ConvergenceResult res;
            {
                py::gil_scoped_release release;
                res = ldg4::run_convergence(c);
            }
            py::list rows;
            for (const auto& row : res.table.rows) rows.append(row_dict(row));
            py::dict failures;
            for (const auto& cs : res.cases) {
                if (!cs.failure.empty()) failures[py::int_(cs.n)] = cs.failure;
            }
            py::dict out;
            out["rows"] = rows;
            out["failures"] = failures;
            return out;
        },
        py::arg("problem"), py::arg("k"), py::arg("overrides") = Overrides{},
        "Convergence study over the configured mesh list; one row per N, variable and measure.");

    m.def(
        "radau_points",
        [](double sigma, int k) {
            const ldg4::RadauSet s = ldg4::radau_points(sigma, k);
            return std::make_pair(s.value_points, s.derivative_points);
        },
        py::arg("sigma"), py::arg("k"), "Generalized Radau value and derivative points on [-1, 1].");

    m.def(
        "observed_order",
        [](const std::vector<double>& errors, const std::vector<double>& ns) { return ldg4::observed_order(errors, ns); },
        py::arg("errors"), py::arg("ns"), "log(e_{i-1}/e_i) / log(N_i/N_{i-1}); None where undefined.");

    m.def(
        "circulant_solve",
        [](double sigma, int k, const std::vector<double>& rhs) {
            return ldg4::circulant_solve({sigma, k, rhs.size()}, rhs);
        },
        py::arg("sigma"), py::arg("k"), py::arg("rhs"),
        "Solves sigma x_j + (-1)^k (1 - sigma) x_{j+1} = b_j with periodic indices.");
}
