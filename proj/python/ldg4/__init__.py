"""LDG solver for fourth-order equations with generalized fluxes."""

from ._ldg4 import (
    BlowUp,
    Error,
    InvalidArgument,
    InvalidConfig,
    InvalidWeight,
    IoError,
    LevelOutOfRange,
    SingularSystem,
    circulant_solve,
    describe_config,
    observed_order,
    radau_points,
    run_convergence,
    run_single,
)


def _stringify(overrides):
    out = {}
    for key, value in overrides.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        out[key.replace("_", "-")] = str(value)
    return out


def single(problem, k, n, **overrides):
    """Error report of one run; keyword overrides use the CLI option names."""
    return run_single(problem, k, n, _stringify(overrides))


def convergence(problem, k, **overrides):
    """Rows of a convergence study; raises Error if any mesh failed."""
    res = run_convergence(problem, k, _stringify(overrides))
    if res["failures"]:
        raise Error("; ".join(f"N={n}: {msg}" for n, msg in res["failures"].items()))
    return res["rows"]


def config(problem, k, mode="convergence", **overrides):
    return dict(describe_config(problem, k, mode, _stringify(overrides)))


__all__ = [
    "BlowUp",
    "Error",
    "InvalidArgument",
    "InvalidConfig",
    "InvalidWeight",
    "IoError",
    "LevelOutOfRange",
    "SingularSystem",
    "circulant_solve",
    "config",
    "convergence",
    "observed_order",
    "radau_points",
    "single",
]
