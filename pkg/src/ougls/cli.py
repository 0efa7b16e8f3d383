"""Command-line interface.

Subcommands
-----------
table      value grids over (n, lambda): the correlation itself, any of
           the five moments, or their derivatives in n
limit      large-n limit of a moment at one lambda
knee       diminishing-return lambda of the limit curve
extremum   location and value of a limit curve's extremum
nstar      diminishing-return sample size at fixed lambda
sweep      two-column curve data (lambda vs limit, or n vs exact value)
simulate   seed-deterministic Monte Carlo report as JSON
fit        GLS fit of a t,y series file at a known lambda, as JSON

Exit codes: 0 success, 2 argument or input error, 3 numerical failure.
Data goes to stdout (or --out); diagnostics go to stderr.

Numbers render with six fixed decimals when |x| >= 1e-4 and otherwise in
scientific notation with four significant digits.  The fixed-decimal
count follows --precision, a `precision` config entry, or the
OUGLS_PRECISION environment variable, in that order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .analysis import (
    Quantity,
    asymptote_extremum,
    exact_moment,
    lambda_knee,
    moment_derivative_n,
    moment_limit,
    n_diminishing_return,
)
from .covariance import TimeGrid, rho, sigma_even, sigma_general
from .errors import DomainError, NumericError
from .gls import GlsProblem, gls_fit, weighted_rss
from .models import ModelKind, closed_form_fit, design_matrix
from .simulate import SimSpec, run_monte_carlo

DEFAULT_N_LIST = [3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50]
DEFAULT_LAMBDA_LIST = [0.05, 0.1, 1.0, 5.0, 10.0, 50.0]
DEFAULT_PRECISION = 6
SCI_THRESHOLD = 1e-4


def format_value(x: float, precision: int = DEFAULT_PRECISION) -> str:
    """Fixed decimals for ordinary magnitudes, scientific for tiny ones."""
    if abs(x) >= SCI_THRESHOLD:
        return f"{x:.{precision}f}"
    return f"{x:.3E}"


def _fmt_axis(x: float) -> str:
    return f"{x:g}"


# --- configuration -----------------------------------------------------------


def _read_config(path: str | None) -> dict[str, str]:
    if path is None:
        return {}
    cfg = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise DomainError(f"config line is not key=value: {line!r}")
                key, value = line.split("=", 1)
                cfg[key.strip()] = value.strip()
    except OSError as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from exc
    return cfg


def _parse_float_list(text: str, what: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise DomainError(f"bad {what} list {text!r}: {exc}") from exc
    if not values:
        raise DomainError(f"{what} list is empty")
    return values


def _resolve(args, cfg: dict[str, str]):
    """Apply precedence: flags, then config file, then environment/defaults."""
    n_list = DEFAULT_N_LIST
    lam_list = DEFAULT_LAMBDA_LIST
    fmt = "csv"
    precision = DEFAULT_PRECISION
    env_prec = os.environ.get("OUGLS_PRECISION")
    if env_prec is not None:
        try:
            precision = int(env_prec)
        except ValueError as exc:
            raise DomainError(f"OUGLS_PRECISION must be an integer: {env_prec!r}") from exc
    if "n_list" in cfg:
        n_list = _parse_float_list(cfg["n_list"], "n")
    if "lambda_list" in cfg:
        lam_list = _parse_float_list(cfg["lambda_list"], "lambda")
    if "format" in cfg:
        fmt = cfg["format"]
    if "precision" in cfg:
        try:
            precision = int(cfg["precision"])
        except ValueError as exc:
            raise DomainError("config precision must be an integer") from exc
    if getattr(args, "n_list", None):
        n_list = _parse_float_list(args.n_list, "n")
    if getattr(args, "lambda_list", None):
        lam_list = _parse_float_list(args.lambda_list, "lambda")
    if getattr(args, "format", None):
        fmt = args.format
    if getattr(args, "precision", None) is not None:
        precision = args.precision
    if fmt not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {fmt!r}")
    if precision < 1:
        raise DomainError("precision must be a positive integer")
    return n_list, lam_list, fmt, precision


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


# --- table -------------------------------------------------------------------


def _table_cell(args, n: float, lam: float) -> float:
    if args.rho:
        return rho(n, lam)
    q = Quantity(args.quantity)
    if args.derivative:
        return moment_derivative_n(q, n, lam)
    return exact_moment(q, n, lam)


def cmd_table(args) -> int:
    cfg = _read_config(args.config)
    n_list, lam_list, fmt, precision = _resolve(args, cfg)
    if args.rho == (args.quantity is not None):
        raise DomainError("table needs exactly one of --rho or --quantity")
    if args.rho and args.derivative:
        raise DomainError("--derivative applies to a --quantity table, not --rho")
    values = [[_table_cell(args, n, lam) for lam in lam_list] for n in n_list]
    if fmt == "json":
        doc = {
            "quantity": "rho" if args.rho else args.quantity,
            "derivative": bool(args.derivative),
            "n": n_list,
            "lambda": lam_list,
            "values": values,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
        return 0
    header = "n," + ",".join(f"λ={_fmt_axis(lam)}" for lam in lam_list)
    lines = [header]
    for n, row in zip(n_list, values):
        lines.append(_fmt_axis(n) + "," + ",".join(format_value(v, precision) for v in row))
    _emit("\n".join(lines), args.out)
    return 0


# --- scalar analysis commands ------------------------------------------------


def cmd_limit(args) -> int:
    value = moment_limit(Quantity(args.quantity), args.lam)
    _emit(format_value(value), args.out)
    return 0


def cmd_knee(args) -> int:
    res = lambda_knee(Quantity(args.quantity), step=args.step, tol=args.tol)
    _emit(_fmt_axis(res.lambda_star), args.out)
    return 0


def cmd_extremum(args) -> int:
    try:
        lam, value = asymptote_extremum(Quantity(args.quantity))
    except DomainError as exc:
        # contract: a monotone curve is an argument error with a clear word
        raise DomainError(f"monotone: {exc}") from exc
    _emit(f"lambda={format_value(lam)} value={format_value(value)}", args.out)
    return 0


def cmd_nstar(args) -> int:
    n = n_diminishing_return(Quantity(args.quantity), args.lam, eps=args.eps,
                             criterion=args.criterion)
    _emit(str(n), args.out)
    return 0


def _parse_range(text: str, what: str) -> tuple[float, float, float | None]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise DomainError(f"{what} range must be START:STOP or START:STOP:STEP, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        step = float(parts[2]) if len(parts) == 3 else None
    except ValueError as exc:
        raise DomainError(f"bad {what} range {text!r}: {exc}") from exc
    if step is not None and step <= 0:
        raise DomainError(f"{what} range step must be positive")
    if stop < start:
        raise DomainError(f"{what} range is empty")
    return start, stop, step


def _range_grid(start: float, stop: float, step: float) -> list[float]:
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(count)]


def cmd_sweep(args) -> int:
    q = Quantity(args.quantity)
    if (args.lambda_range is None) == (args.n_range is None):
        raise DomainError("sweep needs exactly one of --lambda-range or --n-range")
    if args.lambda_range is not None:
        start, stop, step = _parse_range(args.lambda_range, "lambda")
        grid = _range_grid(start, stop, step if step is not None else 0.1)
        lines = ["lambda,value"]
        for lam in grid:
            lines.append(f"{_fmt_axis(lam)},{format_value(moment_limit(q, lam))}")
    else:
        if args.lam is None:
            raise DomainError("sweep over n needs --lambda")
        start, stop, step = _parse_range(args.n_range, "n")
        grid = _range_grid(start, stop, step if step is not None else 1.0)
        lines = ["n,value"]
        for n in grid:
            lines.append(f"{_fmt_axis(n)},{format_value(exact_moment(q, n, args.lam))}")
    _emit("\n".join(lines), args.out)
    return 0


# --- simulate ----------------------------------------------------------------


def cmd_simulate(args) -> int:
    model = ModelKind(args.model)
    if model is ModelKind.INTERCEPT_ONLY:
        beta = (args.beta0,)
    elif model is ModelKind.SLOPE_ONLY:
        beta = (args.beta1,)
    else:
        beta = (args.beta0, args.beta1)
    spec = SimSpec(model=model, beta=beta, n=args.n, lam=args.lam,
                   reps=args.reps, seed=args.seed)
    report = run_monte_carlo(spec, backend=args.backend)
    _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), args.out)
    return 0


# --- fit ---------------------------------------------------------------------


def _read_series(path: str) -> tuple[np.ndarray, np.ndarray]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise DomainError(f"cannot read series file {path}: {exc}") from exc
    if not lines or lines[0].replace(" ", "") != "t,y":
        raise DomainError("series file must start with the header 't,y'")
    t_vals, y_vals = [], []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise DomainError(f"series row is not 't,y': {ln!r}")
        try:
            t_vals.append(float(parts[0]))
            y_vals.append(float(parts[1]))
        except ValueError as exc:
            raise DomainError(f"bad number in series row {ln!r}") from exc
    if len(t_vals) < 2:
        raise DomainError("series file needs at least two rows")
    return np.asarray(t_vals), np.asarray(y_vals)


def cmd_fit(args) -> int:
    model = ModelKind(args.model)
    t, y = _read_series(args.input)
    grid = TimeGrid(t)  # validates ordering and the [0, 1] span
    n = grid.n
    if args.general_grid:
        x = _general_design(model, grid)
        cov = sigma_general(grid, args.lam)
        problem = GlsProblem(design=x, covariance=cov, response=y)
        fit = gls_fit(problem)
        grid_kind = "general"
    else:
        if not grid.is_even():
            raise DomainError(
                "time points are not an even grid; pass --general-grid to fit anyway"
            )
        fit = closed_form_fit(model, y, n, args.lam)
        problem = GlsProblem(design=design_matrix(model, n),
                             covariance=sigma_even(n, args.lam), response=y)
        grid_kind = "even"
    doc = {
        "model": model.value,
        "lambda": args.lam,
        "n": n,
        "grid": grid_kind,
        "estimates": fit.estimates.tolist(),
        "covariance": fit.covariance.tolist(),
        "weighted_rss": weighted_rss(problem, fit.estimates),
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    return 0


def _general_design(model: ModelKind, grid: TimeGrid) -> np.ndarray:
    ones = np.ones(grid.n)
    if model is ModelKind.INTERCEPT_ONLY:
        return ones[:, None]
    if model is ModelKind.SLOPE_ONLY:
        return grid.points[:, None]
    return np.column_stack([ones, grid.points])


# --- parser ------------------------------------------------------------------


def _add_quantity(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--quantity", required=required,
                   choices=[q.value for q in Quantity],
                   help="which estimator moment")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ougls",
        description="Exact GLS estimator variances under unit-interval "
                    "Ornstein-Uhlenbeck errors: tables, limits, knees, "
                    "simulation, and fitting.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit an (n, lambda) grid of values")
    sel = p.add_mutually_exclusive_group(required=False)
    sel.add_argument("--rho", action="store_true", help="tabulate the lag-one correlation")
    _add_quantity(p, required=False)
    p.add_argument("--derivative", action="store_true",
                   help="tabulate d/dn of the moment instead of the moment")
    p.add_argument("--n-list", default=None, help="comma-separated sample sizes")
    p.add_argument("--lambda-list", default=None, help="comma-separated decay rates")
    p.add_argument("--format", default=None, choices=["csv", "json"])
    p.add_argument("--precision", type=int, default=None,
                   help="fixed decimals for csv values (default 6)")
    p.add_argument("--config", default=None, help="key=value config file")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("limit", help="large-n limit of a moment")
    _add_quantity(p)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("knee", help="diminishing-return lambda of the limit curve")
    _add_quantity(p)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--tol", type=float, default=1e-4)
    _add_common(p)
    p.set_defaults(func=cmd_knee)

    p = sub.add_parser("extremum", help="extremum of the limit curve")
    _add_quantity(p)
    _add_common(p)
    p.set_defaults(func=cmd_extremum)

    p = sub.add_parser("nstar", help="diminishing-return sample size")
    _add_quantity(p)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--criterion", choices=["derivative", "difference"],
                   default="derivative")
    _add_common(p)
    p.set_defaults(func=cmd_nstar)

    p = sub.add_parser("sweep", help="two-column curve data")
    _add_quantity(p)
    p.add_argument("--lambda-range", default=None, metavar="A:B[:STEP]",
                   help="sweep the limit curve over lambda")
    p.add_argument("--n-range", default=None, metavar="A:B[:STEP]",
                   help="sweep the exact moment over n at fixed --lambda")
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="seed-deterministic Monte Carlo report")
    p.add_argument("--model", required=True, choices=[m.value for m in ModelKind])
    p.add_argument("--beta0", type=float, default=0.0)
    p.add_argument("--beta1", type=float, default=0.0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--reps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--backend", choices=["auto", "compiled", "pure"], default="auto")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fit", help="GLS fit of a t,y series at known lambda")
    p.add_argument("--model", required=True, choices=[m.value for m in ModelKind])
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--input", required=True, help="CSV file with header t,y")
    p.add_argument("--general-grid", action="store_true",
                   help="allow uneven time points (dense solve path)")
    _add_common(p)
    p.set_defaults(func=cmd_fit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"ougls: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"ougls: numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
