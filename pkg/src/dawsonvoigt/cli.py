"""Command-line frontend: evaluation, error maps, oracle cache, benchmarks.

Subcommands
-----------
eval          evaluate one function at one point, 17 significant digits
sweep-dawson  signed Dawson difference curve as CSV/JSON
error-map     log10 relative-error surface of voigt_K as CSV/JSON
oracle        regenerate the reference cache (slow; arbitrary precision)
bench         throughput of one kernel as JSON

Exit status: 0 success, 1 evaluation error, 2 usage error.  CSV payloads
start with ``# key=value`` metadata lines, then a column header row, then
data rows; numbers are printed with 17 significant digits so parsing and
reprinting reproduces the bytes exactly.  DV_ORACLE_CACHE overrides the
cache path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis, cache as cache_mod, reference
from .coefficients import (
    ApproximationParams,
    CoefficientSet,
    build_coefficients,
    default_params,
    high_accuracy_params,
)
from .core import EvalPoint, dawson_complex, dawson_real, faddeeva_w, voigt_K, voigt_L
from .errors import DawsonVoigtError

_FUNCS = ("K", "L", "w", "F", "Fc")
_GRID_NAMES = ("dawson-line", "voigt-strip", "all")


def format_float17(v: float) -> str:
    """17-significant-digit scientific notation with a minimal exponent.

    Examples: 0.0 -> 0.0000000000000000e0, exp(-1) -> 3.6787944117144233e-1.
    Parsing the output and reformatting reproduces the same bytes.
    """
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    mant, exp = f"{v:.16e}".split("e")
    return f"{mant}e{int(exp)}"


@dataclass(frozen=True)
class CliConfig:
    """Parsed common options shared by the subcommands."""

    subcommand: str
    params: ApproximationParams
    output_path: Path | None
    fmt: str


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--params-preset",
        choices=("default", "high-accuracy"),
        default="default",
        help="coefficient preset (ignored if explicit params are given)",
    )
    parser.add_argument("--h", type=float, default=None, help="explicit sampling step")
    parser.add_argument("--m-max", type=int, default=None, help="explicit term count")
    parser.add_argument("--varsigma", type=float, default=None, help="explicit shift constant")
    parser.add_argument("--n-terms", type=int, default=None, help="explicit sampling half-width")
    parser.add_argument("--output", type=Path, default=None, help="write to file instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")


def _config_from(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> CliConfig:
    explicit = (ns.h, ns.m_max, ns.varsigma, ns.n_terms)
    if any(v is not None for v in explicit):
        if any(v is None for v in explicit):
            parser.error("explicit params require all of --h --m-max --varsigma --n-terms")
        params = ApproximationParams(h=ns.h, m_max=ns.m_max, varsigma=ns.varsigma, n_terms=ns.n_terms)
    elif ns.params_preset == "high-accuracy":
        params = high_accuracy_params()
    else:
        params = default_params()
    return CliConfig(
        subcommand=ns.subcommand,
        params=params,
        output_path=ns.output,
        fmt=ns.fmt,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dawson-voigt",
        description="Dawson integral, Voigt K/L and Faddeeva w via rational approximations",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("--func", choices=_FUNCS, required=True)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--y", type=float, default=0.0)
    _add_common(p_eval)

    p_sweep = sub.add_parser("sweep-dawson", help="Dawson difference curve")
    p_sweep.add_argument("--xmax", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    _add_common(p_sweep)

    p_map = sub.add_parser("error-map", help="voigt_K relative-error surface")
    p_map.add_argument("--xmax", type=float, required=True)
    p_map.add_argument("--ymax", type=float, required=True)
    p_map.add_argument("--nx", type=int, required=True)
    p_map.add_argument("--ny", type=int, required=True)
    _add_common(p_map)

    p_oracle = sub.add_parser("oracle", help="regenerate the reference cache")
    p_oracle.add_argument(
        "--grid",
        required=True,
        help="dawson-line[:N] | voigt-strip[:NXxNY] | all",
    )
    p_oracle.add_argument("--digits", type=int, default=300, help="precision for the Voigt strip")
    p_oracle.add_argument(
        "--working-digits", type=int, default=50, help="precision for the Dawson line"
    )
    p_oracle.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_common(p_oracle)

    p_bench = sub.add_parser("bench", help="kernel throughput")
    p_bench.add_argument("--op", required=True, choices=analysis.BENCH_OPS)
    p_bench.add_argument("--points", type=int, required=True)
    p_bench.add_argument("--reps", type=int, default=1)
    _add_common(p_bench)

    return parser


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output_path is not None:
        cfg.output_path.write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _params_meta(params: ApproximationParams) -> list[str]:
    return [
        f"# h={format_float17(params.h)}",
        f"# m_max={params.m_max}",
        f"# varsigma={format_float17(params.varsigma)}",
        f"# n_terms={params.n_terms}",
    ]


def _load_cache_if_present():
    path = cache_mod.default_cache_path()
    if path.exists():
        return cache_mod.OracleCache.load(path)
    return None


def _cmd_eval(ns: argparse.Namespace, cfg: CliConfig) -> int:
    coeffs = build_coefficients(cfg.params)
    func = ns.func
    if func == "F":
        if ns.y != 0.0:
            raise _Usage("--func F takes real argument only (y must be 0); use Fc")
        value = dawson_real(ns.x, coeffs)
        _emit(cfg, format_float17(value) + "\n")
        return 0
    point = EvalPoint(ns.x, ns.y)
    if func == "K":
        _emit(cfg, format_float17(voigt_K(point, coeffs)) + "\n")
    elif func == "L":
        _emit(cfg, format_float17(voigt_L(point, coeffs)) + "\n")
    elif func == "w":
        v = faddeeva_w(point, coeffs)
        _emit(cfg, f"{format_float17(v.re)},{format_float17(v.im)}\n")
    else:  # Fc
        v = dawson_complex(point, coeffs)
        _emit(cfg, f"{format_float17(v.re)},{format_float17(v.im)}\n")
    return 0


def _cmd_sweep(ns: argparse.Namespace, cfg: CliConfig) -> int:
    coeffs = build_coefficients(cfg.params)
    series = analysis.sweep_dawson_error(
        ns.xmax, ns.points, coeffs, cache=_load_cache_if_present()
    )
    meta = [
        "# command=sweep-dawson",
        f"# xmax={format_float17(ns.xmax)}",
        f"# points={ns.points}",
        *_params_meta(cfg.params),
    ]
    if cfg.fmt == "json":
        payload = {
            "meta": {"command": "sweep-dawson", "xmax": ns.xmax, "points": ns.points},
            "xs": list(series.xs),
            "eps": list(series.eps),
        }
        _emit(cfg, json.dumps(payload, sort_keys=True) + "\n")
        return 0
    lines = meta + ["x,eps"]
    for x, e in zip(series.xs, series.eps):
        lines.append(f"{format_float17(x)},{format_float17(e)}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_error_map(ns: argparse.Namespace, cfg: CliConfig) -> int:
    coeffs = build_coefficients(cfg.params)
    grid = analysis.error_grid_voigt(
        ns.xmax, ns.ymax, ns.nx, ns.ny, coeffs, cache=_load_cache_if_present()
    )
    counts = {f"branch_{k}": v for k, v in sorted(grid.branch_counts.items())}
    if cfg.fmt == "json":
        payload = {
            "meta": {
                "command": "error-map",
                "xmax": ns.xmax,
                "ymax": ns.ymax,
                "nx": ns.nx,
                "ny": ns.ny,
                **counts,
            },
            "xs": list(grid.xs),
            "ys": list(grid.ys),
            "log10_delta": [list(row) for row in grid.log10_delta],
        }
        _emit(cfg, json.dumps(payload, sort_keys=True) + "\n")
        return 0
    meta = [
        "# command=error-map",
        f"# xmax={format_float17(ns.xmax)}",
        f"# ymax={format_float17(ns.ymax)}",
        f"# nx={ns.nx}",
        f"# ny={ns.ny}",
        *_params_meta(cfg.params),
        *(f"# {k}={v}" for k, v in counts.items()),
    ]
    lines = meta + ["x,y,log10_delta"]
    for y, row in zip(grid.ys, grid.log10_delta):
        for x, v in zip(grid.xs, row):
            lines.append(f"{format_float17(x)},{format_float17(y)},{format_float17(v)}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _parse_grid_spec(spec: str) -> list[tuple[str, int, int]]:
    """Expand a --grid spec into (name, nx, ny) generation requests."""
    if spec == "all":
        return [
            ("dawson-line", cache_mod.DAWSON_LINE_POINTS, 1),
            ("voigt-strip", cache_mod.VOIGT_GRID_NX, cache_mod.VOIGT_GRID_NY),
        ]
    name, _, size = spec.partition(":")
    if name == "dawson-line":
        n = int(size) if size else cache_mod.DAWSON_LINE_POINTS
        if n < 2:
            raise _Usage(f"dawson-line needs >= 2 points, got {n}")
        return [("dawson-line", n, 1)]
    if name == "voigt-strip":
        if size:
            nx_s, _, ny_s = size.partition("x")
            nx, ny = int(nx_s), int(ny_s)
        else:
            nx, ny = cache_mod.VOIGT_GRID_NX, cache_mod.VOIGT_GRID_NY
        if nx < 2 or ny < 2:
            raise _Usage(f"voigt-strip needs >= 2x2 points, got {nx}x{ny}")
        return [("voigt-strip", nx, ny)]
    raise _Usage(f"unknown grid spec {spec!r}; expected one of {_GRID_NAMES}")


def _cmd_oracle(ns: argparse.Namespace, cfg: CliConfig) -> int:
    path = cache_mod.default_cache_path()
    store = cache_mod.OracleCache.load(path) if path.exists() else cache_mod.OracleCache()
    for name, nx, ny in _parse_grid_spec(ns.grid):
        if name == "dawson-line":
            xs = cache_mod.uniform_axis(0.0, cache_mod.X_MAX, nx)
            records = reference.generate_dawson_line_records(
                xs, working_digits=ns.working_digits, jobs=ns.jobs
            )
            header = (
                f"# grid=dawson-line n={nx} x=[0,{cache_mod.X_MAX}] "
                f"method=dawson-series working_digits={ns.working_digits}"
            )
        else:
            xs = cache_mod.uniform_axis(0.0, cache_mod.X_MAX, nx)
            ys = cache_mod.uniform_axis(0.0, cache_mod.Y_MAX, ny)
            records = reference.generate_voigt_grid_records(
                xs, ys, digits=ns.digits, jobs=ns.jobs
            )
            header = (
                f"# grid=voigt-strip nx={nx} ny={ny} x=[0,{cache_mod.X_MAX}] "
                f"y=[0,{cache_mod.Y_MAX}] method=erfc digits={ns.digits}"
            )
        store.add_records(records, header)
    store.save(path)
    _emit(cfg, f"wrote {len(store)} records to {path}\n")
    return 0


def _cmd_bench(ns: argparse.Namespace, cfg: CliConfig) -> int:
    coeffs = build_coefficients(cfg.params)
    stats = analysis.benchmark(ns.op, ns.points, ns.reps, coeffs=coeffs)
    payload = {
        "op_name": stats.op_name,
        "points_evaluated": stats.points_evaluated,
        "wall_seconds": stats.wall_seconds,
        "throughput": stats.throughput,
        "repetitions": stats.repetitions,
    }
    _emit(cfg, json.dumps(payload, sort_keys=True) + "\n")
    return 0


class _Usage(Exception):
    """Usage error detected after argparse parsing."""


_COMMANDS = {
    "eval": _cmd_eval,
    "sweep-dawson": _cmd_sweep,
    "error-map": _cmd_error_map,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    """Execute one CLI invocation; returns the process exit status."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        cfg = _config_from(ns, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DawsonVoigtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[ns.subcommand](ns, cfg)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DawsonVoigtError, OverflowError) as exc:
        print(f"error: {ns.subcommand}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
