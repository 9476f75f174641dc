"""Command line interface.

Subcommands:

  temps           characteristic temperatures and multistep classification
  sweep           temperature sweep of the occupation split (CSV/JSON)
  phase-diagram   classification grid over the anisotropy plane
  similarity      reduced-variable collapse export
  verify          internal consistency suites

Options may also come from a flat JSON file via --config; precedence is
command line over config file over built-in defaults.  Exit codes:
0 success, 1 failed verification or non-convergence, 2 invalid input,
3 a formula requested outside its applicability, 4 unwritable output
path.
"""

import argparse
import dataclasses
import json
import math
import sys
import warnings

import numpy as np

from ._version import __version__
from .analysis import collapse_export
from .errors import (
    CommensurabilityError,
    ConvergenceError,
    DomainError,
    InapplicableFormulaError,
    UnsupportedOrderError,
)
from .series import SeriesControl
from .solver import TemperatureGrid, sweep
from .temperatures import multistep_flags, phase_point, temperature_set
from .trap import build_trap
from .verify import run_verification


class _UnwritableOutput(Exception):
    pass


_SKIP_KEYS = {"handler", "defaults", "required", "format_choices", "command"}

_FLOAT_KEYS = {
    "omega1", "omega2", "omega3", "natoms", "tmin", "tmax", "tol",
    "c1", "c2", "c3", "match_tol", "ratio_max",
}
_INT_KEYS = {"points", "max_terms", "ratio_points"}
_BOOL_KEYS = {"log", "zeta_as_one"}
_CHOICE_KEYS = {
    "iso_split": ("maximal", "symmetric"),
    "t2d_norm": ("zeta2", "two_zeta2"),
    "mode": ("closed_form", "full_solve"),
}

_SERIES_DEFAULTS = {"tol": 1e-12, "max_terms": 10**6, "iso_split": "maximal"}
_COEF_DEFAULTS = {"c1": 1.0, "c2": 1.0, "c3": 1.0, "mode": "closed_form", "t2d_norm": "zeta2"}


def _fmt17(v) -> str:
    if isinstance(v, int):
        return str(v)
    return format(v, ".17g")


def _coerce_value(key: str, value, format_choices):
    if key in _BOOL_KEYS:
        if not isinstance(value, bool):
            raise DomainError(f"config key {key!r} must be a JSON boolean")
        return value
    if key in _INT_KEYS:
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"config key {key!r} must be an integer")
        return value
    if key in _FLOAT_KEYS:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise DomainError(f"config key {key!r} must be a number")
        return float(value)
    if key == "format":
        if value not in format_choices:
            raise DomainError(
                f"config key 'format' must be one of {format_choices}, got {value!r}"
            )
        return value
    if key in _CHOICE_KEYS:
        if value not in _CHOICE_KEYS[key]:
            raise DomainError(
                f"config key {key!r} must be one of {_CHOICE_KEYS[key]}, got {value!r}"
            )
        return value
    if key == "out":
        if not isinstance(value, str):
            raise DomainError("config key 'out' must be a string path")
        return value
    raise DomainError(f"config key {key!r} is not settable from a file")


def _load_config(path: str, allowed: set, format_choices) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"config file is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DomainError("config file must hold a flat JSON object")
    out = {}
    for key, value in raw.items():
        norm = key.replace("-", "_")
        if norm not in allowed:
            raise DomainError(f"unknown config key for this command: {key}")
        out[norm] = _coerce_value(norm, value, format_choices)
    return out


def _merge_config(args: argparse.Namespace) -> dict:
    cfg = dict(args.defaults)
    ns = {k: v for k, v in vars(args).items() if k not in _SKIP_KEYS}
    path = ns.pop("config", None)
    allowed = set(cfg) | set(args.required) | {"out", "format"}
    if path is not None:
        cfg.update(_load_config(path, allowed, args.format_choices))
    cfg.update(ns)
    missing = [k for k in args.required if k not in cfg]
    if missing:
        flags = ", ".join("--" + k.replace("_", "-") for k in missing)
        raise DomainError(f"missing required option(s): {flags}")
    return cfg


def _write_output(cfg: dict, emit) -> None:
    path = cfg.get("out")
    if path is None:
        emit(sys.stdout)
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise _UnwritableOutput(str(exc)) from exc
    with fh:
        emit(fh)


def _ctrl_from(cfg: dict) -> SeriesControl:
    return SeriesControl(rel_tol=cfg["tol"], max_terms=cfg["max_terms"])


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _report_obj(report) -> dict:
    obj = dataclasses.asdict(report)
    obj["label"] = report.label.value
    obj["window"] = list(report.window)
    return obj


def cmd_temps(cfg: dict) -> int:
    trap = build_trap(cfg["omega1"], cfg["omega2"], cfg["omega3"])
    n = cfg["natoms"]
    temps = temperature_set(
        trap, n, cfg["c1"], cfg["c2"], cfg["c3"], cfg["mode"], cfg["t2d_norm"]
    )
    report = multistep_flags(trap, n, cfg["zeta_as_one"])
    if cfg["format"] == "json":
        obj = {
            "trap": {
                "omega": list(trap.omega),
                "k": list(trap.k),
                "kappa": trap.kappa,
                "e0": trap.e0,
                "regime": trap.regime.value,
            },
            "natoms": n,
            "temperatures": {
                name: getattr(temps, name)
                for name in ("t3d", "t2d", "t1d", "t3d_star", "t2d_star", "t1d_star")
            },
            "multistep": _report_obj(report),
        }
        _write_output(cfg, lambda s: s.write(_json_dump(obj)))
        return 0

    def val(v):
        return "n/a" if v is None else format(v, ".10g")

    pair = report.three_step_kappa and report.three_step_k3
    lines = [
        f"regime: {trap.regime.value}",
        f"omega: {trap.omega[0]:.10g} {trap.omega[1]:.10g} {trap.omega[2]:.10g}",
        f"k: {trap.k[0]} {trap.k[1]} {trap.k[2]}",
        f"natoms: {n:.10g}",
        f"t3d      = {val(temps.t3d)}",
        f"t2d      = {val(temps.t2d)}",
        f"t1d      = {val(temps.t1d)}",
        f"t3d_star = {val(temps.t3d_star)}",
        f"t2d_star = {val(temps.t2d_star)}",
        f"t1d_star = {val(temps.t1d_star)}",
        f"label: {report.label.value}",
        f"window: ({report.window[0]:.10g}, {report.window[1]:.10g})"
        f"  k3 in window: {report.in_window}",
        f"cond A: {report.cond_a} (margin {report.margin_a:.4g})",
        f"cond B: {report.cond_b} (margin {report.margin_b:.4g})",
        f"cond C: {report.cond_c} (margin {report.margin_c:.4g})",
        f"three-step pair: {pair} (margins {report.margin_three_step_kappa:.4g},"
        f" {report.margin_three_step_k3:.4g})",
        f"two-d visible: {report.two_d_visible} (margin {report.margin_two_d:.4g})",
    ]
    _write_output(cfg, lambda s: s.write("\n".join(lines) + "\n"))
    return 0


def cmd_sweep(cfg: dict) -> int:
    trap = build_trap(cfg["omega1"], cfg["omega2"], cfg["omega3"])
    spacing = "logarithmic" if cfg["log"] else "linear"
    grid = TemperatureGrid(cfg["tmin"], cfg["tmax"], cfg["points"], spacing)
    table = sweep(trap, cfg["natoms"], grid, _ctrl_from(cfg), cfg["iso_split"])
    if cfg["format"] == "json":
        _write_output(cfg, lambda s: s.write(_json_dump(table.to_json_obj())))
    else:
        _write_output(cfg, table.to_csv)
    return 0


def cmd_phase_diagram(cfg: dict) -> int:
    n = cfg["natoms"]
    if cfg["ratio_max"] < 1.0:
        raise DomainError(f"--ratio-max must be >= 1, got {cfg['ratio_max']}")
    if cfg["ratio_points"] < 1:
        raise DomainError(f"--ratio-points must be >= 1, got {cfg['ratio_points']}")
    ratios = np.geomspace(1.0, cfg["ratio_max"], cfg["ratio_points"])
    rows = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for r12 in ratios:
            for r23 in ratios:
                report = phase_point(float(r12), float(r23), n, cfg["zeta_as_one"])
                rows.append(
                    (math.log10(float(r12)), math.log10(float(r23)), report.label.value)
                )
        n_rounded = len(caught)
    if cfg["format"] == "json":
        obj = {
            "metadata": {
                "natoms": n,
                "ratio_max": cfg["ratio_max"],
                "ratio_points": cfg["ratio_points"],
                "zeta_as_one": cfg["zeta_as_one"],
                "rounded_points": n_rounded,
                "version": __version__,
            },
            "columns": ["log10_ratio12", "log10_ratio23", "label"],
            "records": [
                {"log10_ratio12": a, "log10_ratio23": b, "label": lab}
                for a, b, lab in rows
            ],
        }
        _write_output(cfg, lambda s: s.write(_json_dump(obj)))
        return 0

    def emit(stream):
        stream.write("log10_ratio12,log10_ratio23,label\n")
        for a, b, lab in rows:
            stream.write(f"{_fmt17(a)},{_fmt17(b)},{lab}\n")

    _write_output(cfg, emit)
    if n_rounded:
        print(
            f"note: {n_rounded} grid points rounded to commensurate integer ratios",
            file=sys.stderr,
        )
    return 0


def cmd_similarity(cfg: dict) -> int:
    trap = build_trap(cfg["omega1"], cfg["omega2"], cfg["omega3"])
    n = cfg["natoms"]
    spacing = "logarithmic" if cfg["log"] else "linear"
    grid = TemperatureGrid(cfg["tmin"], cfg["tmax"], cfg["points"], spacing)
    table = sweep(trap, n, grid, _ctrl_from(cfg), cfg["iso_split"])
    temps = temperature_set(
        trap, n, cfg["c1"], cfg["c2"], cfg["c3"], cfg["mode"], cfg["t2d_norm"]
    )
    data = collapse_export(table, temps)
    records = []
    for d in sorted(data.curves):
        t_red, frac_norm = data.curves[d]
        for a, b in zip(t_red, frac_norm):
            records.append((d, float(a), float(b)))
    if cfg["format"] == "json":
        obj = {
            "metadata": {**table.metadata, "spread": data.spread},
            "columns": ["bucket", "t_reduced", "frac_normalized"],
            "records": [
                {"bucket": d, "t_reduced": a, "frac_normalized": b}
                for d, a, b in records
            ],
        }
        _write_output(cfg, lambda s: s.write(_json_dump(obj)))
        return 0

    def emit(stream):
        stream.write("bucket,t_reduced,frac_normalized\n")
        for d, a, b in records:
            stream.write(f"{d},{_fmt17(a)},{_fmt17(b)}\n")

    _write_output(cfg, emit)
    if data.spread is not None:
        print(f"note: collapse spread {data.spread:.6g}", file=sys.stderr)
    return 0


def cmd_verify(cfg: dict) -> int:
    trap = build_trap(cfg["omega1"], cfg["omega2"], cfg["omega3"])
    checks = run_verification(
        trap, cfg["natoms"], _ctrl_from(cfg), cfg["match_tol"], cfg["iso_split"]
    )
    ok = all(c["passed"] for c in checks)
    if cfg["format"] == "json":
        obj = {"passed": ok, "checks": checks}
        _write_output(cfg, lambda s: s.write(_json_dump(obj)))
    else:
        lines = [
            ("PASS " if c["passed"] else "FAIL ") + f"{c['name']}: {c['detail']}"
            for c in checks
        ]
        n_pass = sum(1 for c in checks if c["passed"])
        lines.append(f"{n_pass} of {len(checks)} checks passed")
        _write_output(cfg, lambda s: s.write("\n".join(lines) + "\n"))
    return 0 if ok else 1


def _add(parser, name, **kw):
    parser.add_argument(name, default=argparse.SUPPRESS, **kw)


def _trap_args(p):
    _add(p, "--omega1", type=float, help="first trap frequency")
    _add(p, "--omega2", type=float, help="second trap frequency")
    _add(p, "--omega3", type=float, help="third trap frequency")
    _add(p, "--natoms", type=float, help="total particle number")


def _series_args(p):
    _add(p, "--tol", type=float, help="relative tolerance for series evaluation")
    _add(p, "--max-terms", type=int, dest="max_terms", help="series term budget")
    _add(p, "--iso-split", choices=_CHOICE_KEYS["iso_split"], dest="iso_split",
         help="bucket convention for isotropic traps")


def _grid_args(p):
    _add(p, "--tmin", type=float, help="lowest temperature")
    _add(p, "--tmax", type=float, help="highest temperature")
    _add(p, "--points", type=int, help="number of grid points")
    _add(p, "--log", action="store_true", help="logarithmic temperature spacing")


def _coef_args(p):
    _add(p, "--c1", type=float, help="order-one constant in the 3-D crossover")
    _add(p, "--c2", type=float, help="order-one constant in the 2-D crossover")
    _add(p, "--c3", type=float, help="order-one constant in the 1-D crossover")
    _add(p, "--mode", choices=_CHOICE_KEYS["mode"],
         help="2-D crossover evaluation strategy")
    _add(p, "--t2d-norm", choices=_CHOICE_KEYS["t2d_norm"], dest="t2d_norm",
         help="normalization of the bulk 2-D temperature")


def _io_args(p, formats, default_format):
    _add(p, "--format", choices=formats,
         help=f"output format (default {default_format})")
    _add(p, "--out", help="output file path (default stdout)")
    _add(p, "--config", help="flat JSON file with option defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anisobec",
        description="Ideal Bose gas equilibrium in anisotropic 3-D harmonic traps.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("temps", help="characteristic temperatures and classification")
    _trap_args(p)
    _coef_args(p)
    _add(p, "--zeta-as-one", action="store_true", dest="zeta_as_one",
         help="evaluate multistep conditions with zeta factors set to 1")
    _io_args(p, ("text", "json"), "text")
    p.set_defaults(
        handler=cmd_temps,
        defaults={**_COEF_DEFAULTS, "zeta_as_one": False, "format": "text"},
        required=("omega1", "omega2", "omega3", "natoms"),
        format_choices=("text", "json"),
    )

    p = sub.add_parser("sweep", help="occupation split along a temperature grid")
    _trap_args(p)
    _grid_args(p)
    _series_args(p)
    _io_args(p, ("csv", "json"), "csv")
    p.set_defaults(
        handler=cmd_sweep,
        defaults={**_SERIES_DEFAULTS, "points": 100, "log": False, "format": "csv"},
        required=("omega1", "omega2", "omega3", "natoms", "tmin", "tmax"),
        format_choices=("csv", "json"),
    )

    p = sub.add_parser("phase-diagram", help="classification over the anisotropy plane")
    _add(p, "--natoms", type=float, help="total particle number")
    _add(p, "--ratio-max", type=float, dest="ratio_max",
         help="largest frequency ratio on either axis")
    _add(p, "--ratio-points", type=int, dest="ratio_points",
         help="grid points per axis")
    _add(p, "--zeta-as-one", action="store_true", dest="zeta_as_one",
         help="evaluate multistep conditions with zeta factors set to 1")
    _io_args(p, ("csv", "json"), "csv")
    p.set_defaults(
        handler=cmd_phase_diagram,
        defaults={"ratio_max": 1e4, "ratio_points": 50, "zeta_as_one": False,
                  "format": "csv"},
        required=("natoms",),
        format_choices=("csv", "json"),
    )

    p = sub.add_parser("similarity", help="reduced-variable collapse export")
    _trap_args(p)
    _grid_args(p)
    _series_args(p)
    _coef_args(p)
    _io_args(p, ("csv", "json"), "csv")
    p.set_defaults(
        handler=cmd_similarity,
        defaults={**_SERIES_DEFAULTS, **_COEF_DEFAULTS, "points": 100, "log": False,
                  "format": "csv"},
        required=("omega1", "omega2", "omega3", "natoms", "tmin", "tmax"),
        format_choices=("csv", "json"),
    )

    p = sub.add_parser("verify", help="run the internal consistency suites")
    _trap_args(p)
    _series_args(p)
    _add(p, "--match-tol", type=float, dest="match_tol",
         help="tolerance for the series vs enumeration comparison")
    _io_args(p, ("text", "json"), "text")
    p.set_defaults(
        handler=cmd_verify,
        defaults={**_SERIES_DEFAULTS, "omega1": 0.1, "omega2": 0.1, "omega3": 0.1,
                  "natoms": 1000.0, "match_tol": 1e-6, "format": "text"},
        required=(),
        format_choices=("text", "json"),
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args)
        return args.handler(cfg)
    except InapplicableFormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _UnwritableOutput as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 4
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CommensurabilityError, DomainError, UnsupportedOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
