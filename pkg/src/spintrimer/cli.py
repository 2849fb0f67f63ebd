"""Command-line front end.

Subcommands:

* ``sweep``     -- tabulate thermal quantities over an (anisotropy, field,
                   temperature) grid
* ``threshold`` -- vanishing temperatures (and reentrant windows) of a
                   negativity
* ``husimi``    -- Q-function samples on a (theta, phi) sphere grid
* ``phase``     -- analytic ground-state boundary fields over an anisotropy
                   range

Runs are configured by a TOML file (``--config``) or by one of the named
recipes shipped with the package (``--preset``, see ``recipes.toml``).
Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

import numpy as np

from . import __version__
from .entanglement import threshold_temperature
from .husimi import husimi_grid
from .model import TrimerParams, boundary_half_saturated, boundary_singlet_half
from .sweep import (
    SCHEMA,
    Axis,
    SweepConfig,
    axis_from,
    format_value,
    render,
    run_sweep,
)
from .thermo import thermal_state
from .units import cunicu_preset, kelvin_per_j, to_reduced, zeeman_cm

_PRESET_PARAMS = {"cunicu": cunicu_preset}


class ConfigError(ValueError):
    """Invalid or ambiguous run configuration (CLI exit code 2)."""


def load_recipes() -> dict:
    text = resources.files("spintrimer").joinpath("recipes.toml").read_text()
    return tomllib.loads(text)


def _load_run_table(args) -> dict:
    if bool(args.config) == bool(args.preset):
        raise ConfigError("exactly one of --config or --preset is required")
    if args.preset:
        recipes = load_recipes()
        if args.preset not in recipes or not isinstance(recipes[args.preset], dict):
            named = sorted(k for k, v in recipes.items() if isinstance(v, dict))
            raise ConfigError(f"unknown preset {args.preset!r}; available: {named}")
        return dict(recipes[args.preset])
    path = Path(args.config)
    try:
        table = tomllib.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    return table


def _scalar(table: dict, key: str, default: float) -> float:
    try:
        return float(table.get(key, default))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"config key {key!r} must be a number") from exc


def _resolve_units(table: dict, args) -> str:
    units = args.units or table.get("units")
    if units not in ("reduced", "physical"):
        raise ConfigError(
            "units must be given as 'reduced' (D/J, g mu_B B/J, k_B T/J) or "
            "'physical' (cm^-1, Tesla, Kelvin); set --units or the config key"
        )
    if args.units and table.get("units") and args.units != table["units"]:
        raise ConfigError(
            f"--units {args.units} contradicts config units {table['units']!r}"
        )
    return units


def _physical_from(table: dict):
    name = table.get("preset", "cunicu")
    try:
        return _PRESET_PARAMS[name]()
    except KeyError:
        raise ConfigError(f"unknown physical preset {name!r}") from None


def _axis(table: dict, key: str, default=None) -> Axis:
    if key not in table:
        if default is None:
            raise ConfigError(f"missing config key {key!r}")
        return axis_from(default)
    try:
        return axis_from(table[key])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad axis spec for {key!r}: {exc}") from exc


def _sweep_config(table: dict, args) -> SweepConfig:
    units = _resolve_units(table, args)
    physical = _physical_from(table) if units == "physical" else None
    default_d = physical.d_cm if physical is not None else None
    try:
        return SweepConfig(
            units=units,
            quantities=tuple(table.get("quantities", ())),
            anisotropy=_axis(table, "anisotropy", default_d),
            fields=_axis(table, "field"),
            temperatures=_axis(table, "temperature"),
            physical=physical,
            workers=max(1, args.workers),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output file {out!r}: {exc}") from exc


def _cmd_sweep(args) -> None:
    table = _load_run_table(args)
    if table.get("kind", "sweep") != "sweep":
        raise ConfigError(f"preset/config is of kind {table.get('kind')!r}, not sweep")
    config = _sweep_config(table, args)
    rows = run_sweep(config)
    _write(render(config, rows, args.format), args.out)


def _cmd_threshold(args) -> None:
    table = _load_run_table(args)
    if table.get("kind", "threshold") != "threshold":
        raise ConfigError(f"preset/config is of kind {table.get('kind')!r}, not threshold")
    units = _resolve_units(table, args)
    quantity = table.get("quantity", "n_abc")
    fields = _axis(table, "field").points()
    if units == "physical":
        phys = _physical_from(table)
        t_max_k = _scalar(table, "t_max", 60.0)
        scale_k = kelvin_per_j(phys)
        rows = []
        for b in fields:
            params = TrimerParams(J=1.0, D=phys.d_cm / phys.j_cm,
                                  h=zeeman_cm(phys, b) / phys.j_cm)
            res = threshold_temperature(params, quantity, t_max=t_max_k / scale_k)
            rows.append([b, len(res.windows), res.windows[0][0] * scale_k,
                         res.threshold * scale_k])
        header = ["b_tesla", "n_windows", "onset_kelvin", "threshold_kelvin"]
    else:
        d = _scalar(table, "anisotropy", 0.0)
        t_max = _scalar(table, "t_max", 4.0)
        rows = []
        for h in fields:
            res = threshold_temperature(TrimerParams(J=1.0, D=d, h=h), quantity,
                                        t_max=t_max)
            rows.append([h, len(res.windows), res.windows[0][0], res.threshold])
        header = ["h_over_j", "n_windows", "onset_over_j", "threshold_over_j"]
    lines = [f"# schema={SCHEMA} kind=threshold quantity={quantity} units={units}",
             ",".join(header)]
    lines += [",".join(format_value(v) for v in row) for row in rows]
    _write("\n".join(lines) + "\n", args.out)


def _cmd_husimi(args) -> None:
    table = _load_run_table(args)
    if table.get("kind", "husimi") != "husimi":
        raise ConfigError(f"preset/config is of kind {table.get('kind')!r}, not husimi")
    units = _resolve_units(table, args)
    if units == "physical":
        phys = _physical_from(table).with_point(
            b_tesla=_scalar(table, "field", 0.0),
            t_kelvin=_scalar(table, "temperature", 1.0),
        )
        params, t_red = to_reduced(phys)
    else:
        params = TrimerParams(J=1.0, D=_scalar(table, "anisotropy", 0.0),
                              h=_scalar(table, "field", 0.0))
        t_red = _scalar(table, "temperature", 0.1)
    state = thermal_state(params, t_red)
    grid = husimi_grid(state, int(table.get("n_theta", 91)),
                       int(table.get("n_phi", 90)))
    if args.format == "json":
        import json

        payload = {
            "schema": f"{SCHEMA}.husimi",
            "theta": [float(format_value(t)) for t in grid.thetas],
            "phi": [float(format_value(p)) for p in grid.phis],
            "q": [[float(format_value(v)) for v in row] for row in grid.values],
        }
        _write(json.dumps(payload, indent=1) + "\n", args.out)
        return
    sep = "," if args.format == "csv" else " "
    lines = [f"# schema={SCHEMA}.husimi units={units}",
             sep.join(("theta", "phi", "q"))]
    for i, theta in enumerate(grid.thetas):
        for j, phi in enumerate(grid.phis):
            lines.append(sep.join(format_value(v)
                                  for v in (theta, phi, grid.values[i, j])))
    _write("\n".join(lines) + "\n", args.out)


def _cmd_phase(args) -> None:
    d_values = np.linspace(args.d_min, args.d_max, args.count)
    lines = [f"# schema={SCHEMA} kind=phase units=reduced",
             ",".join(("d_over_j", "h_singlet_half", "h_half_saturated"))]
    for d in d_values:
        params = TrimerParams(J=1.0, D=float(d))
        lines.append(",".join(format_value(v) for v in (
            d, boundary_singlet_half(params), boundary_half_saturated(params))))
    _write("\n".join(lines) + "\n", args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintrimer",
        description="Thermal quantum resources of the spin-(1/2,1,1/2) Heisenberg trimer.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="TOML run configuration")
        p.add_argument("--preset", help="named recipe from the shipped recipes.toml")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json", "gnuplot"), default="csv")
        p.add_argument("--units", choices=("reduced", "physical"))
        p.add_argument("--workers", type=int, default=1)

    p_sweep = sub.add_parser("sweep", help="tabulate quantities over a grid")
    common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_thr = sub.add_parser("threshold", help="vanishing temperatures of a negativity")
    common(p_thr)
    p_thr.set_defaults(func=_cmd_threshold)

    p_hus = sub.add_parser("husimi", help="Husimi Q-function sphere grid")
    common(p_hus)
    p_hus.set_defaults(func=_cmd_husimi)

    p_phase = sub.add_parser("phase", help="ground-state boundary fields vs anisotropy")
    p_phase.add_argument("--d-min", type=float, default=-1.0)
    p_phase.add_argument("--d-max", type=float, default=1.0)
    p_phase.add_argument("--count", type=int, default=201)
    p_phase.add_argument("--out", help="output path (default: stdout)")
    p_phase.set_defaults(func=_cmd_phase)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ValueError as exc:
        # covers ConfigError plus invalid parameter/axis values reached
        # through library validation
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
