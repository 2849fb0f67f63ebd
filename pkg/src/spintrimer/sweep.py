"""Parameter sweeps over (anisotropy, field, temperature) grids.

A sweep walks the Cartesian grid in a fixed row order (anisotropy slowest,
then field, then temperature), evaluates the requested quantities at every
point and emits a flat table.  Grid points are independent, so they can be
farmed out to a process pool; rows are always assembled in grid order, which
makes the output byte-identical for any worker count.

Output schema (``SCHEMA``): one header naming the columns plus data rows
with floats printed to 12 significant digits, locale independent.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, replace
from multiprocessing import Pool
from typing import Iterable, Sequence

from .coherence import coherence_report
from .entanglement import negativity_bipartite, negativity_tripartite
from .model import TrimerParams, ground_state
from .squeezing import squeezing_parameter
from .thermo import (
    SATURATION_MAGNETIZATION,
    gibbs_free_energy,
    log_partition_function,
    magnetization,
    thermal_state,
)
from .units import PhysicalParams, to_reduced

SCHEMA = "spintrimer.sweep.v1"

#: Quantities that can be requested in a sweep, in emission order.
QUANTITY_COLUMNS = (
    "m_over_ms",
    "n_ab",
    "n_ac",
    "n_abc",
    "c_abc",
    "c_ab",
    "c_ac",
    "xi2",
    "log_z",
    "gibbs",
    "phase",
)

_STATE_QUANTITIES = frozenset(
    {"n_ab", "n_ac", "n_abc", "c_abc", "c_ab", "c_ac", "xi2"}
)


@dataclass(frozen=True)
class Axis:
    """Inclusive linear axis, or an explicit list of points via ``values``."""

    start: float = 0.0
    stop: float = 0.0
    count: int = 1
    values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.values is None and self.count < 1:
            raise ValueError("axis count must be >= 1")
        if self.values is not None and not self.values:
            raise ValueError("explicit axis must list at least one value")

    @classmethod
    def explicit(cls, values: Sequence[float]) -> "Axis":
        pts = tuple(float(v) for v in values)
        if not pts:
            raise ValueError("explicit axis must list at least one value")
        return cls(pts[0], pts[-1], len(pts), pts)

    @classmethod
    def pinned(cls, value: float) -> "Axis":
        return cls.explicit([value])

    def points(self) -> list[float]:
        if self.values is not None:
            return list(self.values)
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        return [self.start + k * step for k in range(self.count)]


def axis_from(spec) -> Axis:
    """Accept an Axis, a scalar, an explicit list, or {min, max, count}."""
    if isinstance(spec, Axis):
        return spec
    if isinstance(spec, dict):
        return Axis(float(spec["min"]), float(spec["max"]), int(spec["count"]))
    if isinstance(spec, (int, float)):
        return Axis.pinned(float(spec))
    return Axis.explicit(spec)


@dataclass(frozen=True)
class SweepConfig:
    """Declarative description of one sweep.

    Reduced units: axes are D/J, g mu_B B/J and k_B T/J with J = 1.
    Physical units: axes are D in cm^-1, B in Tesla and T in Kelvin,
    converted through the ``physical`` parameter set (whose d_cm is
    overridden by the anisotropy axis).
    """

    units: str  # "reduced" | "physical"
    quantities: tuple[str, ...]
    anisotropy: Axis
    fields: Axis
    temperatures: Axis
    physical: PhysicalParams | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.units not in ("reduced", "physical"):
            raise ValueError("units must be 'reduced' or 'physical'")
        if self.units == "physical" and self.physical is None:
            raise ValueError("physical sweeps need preset parameters")
        unknown = set(self.quantities) - set(QUANTITY_COLUMNS)
        if unknown:
            raise ValueError(f"unknown quantities: {sorted(unknown)}")
        if not self.quantities:
            raise ValueError("no quantities selected")


def param_columns(config: SweepConfig) -> tuple[str, ...]:
    if config.units == "reduced":
        return ("d_over_j", "h_over_j", "t_over_j")
    return ("d_cm", "b_tesla", "t_kelvin", "h_over_j", "t_over_j")


def columns(config: SweepConfig) -> tuple[str, ...]:
    ordered = tuple(q for q in QUANTITY_COLUMNS if q in config.quantities)
    return param_columns(config) + ordered


def _reduced_point(config: SweepConfig, d: float, f: float, t: float):
    """(params, reduced T, echo columns) for one grid tuple."""
    if config.units == "reduced":
        return TrimerParams(J=1.0, D=d, h=f), t, (d, f, t)
    phys = replace(config.physical, d_cm=d, b_tesla=f, t_kelvin=t)
    params, t_red = to_reduced(phys)
    return params, t_red, (d, f, t, params.h, t_red)


def evaluate_point(config: SweepConfig, point: tuple[float, float, float]) -> list:
    """One output row (echo columns + selected quantities) for a grid point."""
    d, f, t = point
    params, t_red, echo = _reduced_point(config, d, f, t)
    need = set(config.quantities)
    values: dict[str, object] = {}
    if "phase" in need:
        gs = ground_state(params)
        values["phase"] = "+".join(p.value for p in gs.members)
    if "m_over_ms" in need:
        values["m_over_ms"] = magnetization(params, t_red) / SATURATION_MAGNETIZATION
    if "log_z" in need:
        values["log_z"] = log_partition_function(params, t_red)
    if "gibbs" in need:
        values["gibbs"] = gibbs_free_energy(params, t_red)
    if need & _STATE_QUANTITIES:
        state = thermal_state(params, t_red)
        if need & {"n_ab", "n_ac"}:
            values["n_ab"], values["n_ac"] = negativity_bipartite(state)
        if "n_abc" in need:
            values["n_abc"] = negativity_tripartite(state)[3]
        if need & {"c_abc", "c_ab", "c_ac"}:
            values["c_abc"], values["c_ab"], values["c_ac"] = coherence_report(state)
        if "xi2" in need:
            values["xi2"] = squeezing_parameter(state)
    row = list(echo)
    row.extend(values[q] for q in QUANTITY_COLUMNS if q in need)
    return row


def grid_points(config: SweepConfig) -> list[tuple[float, float, float]]:
    return list(
        itertools.product(
            config.anisotropy.points(),
            config.fields.points(),
            config.temperatures.points(),
        )
    )


def _worker(args) -> list:
    return evaluate_point(*args)


def run_sweep(config: SweepConfig) -> list[list]:
    """Evaluate the whole grid; rows in grid order regardless of workers."""
    points = grid_points(config)
    if config.workers > 1 and len(points) > 1:
        with Pool(config.workers) as pool:
            rows = pool.map(_worker, [(config, p) for p in points], chunksize=16)
    else:
        rows = [evaluate_point(config, p) for p in points]
    return rows


def format_value(value) -> str:
    """Locale-independent shortest representation at 12 significant digits."""
    if isinstance(value, str):
        return value
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return format(float(value), ".12g")


def render(config: SweepConfig, rows: Iterable[Sequence], fmt: str) -> str:
    cols = columns(config)
    if fmt == "csv":
        lines = [f"# schema={SCHEMA} units={config.units}", ",".join(cols)]
        lines += [",".join(format_value(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "gnuplot":
        lines = [
            f"# schema={SCHEMA} units={config.units}",
            "# columns: " + " ".join(cols),
        ]
        lines += [" ".join(format_value(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "schema": SCHEMA,
            "units": config.units,
            "columns": list(cols),
            "rows": [
                [v if isinstance(v, str) else float(format_value(v)) for v in row]
                for row in rows
            ],
        }
        return json.dumps(payload, indent=1) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")
