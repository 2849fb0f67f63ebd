"""Physical-unit conversions and the CuNiCu experimental parameter preset.

The model works internally in reduced units: energies in units of J and
temperatures with k_B = 1.  This module is the single place where cm^-1,
Kelvin and Tesla enter.  Conversion constants (CODATA-derived, truncated to
the digits below) are collected in ``CONSTANTS`` so they can be audited and
serialised:

    kelvin_per_cm1     1.4388    K per cm^-1        (hc/k_B)
    bohr_magneton_cm1  0.46686   cm^-1 per Tesla    (mu_B/(hc))
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from types import MappingProxyType

from .model import TrimerParams

CONSTANTS = MappingProxyType(
    {
        "kelvin_per_cm1": 1.4388,
        "bohr_magneton_cm1_per_tesla": 0.46686,
    }
)


@dataclass(frozen=True)
class PhysicalParams:
    """Laboratory-unit parameters: couplings in cm^-1, field in Tesla,
    temperature in Kelvin.  ``b_tesla``/``t_kelvin`` may be left unset."""

    j_cm: float
    d_cm: float
    g_factor: float
    b_tesla: float | None = None
    t_kelvin: float | None = None

    def __post_init__(self) -> None:
        if not (self.j_cm > 0 and math.isfinite(self.j_cm)):
            raise ValueError("exchange coupling must be positive (cm^-1)")
        if self.g_factor <= 0:
            raise ValueError("g-factor must be positive")
        if self.t_kelvin is not None and self.t_kelvin < 0:
            raise ValueError("temperature must be nonnegative")

    def with_point(self, b_tesla: float, t_kelvin: float) -> "PhysicalParams":
        return replace(self, b_tesla=b_tesla, t_kelvin=t_kelvin)


def cunicu_preset() -> PhysicalParams:
    """Couplings of the CuNiCu heterotrinuclear complex: J = 22.8 cm^-1,
    D = 0.05 cm^-1, g = 2.227 (field and temperature left unset)."""
    return PhysicalParams(j_cm=22.8, d_cm=0.05, g_factor=2.227)


def zeeman_cm(p: PhysicalParams, b_tesla: float) -> float:
    """g mu_B B in cm^-1."""
    return p.g_factor * CONSTANTS["bohr_magneton_cm1_per_tesla"] * b_tesla


def kelvin_per_j(p: PhysicalParams) -> float:
    """Temperature (K) corresponding to k_B T = J."""
    return p.j_cm * CONSTANTS["kelvin_per_cm1"]


def tesla_per_j(p: PhysicalParams) -> float:
    """Field (T) at which the Zeeman energy g mu_B B equals J."""
    return p.j_cm / (p.g_factor * CONSTANTS["bohr_magneton_cm1_per_tesla"])


def to_reduced(p: PhysicalParams) -> tuple[TrimerParams, float]:
    """Reduced (J = 1) trimer parameters and temperature for a physical point.

    Requires ``b_tesla`` and ``t_kelvin`` to be set.
    """
    if p.b_tesla is None or p.t_kelvin is None:
        raise ValueError("physical point needs both b_tesla and t_kelvin")
    params = TrimerParams(
        J=1.0,
        D=p.d_cm / p.j_cm,
        h=zeeman_cm(p, p.b_tesla) / p.j_cm,
    )
    return params, p.t_kelvin / kelvin_per_j(p)


def to_physical(
    params: TrimerParams, t_reduced: float, j_cm: float, g_factor: float
) -> PhysicalParams:
    """Inverse of :func:`to_reduced` for a J = 1 reduced parameter set."""
    scale = j_cm / params.J
    return PhysicalParams(
        j_cm=j_cm,
        d_cm=params.D * scale,
        g_factor=g_factor,
        b_tesla=params.h * scale / (g_factor * CONSTANTS["bohr_magneton_cm1_per_tesla"]),
        t_kelvin=t_reduced * j_cm * CONSTANTS["kelvin_per_cm1"],
    )
