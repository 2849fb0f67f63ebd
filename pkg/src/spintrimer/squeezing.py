"""Collective spin squeezing of the trimer.

The collective spin is J = s_a + S_b + s_c.  With the mean spin along z, the
transverse direction n(theta) = (cos theta, sin theta, 0) has variance

    var(theta) = <J_n^2> - <J_n>^2
               = [ <Jx^2 + Jy^2> + cos(2 theta) <Jx^2 - Jy^2>
                 + sin(2 theta) <{Jx, Jy}> ] / 2 - <J_n>^2,

and minimising over theta gives the squeezing parameter normalised to the
effective number of elementary spin-1/2 constituents L' = 4 (the central
spin-1 counting as two):

    xi^2 = (2 / L') [ <Jx^2 + Jy^2> - sqrt(<Jx^2 - Jy^2>^2 + <{Jx, Jy}>^2) ].

xi^2 < 1 signals squeezing; a highest-weight coherent state gives exactly 1.
For every thermal state of this model <J_x> = <J_y> = 0 and the
anisotropy terms <Jx^2 - Jy^2>, <{Jx, Jy}> vanish (the state is block
diagonal in total S^z), so the transverse variance is isotropic; both facts
are asserted by the test suite rather than assumed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import TrimerParams, trimer_site_operators
from .thermo import ThermalState, thermal_state

L_PRIME = 4


@dataclass(frozen=True)
class CollectiveOperators:
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    jx2_plus_jy2: np.ndarray
    jx2_minus_jy2: np.ndarray
    jxy_anticommutator: np.ndarray


@lru_cache(maxsize=1)
def collective_operators() -> CollectiveOperators:
    ops = trimer_site_operators()
    jx = (ops["jp"] + ops["jm"]) / 2
    jy = (ops["jp"] - ops["jm"]) / 2j
    jz = ops["jz"].copy()
    jx2 = jx @ jx
    jy2 = (jy @ jy).real  # entries of jy are purely imaginary, so jy@jy is real
    mats = CollectiveOperators(
        jx, jy, jz, jx2 + jy2, jx2 - jy2, jx @ jy + jy @ jx
    )
    for m in (mats.jx, mats.jy, mats.jz, mats.jx2_plus_jy2,
              mats.jx2_minus_jy2, mats.jxy_anticommutator):
        m.setflags(write=False)
    return mats


def _expect(state: ThermalState, op: np.ndarray) -> float:
    return float(np.trace(state.rho @ op).real)


def transverse_variance(state: ThermalState, theta: float) -> float:
    """Variance of J along (cos theta, sin theta, 0), first moment included."""
    ops = collective_operators()
    jn = math.cos(theta) * ops.jx + math.sin(theta) * ops.jy
    mean = np.trace(state.rho @ jn).real
    return float(np.trace(state.rho @ (jn @ jn)).real - mean**2)


def squeezing_parameter(state: ThermalState) -> float:
    """Minimal-variance squeezing parameter xi^2 (L' = 4 normalisation)."""
    ops = collective_operators()
    a = _expect(state, ops.jx2_plus_jy2)
    b = _expect(state, ops.jx2_minus_jy2)
    c = _expect(state, ops.jxy_anticommutator)
    return (2.0 / L_PRIME) * (a - math.hypot(b, c))


def second_moments(state: ThermalState) -> tuple[float, float, float]:
    """(<Jx^2>, <Jy^2>, <Jz^2>) of the collective spin."""
    ops = collective_operators()
    jx2 = _expect(state, np.asarray(ops.jx @ ops.jx))
    jy2 = _expect(state, np.asarray((ops.jy @ ops.jy).real))
    jz2 = _expect(state, ops.jz @ ops.jz)
    return jx2, jy2, jz2


@dataclass(frozen=True)
class SqueezingMinimum:
    """Temperature minimum of xi^2 at one field value.

    ``interior`` is False when xi^2 is monotone on the scanned range, in
    which case (t_min, xi2_min) is the scan-edge minimum.
    """

    field: float
    t_min: float
    xi2_min: float
    interior: bool


def _xi2_at(params: TrimerParams, t: float) -> float:
    return squeezing_parameter(thermal_state(params, t))


def _golden_minimize(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    inv = (math.sqrt(5) - 1) / 2
    x1 = hi - inv * (hi - lo)
    x2 = lo + inv * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv * (hi - lo)
            f2 = f(x2)
    x = (lo + hi) / 2
    return x, f(x)


def squeezing_minimum_locus(
    base: TrimerParams,
    fields: np.ndarray,
    *,
    t_lo: float = 0.01,
    t_hi: float = 4.0,
    scan_points: int = 200,
    tol: float = 1e-4,
) -> list[SqueezingMinimum]:
    """For each Zeeman energy in ``fields``, locate the temperature minimising
    xi^2 on [t_lo, t_hi] (golden-section refinement to ``tol * J``).

    A field whose xi^2(T) is monotone on the range is reported with
    ``interior=False`` instead of a refined minimum.
    """
    out = []
    ts = np.linspace(t_lo, t_hi, scan_points)
    for h in np.asarray(fields, dtype=float):
        params = TrimerParams(base.J, base.D, float(h))
        values = np.array([_xi2_at(params, t) for t in ts])
        k = int(values.argmin())
        if k == 0 or k == len(ts) - 1:
            out.append(SqueezingMinimum(float(h), float(ts[k]), float(values[k]), False))
            continue
        t_min, xi2_min = _golden_minimize(
            lambda t: _xi2_at(params, t), ts[k - 1], ts[k + 1], tol * base.J
        )
        out.append(SqueezingMinimum(float(h), t_min, xi2_min, True))
    return out
