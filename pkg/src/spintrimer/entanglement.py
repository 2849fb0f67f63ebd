"""Bipartite and tripartite entanglement negativities of the trimer.

The negativity of a state with respect to a bipartition is the sum of
|lambda| over the negative eigenvalues lambda of the partially transposed
density matrix.  Pair negativities come from the reduced two-site matrices,
the three one-vs-rest negativities from 12x12 partial transposes of the full
state, and the tripartite negativity is their geometric mean (zero if any
factor is zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .linalg import TRIMER_DIMS, eig_hermitian, partial_trace, partial_transpose
from .model import TrimerParams
from .thermo import ThermalState, density_elements_closed, thermal_state

#: Values below this are indistinguishable from eigensolver noise and are
#: clamped to exactly zero, which keeps threshold bisection stable.
NEGATIVITY_FLOOR = 1e-12


def reduced_ab(state: ThermalState) -> np.ndarray:
    """6x6 state of the (a, b) pair; unit trace, Hermitian."""
    return partial_trace(state.rho, TRIMER_DIMS, (0, 1))


def reduced_ac(state: ThermalState) -> np.ndarray:
    """4x4 state of the corner pair (a, c)."""
    return partial_trace(state.rho, TRIMER_DIMS, (0, 2))


def reduced_bc(state: ThermalState) -> np.ndarray:
    """6x6 state of the (b, c) pair; its negativity equals the (a, b) one."""
    return partial_trace(state.rho, TRIMER_DIMS, (1, 2))


def negativity(matrix: np.ndarray, dims: Sequence[int], site: int) -> float:
    """Negativity of ``matrix`` under partial transposition of ``site``."""
    eigs, _ = eig_hermitian(partial_transpose(matrix, dims, site))
    total = float(sum((abs(x) - x) / 2 for x in eigs))
    return 0.0 if total < NEGATIVITY_FLOOR else total


def negativity_bipartite(state: ThermalState) -> tuple[float, float]:
    """(N_ab, N_ac) from the reduced pair states."""
    n_ab = negativity(reduced_ab(state), (2, 3), 1)
    n_ac = negativity(reduced_ac(state), (2, 2), 1)
    return n_ab, n_ac


def negativity_tripartite(state: ThermalState) -> tuple[float, float, float, float]:
    """One-vs-rest negativities (N_a_bc, N_b_ac, N_c_ab) and their geometric
    mean N_abc, computed from the full 12x12 partial transposes."""
    n_a = negativity(state.rho, TRIMER_DIMS, 0)
    n_b = negativity(state.rho, TRIMER_DIMS, 1)
    n_c = negativity(state.rho, TRIMER_DIMS, 2)
    if n_a == 0.0 or n_b == 0.0 or n_c == 0.0:
        n_abc = 0.0
    else:
        n_abc = (n_a * n_b * n_c) ** (1.0 / 3.0)
    return n_a, n_b, n_c, n_abc


@dataclass(frozen=True)
class NegativityReport:
    n_ab: float
    n_ac: float
    n_a_bc: float
    n_b_ac: float
    n_c_ab: float
    n_abc: float


def negativity_report(state: ThermalState) -> NegativityReport:
    n_ab, n_ac = negativity_bipartite(state)
    n_a, n_b, n_c, n_abc = negativity_tripartite(state)
    return NegativityReport(n_ab, n_ac, n_a, n_b, n_c, n_abc)


def _two_by_two(d1: float, d2: float, off: float) -> tuple[float, float]:
    s = d1 + d2
    r = math.hypot(d1 - d2, 2 * off)
    return (s + r) / 2, (s - r) / 2


def ab_transpose_eigs_closed(params: TrimerParams, temperature: float) -> np.ndarray:
    """The six closed-form eigenvalues of the partially transposed (a, b)
    pair state, expressed through the analytic density-matrix elements."""
    r = density_elements_closed(params, temperature)
    lam1 = r[1, 1] + r[7, 7]
    lam2 = r[4, 4] + r[10, 10]
    lam3, lam4 = _two_by_two(r[0, 0] + r[6, 6], r[3, 3] + r[9, 9], r[1, 2] + r[7, 8])
    lam5, lam6 = _two_by_two(r[2, 2] + r[8, 8], r[5, 5] + r[11, 11], r[9, 10] + r[3, 4])
    return np.array([lam1, lam2, lam3, lam4, lam5, lam6])


def ac_transpose_eigs_closed(params: TrimerParams, temperature: float) -> np.ndarray:
    """The four closed-form eigenvalues of the partially transposed corner
    pair state."""
    r = density_elements_closed(params, temperature)
    lam1 = r[1, 1] + r[3, 3] + r[5, 5]
    lam2 = r[6, 6] + r[8, 8] + r[10, 10]
    lam3, lam4 = _two_by_two(
        r[0, 0] + r[2, 2] + r[4, 4],
        r[7, 7] + r[9, 9] + r[11, 11],
        r[1, 6] + r[3, 8] + r[5, 10],
    )
    return np.array([lam1, lam2, lam3, lam4])


QUANTITIES: dict[str, Callable[[ThermalState], float]] = {
    "n_ab": lambda s: negativity_bipartite(s)[0],
    "n_ac": lambda s: negativity_bipartite(s)[1],
    "n_abc": lambda s: negativity_tripartite(s)[3],
}


@dataclass(frozen=True)
class ThresholdResult:
    """Temperature structure of a vanishing quantity.

    ``windows`` lists the (T_low, T_high) intervals on which the quantity is
    positive within the scanned range; ``threshold`` is the highest vanishing
    temperature.  A nonzero lower endpoint of the first window signals
    reentrant behaviour.
    """

    quantity: str
    windows: tuple[tuple[float, float], ...]

    @property
    def threshold(self) -> float:
        return self.windows[-1][1]

    @property
    def reentrant(self) -> bool:
        return self.windows[0][0] > 0.0


def threshold_temperature(
    params: TrimerParams,
    quantity: str,
    *,
    t_max: float = 4.0,
    scan_points: int = 400,
    tol: float = 1e-4,
) -> ThresholdResult:
    """Locate where ``quantity`` (one of n_ab, n_ac, n_abc) reaches zero.

    Scans (0, t_max] on a uniform grid, then bisects every sign change of
    (quantity > 0) to ``tol * J``.  Raises ``ValueError`` if the quantity is
    identically zero on the scanned range.
    """
    try:
        func = QUANTITIES[quantity]
    except KeyError:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {sorted(QUANTITIES)}")

    def positive(t: float) -> bool:
        return func(thermal_state(params, t)) > 0.0

    ts = np.linspace(t_max / scan_points, t_max, scan_points)
    flags = [positive(t) for t in ts]
    if not any(flags):
        raise ValueError(f"{quantity} is zero on the whole scanned range (0, {t_max}]")

    def bisect(lo: float, hi: float, want_positive_low: bool) -> float:
        # invariant: positivity differs between lo and hi
        for _ in range(200):
            if hi - lo <= tol * params.J:
                break
            mid = (lo + hi) / 2
            if positive(mid) == want_positive_low:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    windows: list[tuple[float, float]] = []
    start: float | None = None
    prev_t = 0.0
    prev_flag = func(thermal_state(params, 0.0)) > 0.0
    if prev_flag:
        start = 0.0
    for t, flag in zip(ts, flags):
        if flag and not prev_flag:
            start = bisect(prev_t, t, want_positive_low=False)
        elif prev_flag and not flag and start is not None:
            windows.append((start, bisect(prev_t, t, want_positive_low=True)))
            start = None
        prev_t, prev_flag = t, flag
    if start is not None:
        windows.append((start, math.inf))
    return ThresholdResult(quantity, tuple(windows))
