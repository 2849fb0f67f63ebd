"""Spin coherent states and the Husimi Q-function on the Bloch sphere.

The reference direction state is the fully polarised basis state
|up, +1, up> (total S^z = 2).  A coherent state pointing along
(theta, phi) is obtained by the collective rotation

    |alpha(theta, phi)> = exp[ (theta/2) (J- e^{i phi} - J+ e^{-i phi}) ] |up,+1,up>

and the Q-function of a state rho is Q(theta, phi) = <alpha|rho|alpha> / pi,
bounded by 0 <= Q <= 1/pi.  The equivalent complex label
alpha = sin(theta) cos(phi) + i sin(theta) sin(phi) is kept as metadata only.

Because coherent states are global rotations of a product of local
highest-weight states, they live entirely inside the five-dimensional
total-spin-2 multiplet; the sphere integral of Q therefore measures the
weight of rho in that multiplet: integral Q dOmega = (4/5) Tr(rho P2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import eig_hermitian
from .model import DIM, trimer_site_operators
from .thermo import ThermalState

Q_MAX = 1.0 / math.pi

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

#: Composite-basis index of the fully polarised reference state |up,+1,up>.
HIGHEST_WEIGHT_INDEX = 0


def alpha_parameter(theta: float, phi: float) -> complex:
    """Complex Bloch-sphere label of the coherent state (metadata only)."""
    return math.sin(theta) * math.cos(phi) + 1j * math.sin(theta) * math.sin(phi)


def rotation_generator(theta: float, phi: float) -> np.ndarray:
    """Anti-Hermitian generator (theta/2)(J- e^{i phi} - J+ e^{-i phi})."""
    ops = trimer_site_operators()
    return (theta / 2) * (
        ops["jm"] * np.exp(1j * phi) - ops["jp"] * np.exp(-1j * phi)
    )


def expm_antihermitian(gen: np.ndarray) -> np.ndarray:
    """exp(G) for anti-Hermitian G via eigendecomposition of iG."""
    w, v = eig_hermitian(1j * gen)
    return (v * np.exp(-1j * w)) @ v.conj().T


def coherent_state(theta: float, phi: float) -> np.ndarray:
    """Unit-norm coherent state vector pointing along (theta, phi)."""
    start = np.zeros(DIM, dtype=complex)
    start[HIGHEST_WEIGHT_INDEX] = 1.0
    return expm_antihermitian(rotation_generator(theta, phi)) @ start


def husimi_q(state: ThermalState, theta: float, phi: float) -> float:
    """Q(theta, phi) = <alpha|rho|alpha> / pi."""
    alpha = coherent_state(theta, phi)
    return float((alpha.conj() @ state.rho @ alpha).real / math.pi)


@dataclass(frozen=True)
class SphereGrid:
    """Q-function samples on a theta x phi product grid.

    ``values[i, j]`` is Q(thetas[i], phis[j]); theta spans [0, pi] inclusive,
    phi spans [0, 2 pi) with a periodic final step.
    """

    thetas: np.ndarray
    phis: np.ndarray
    values: np.ndarray


@lru_cache(maxsize=1)
def _jy_eigensystem() -> tuple[np.ndarray, np.ndarray]:
    ops = trimer_site_operators()
    jy = (ops["jp"] - ops["jm"]) / 2j
    w, v = eig_hermitian(jy)
    w.setflags(write=False)
    v.setflags(write=False)
    return w, v


def _coherent_state_fast(theta: float, phi: float) -> np.ndarray:
    # exp(G) factorises as exp(-i phi Jz) exp(-i theta Jy) exp(i phi Jz);
    # acting on the S^z = 2 reference state the last factor is the phase
    # e^{2 i phi}.  Identical to coherent_state up to rounding (tested).
    from .model import BASIS_SZ

    w, v = _jy_eigensystem()
    start = v.conj().T[:, HIGHEST_WEIGHT_INDEX]
    rotated = v @ (np.exp(-1j * theta * w) * start)
    return np.exp(2j * phi) * np.exp(-1j * phi * BASIS_SZ) * rotated


def husimi_grid(state: ThermalState, n_theta: int = 91, n_phi: int = 90) -> SphereGrid:
    """Evaluate Q on an inclusive theta grid and periodic phi grid."""
    if n_theta < 2 or n_phi < 1:
        raise ValueError("grid needs n_theta >= 2 and n_phi >= 1")
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.arange(n_phi) * 2 * math.pi / n_phi
    values = np.empty((n_theta, n_phi))
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            alpha = _coherent_state_fast(theta, phi)
            values[i, j] = (alpha.conj() @ state.rho @ alpha).real / math.pi
    return SphereGrid(thetas, phis, values)


def sphere_integral(grid: SphereGrid) -> float:
    """Integral of Q over the sphere (trapezoid in theta, periodic in phi)."""
    phi_mean = grid.values.mean(axis=1)
    return float(
        2 * math.pi * _trapezoid(phi_mean * np.sin(grid.thetas), grid.thetas)
    )


def directional_second_moments(grid: SphereGrid) -> tuple[float, float, float]:
    """Second moments (m_xx, m_yy, m_zz) of the Q distribution over the
    sphere directions n = (sin t cos p, sin t sin p, cos t), normalised by
    the Q integral.  Used to quantify transverse stretching vs polar
    concentration of the distribution."""
    st = np.sin(grid.thetas)[:, None]
    ct = np.cos(grid.thetas)[:, None]
    cp = np.cos(grid.phis)[None, :]
    sp = np.sin(grid.phis)[None, :]
    weight = grid.values * st  # sin(theta) measure
    dphi = 2 * math.pi / len(grid.phis)

    def integrate(f: np.ndarray) -> float:
        return float(_trapezoid((weight * f).sum(axis=1) * dphi, grid.thetas))

    total = integrate(np.ones_like(grid.values))
    if total <= 0:
        raise ValueError("Q distribution has no weight on the grid")
    mxx = integrate((st * cp) ** 2) / total
    myy = integrate((st * sp) ** 2) / total
    mzz = integrate(ct**2 * np.ones_like(cp)) / total
    return mxx, myy, mzz


@lru_cache(maxsize=1)
def spin2_projector() -> np.ndarray:
    """Projector onto the total-spin-2 multiplet (J.J eigenvalue 6)."""
    ops = trimer_site_operators()
    jx = (ops["jp"] + ops["jm"]) / 2
    jy2 = ((ops["jp"] - ops["jm"]) / 2j) @ ((ops["jp"] - ops["jm"]) / 2j)
    j_squared = (jx @ jx + jy2).real + ops["jz"] @ ops["jz"]
    w, v = eig_hermitian(j_squared)
    cols = v[:, np.abs(w - 6.0) < 1e-8]
    proj = cols @ cols.T
    proj.setflags(write=False)
    return proj
