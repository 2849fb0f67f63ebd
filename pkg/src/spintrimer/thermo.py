"""Thermodynamics of the trimer: partition function, Gibbs free energy,
magnetization and the thermal density matrix, all in closed form.

Units: energies in the same unit as J, temperatures with k_B = 1 (so the
inverse temperature is 1/T).  Exponentials are always evaluated relative to
the ground-state energy, which keeps everything finite down to T/J ~ 1e-4
and below; the numerically safe primitive is ``log_partition_function``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .model import (
    DIM,
    EIGEN_SZ,
    SpectralDecomposition,
    TrimerParams,
    energies_closed_form,
    spectrum_closed_form,
)

_DEGENERACY_TOL = 1e-12


def _log_2cosh(x: float) -> float:
    # log(2 cosh x) without overflow
    ax = abs(x)
    return ax + math.log1p(math.exp(-2.0 * ax))


def log_partition_function(params: TrimerParams, temperature: float) -> float:
    """log Z from the analytic six-term partition function.

    The six terms group the twelve Boltzmann weights by sector:
    1, 2cosh(bh)e^(-bD), e^(-b(D-J)), 2cosh(2bh)e^(-b(D+J)),
    4cosh(bh)cosh(b r1)e^(-bD/2) and 2cosh(b r2)e^(-b(D-J)/2), with
    r1 = sqrt(D^2+4J^2)/2, r2 = sqrt((D-J)^2+8J^2)/2 and b = 1/T.
    """
    if temperature <= 0:
        raise ValueError("partition function requires T > 0; use thermal_state for T = 0")
    J, D, h = params.J, params.D, params.h
    beta = 1.0 / temperature
    r1 = math.sqrt(D * D + 4 * J * J) / 2
    r2 = math.sqrt((D - J) ** 2 + 8 * J * J) / 2
    log_terms = np.array(
        [
            0.0,
            _log_2cosh(beta * h) - beta * D,
            -beta * (D - J),
            _log_2cosh(2 * beta * h) - beta * (D + J),
            _log_2cosh(beta * h) + _log_2cosh(beta * r1) - beta * D / 2,
            _log_2cosh(beta * r2) - beta * (D - J) / 2,
        ]
    )
    top = log_terms.max()
    return float(top + math.log(np.exp(log_terms - top).sum()))


def partition_function_closed(params: TrimerParams, temperature: float) -> float:
    """Z itself; overflows to inf for beta*|E_min| beyond ~700, in which case
    work with :func:`log_partition_function`."""
    return math.exp(log_partition_function(params, temperature))


def log_partition_function_eigensum(params: TrimerParams, temperature: float) -> float:
    """log Z as a plain Boltzmann sum over the twelve closed-form energies.

    Kept separate from the grouped analytic expression as a cross-check.
    """
    if temperature <= 0:
        raise ValueError("partition function requires T > 0")
    e = energies_closed_form(params)
    e0 = e.min()
    return float(-e0 / temperature + math.log(np.exp(-(e - e0) / temperature).sum()))


def gibbs_free_energy(params: TrimerParams, temperature: float) -> float:
    """G = -T log Z (k_B = 1)."""
    return -temperature * log_partition_function(params, temperature)


def boltzmann_weights(params: TrimerParams, temperature: float) -> np.ndarray:
    """Normalised populations of the twelve analytic eigenstates.

    At T = 0 the degenerate ground states share the weight equally, which is
    the correct T -> 0 limit including phase boundaries.
    """
    if temperature < 0:
        raise ValueError("temperature must be nonnegative")
    e = energies_closed_form(params)
    if temperature == 0:
        ground = e <= e.min() + _DEGENERACY_TOL * max(params.J, abs(e.min()))
        return ground / ground.sum()
    w = np.exp(-(e - e.min()) / temperature)
    return w / w.sum()


def magnetization(params: TrimerParams, temperature: float) -> float:
    """Thermal magnetization <S_T^z> in units of g*mu_B.

    Analytic Boltzmann average of the total-S^z quantum numbers; equals
    -dG/dB because every eigenenergy depends on the field linearly through
    its S_T^z.  The saturation value is 2, so M/M_s = magnetization/2.
    """
    if temperature <= 0:
        raise ValueError("magnetization requires T > 0; use zero_T_magnetization")
    return float(boltzmann_weights(params, temperature) @ EIGEN_SZ)


SATURATION_MAGNETIZATION = 2.0  # in units of g*mu_B


@dataclass(frozen=True)
class ThermalState:
    """Gibbs state of the trimer at one (params, T) point.

    ``rho`` is the 12x12 density matrix in the composite basis, built from
    the analytic spectral decomposition; T = 0 is an equal-weight mixture of
    the degenerate ground states.
    """

    params: TrimerParams
    temperature: float
    rho: np.ndarray
    weights: np.ndarray
    log_z: float  # nan at T = 0

    @property
    def z(self) -> float:
        return math.exp(self.log_z)

    @cached_property
    def spectrum(self) -> SpectralDecomposition:
        return spectrum_closed_form(self.params)


def thermal_state(params: TrimerParams, temperature: float) -> ThermalState:
    """Construct the thermal (T > 0) or ground-state (T = 0) density matrix."""
    spectrum = spectrum_closed_form(params)
    w = boltzmann_weights(params, temperature)
    rho = (spectrum.vectors * w) @ spectrum.vectors.T
    log_z = log_partition_function(params, temperature) if temperature > 0 else math.nan
    rho.setflags(write=False)
    return ThermalState(params, temperature, rho, w, log_z)


# Elementwise closed forms of the thermal density matrix: each nonzero
# entry is a fixed combination of eigenstate populations and amplitude
# products.  Entries are (row, col, ((population index, coefficient name), ...))
# with coefficient names resolved against the amplitude set; "half" = 1/2.
_ELEMENT_RECIPES = (
    (0, 0, ((10, "one"),)),
    (1, 1, ((2, "half"), (4, "a2"), (5, "c2"))),
    (1, 2, ((4, "ab"), (5, "cd"))),
    (1, 6, ((2, "mhalf"), (4, "a2"), (5, "c2"))),
    (2, 2, ((4, "b2"), (5, "d2"))),
    (3, 3, ((0, "half"), (8, "e2"), (9, "g2"))),
    (3, 4, ((8, "ef"), (9, "gh"))),
    (3, 8, ((0, "mhalf"), (8, "e2"), (9, "g2"))),
    (4, 4, ((1, "half"), (8, "f2"), (9, "h2"))),
    (4, 7, ((1, "mhalf"), (8, "f2"), (9, "h2"))),
    (5, 5, ((3, "half"), (6, "a2"), (7, "c2"))),
    (5, 9, ((6, "ab"), (7, "cd"))),
    (5, 10, ((3, "mhalf"), (6, "a2"), (7, "c2"))),
    (9, 9, ((6, "b2"), (7, "d2"))),
    (11, 11, ((11, "one"),)),
    # mirrored diagonal partners and the remaining symmetric off-diagonals
    (6, 6, ((2, "half"), (4, "a2"), (5, "c2"))),
    (2, 6, ((4, "ab"), (5, "cd"))),
    (8, 8, ((0, "half"), (8, "e2"), (9, "g2"))),
    (3, 7, ((8, "ef"), (9, "gh"))),
    (4, 8, ((8, "ef"), (9, "gh"))),
    (7, 8, ((8, "ef"), (9, "gh"))),
    (7, 7, ((1, "half"), (8, "f2"), (9, "h2"))),
    (10, 10, ((3, "half"), (6, "a2"), (7, "c2"))),
    (9, 10, ((6, "ab"), (7, "cd"))),
)


def density_elements_closed(params: TrimerParams, temperature: float) -> np.ndarray:
    """The 12x12 thermal density matrix from elementwise closed forms.

    Evaluates the analytic expressions for every structurally nonzero
    element (population-weighted amplitude products); serves as a cross-check
    of :func:`thermal_state`, which builds rho from the spectral form.
    """
    from .model import amplitudes

    if temperature <= 0:
        raise ValueError("closed-form elements are defined for T > 0")
    w = boltzmann_weights(params, temperature)
    amp = amplitudes(params)
    coeff = {
        "one": 1.0,
        "half": 0.5,
        "mhalf": -0.5,
        "a2": amp.a**2,
        "b2": amp.b**2,
        "c2": amp.c**2,
        "d2": amp.d**2,
        "e2": amp.e**2,
        "f2": amp.f**2,
        "g2": amp.g_amp**2,
        "h2": amp.h_amp**2,
        "ab": amp.a * amp.b,
        "cd": amp.c * amp.d,
        "ef": amp.e * amp.f,
        "gh": amp.g_amp * amp.h_amp,
    }
    rho = np.zeros((DIM, DIM))
    for row, col, terms in _ELEMENT_RECIPES:
        value = sum(w[i] * coeff[name] for i, name in terms)
        rho[row, col] = value
        rho[col, row] = value
    return rho
