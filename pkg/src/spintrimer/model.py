"""Mixed spin-(1/2, 1, 1/2) Heisenberg trimer: Hamiltonian, analytic spectrum,
ground-state phase diagram and zero-temperature magnetization.

The cluster is a linear a-b-c arrangement (spin-1/2, spin-1, spin-1/2) with
isotropic antiferromagnetic exchange J between neighbouring sites, a
single-ion anisotropy D on the central spin-1 site and a Zeeman energy
h = g*mu_B*B coupling to the total S^z:

    H = J (s_a . S_b + S_b . s_c) + D (S_b^z)^2 - h (s_a^z + S_b^z + s_c^z)

All twelve eigenpairs are available in closed form.  The canonical ordering
of the analytic eigenbasis used across this package is::

    index  state                                              S_T^z  energy
    0      (|d 0 u> - |u 0 d>)/sqrt2                            0    0
    1      (|d 1 d> - |u -1 u>)/sqrt2                           0    D - J
    2      (|d 1 u> - |u 1 d>)/sqrt2                            1    D - h
    3      (|d -1 u> - |u -1 d>)/sqrt2                         -1    D + h
    4      a (|u 1 d> + |d 1 u>) + b |u 0 u>                    1    D/2 - h - r1
    5      c (|u 1 d> + |d 1 u>) + d |u 0 u>                    1    D/2 - h + r1
    6      a (|u -1 d> + |d -1 u>) + b |d 0 d>                 -1    D/2 + h - r1
    7      c (|u -1 d> + |d -1 u>) + d |d 0 d>                 -1    D/2 + h + r1
    8      e (|u 0 d> + |d 0 u>) + f (|u -1 u> + |d 1 d>)       0    (D-J)/2 - r2
    9      g (|u 0 d> + |d 0 u>) + h (|u -1 u> + |d 1 d>)       0    (D-J)/2 + r2
    10     |u 1 u>                                              2    D + J - 2h
    11     |d -1 d>                                            -2    D + J + 2h

with r1 = sqrt(D^2 + 4 J^2)/2 and r2 = sqrt((D-J)^2 + 8 J^2)/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import TRIMER_DIMS, eig_hermitian, site_operator, spin_ladder

DIM = 12

#: Composite basis index of |m_a, m_b, m_c> with a slowest, c fastest.
#: up=0/down=1 on the half-spins, +1=0/0=1/-1=2 on the central spin.
BASIS_LABELS = tuple(
    (a, b, c) for a in ("u", "d") for b in ("+1", "0", "-1") for c in ("u", "d")
)

#: Total S^z of each basis state, in composite-index order.
BASIS_SZ = np.array([2, 1, 1, 0, 0, -1, 1, 0, 0, -1, -1, -2], dtype=float)

#: Total S^z of each analytic eigenstate, in canonical order.
EIGEN_SZ = np.array([0, 0, 1, -1, 1, 1, -1, -1, 0, 0, 2, -2], dtype=float)


@dataclass(frozen=True)
class TrimerParams:
    """Couplings of the trimer in a common energy unit: exchange J > 0,
    single-ion anisotropy D, Zeeman energy h = g*mu_B*B."""

    J: float = 1.0
    D: float = 0.0
    h: float = 0.0

    def __post_init__(self) -> None:
        if not (self.J > 0 and math.isfinite(self.J)):
            raise ValueError("exchange coupling J must be positive and finite")
        if not (math.isfinite(self.D) and math.isfinite(self.h)):
            raise ValueError("D and h must be finite")


@dataclass(frozen=True)
class Amplitudes:
    """Normalised eigenvector amplitudes of the four mixed sectors.

    (a, b) and (c, d) are the lower/upper branch of the S_T^z = +-1 doublet
    sectors, (e, f) and (g_amp, h_amp) the lower/upper branch of the
    symmetric S_T^z = 0 sector.  They satisfy 2a^2 + b^2 = 2c^2 + d^2 = 1 and
    2e^2 + 2f^2 = 2 g_amp^2 + 2 h_amp^2 = 1.
    """

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    g_amp: float
    h_amp: float


def amplitudes(params: TrimerParams) -> Amplitudes:
    """Closed-form eigenvector amplitudes (field independent)."""
    J, D = params.J, params.D
    r1 = math.sqrt(J * J + (D / 2) ** 2)
    xm = D / 2 - r1
    xp = D / 2 + r1
    a = xm / math.sqrt(2 * J * J + 2 * xm * xm)
    b = J / math.sqrt(J * J + xm * xm)
    c = xp / math.sqrt(2 * J * J + 2 * xp * xp)
    d = J / math.sqrt(J * J + xp * xp)
    r2 = math.sqrt(2 * J * J + ((D - J) / 2) ** 2)
    ym = (D - J) / 2 - r2
    yp = (D - J) / 2 + r2
    e = J / math.sqrt(2 * J * J + ym * ym)
    f = ym / math.sqrt(4 * J * J + 2 * ym * ym)
    g_amp = J / math.sqrt(2 * J * J + yp * yp)
    h_amp = yp / math.sqrt(4 * J * J + 2 * yp * yp)
    return Amplitudes(a, b, c, d, e, f, g_amp, h_amp)


def energies_closed_form(params: TrimerParams) -> np.ndarray:
    """The twelve eigenenergies in canonical order."""
    J, D, h = params.J, params.D, params.h
    r1 = math.sqrt(D * D + 4 * J * J) / 2
    r2 = math.sqrt((D - J) ** 2 + 8 * J * J) / 2
    return np.array(
        [
            0.0,
            D - J,
            D - h,
            D + h,
            D / 2 - h - r1,
            D / 2 - h + r1,
            D / 2 + h - r1,
            D / 2 + h + r1,
            (D - J) / 2 - r2,
            (D - J) / 2 + r2,
            D + J - 2 * h,
            D + J + 2 * h,
        ]
    )


@dataclass(frozen=True)
class SpectralDecomposition:
    """Analytic spectrum: energies, total-S^z labels, and eigenvectors
    (column i of ``vectors`` is eigenstate i in canonical order)."""

    params: TrimerParams
    energies: np.ndarray
    total_sz: np.ndarray
    vectors: np.ndarray

    def eigenstate(self, i: int) -> np.ndarray:
        return self.vectors[:, i].copy()


_SQ2 = 1.0 / math.sqrt(2.0)

# (composite basis index, amplitude slot) patterns of the analytic
# eigenvectors; slots refer to (p, m) = +-1/sqrt2, amplitude names otherwise.
_STATE_PATTERNS = (
    ((8, "p"), (3, "m")),
    ((7, "p"), (4, "m")),
    ((6, "p"), (1, "m")),
    ((10, "p"), (5, "m")),
    ((1, "a"), (6, "a"), (2, "b")),
    ((1, "c"), (6, "c"), (2, "d")),
    ((5, "a"), (10, "a"), (9, "b")),
    ((5, "c"), (10, "c"), (9, "d")),
    ((3, "e"), (8, "e"), (4, "f"), (7, "f")),
    ((3, "g_amp"), (8, "g_amp"), (4, "h_amp"), (7, "h_amp")),
    ((0, "one"),),
    ((11, "one"),),
)


@lru_cache(maxsize=4096)
def _spectrum_cached(params: TrimerParams) -> SpectralDecomposition:
    amp = amplitudes(params)
    slots = {
        "p": _SQ2,
        "m": -_SQ2,
        "one": 1.0,
        "a": amp.a,
        "b": amp.b,
        "c": amp.c,
        "d": amp.d,
        "e": amp.e,
        "f": amp.f,
        "g_amp": amp.g_amp,
        "h_amp": amp.h_amp,
    }
    vectors = np.zeros((DIM, DIM))
    for i, pattern in enumerate(_STATE_PATTERNS):
        for idx, slot in pattern:
            vectors[idx, i] = slots[slot]
    energies = energies_closed_form(params)
    energies.setflags(write=False)
    vectors.setflags(write=False)
    return SpectralDecomposition(params, energies, EIGEN_SZ, vectors)


def spectrum_closed_form(params: TrimerParams) -> SpectralDecomposition:
    """Closed-form eigenpairs of the trimer Hamiltonian."""
    return _spectrum_cached(params)


@lru_cache(maxsize=1)
def trimer_site_operators() -> dict[str, np.ndarray]:
    """Real 12x12 matrices of the site spin components and collective sums."""
    half_p, half_m, half_z = spin_ladder(0.5)
    one_p, one_m, one_z = spin_ladder(1.0)
    ops = {}
    for name, (sp, sm, sz) in (("a", (half_p, half_m, half_z)),
                               ("b", (one_p, one_m, one_z)),
                               ("c", (half_p, half_m, half_z))):
        site = "abc".index(name)
        ops[f"{name}p"] = site_operator(sp, site, TRIMER_DIMS)
        ops[f"{name}m"] = site_operator(sm, site, TRIMER_DIMS)
        ops[f"{name}z"] = site_operator(sz, site, TRIMER_DIMS)
        ops[f"{name}x"] = (ops[f"{name}p"] + ops[f"{name}m"]) / 2
    ops["jz"] = ops["az"] + ops["bz"] + ops["cz"]
    ops["jp"] = ops["ap"] + ops["bp"] + ops["cp"]
    ops["jm"] = ops["am"] + ops["bm"] + ops["cm"]
    for v in ops.values():
        v.setflags(write=False)
    return ops


def build_hamiltonian(params: TrimerParams) -> np.ndarray:
    """Assemble the 12x12 Hamiltonian matrix (real symmetric) in the
    composite basis."""
    o = trimer_site_operators()
    J, D, h = params.J, params.D, params.h

    def dot(u: str, v: str) -> np.ndarray:
        return (
            o[f"{u}z"] @ o[f"{v}z"]
            + 0.5 * (o[f"{u}p"] @ o[f"{v}m"] + o[f"{u}m"] @ o[f"{v}p"])
        )

    return J * (dot("a", "b") + dot("b", "c")) + D * o["bz"] @ o["bz"] - h * o["jz"]


def diagonalize_numeric(params: TrimerParams) -> tuple[np.ndarray, np.ndarray]:
    """Numerically diagonalise the assembled Hamiltonian (ascending order).

    Independent cross-check of :func:`spectrum_closed_form`.
    """
    return eig_hermitian(build_hamiltonian(params))


class Phase(enum.Enum):
    """Zero-temperature phases of the trimer for h >= 0."""

    SINGLET = "singlet"  # entangled S_T^z = 0 ground state, zero plateau
    HALF_PLATEAU = "half_plateau"  # S_T^z = 1 doublet-sector ground state
    SATURATED = "saturated"  # fully polarised product state


@dataclass(frozen=True)
class GroundStatePhase:
    """Ground-state label; two members when the parameters sit on a boundary."""

    members: tuple[Phase, ...]

    @property
    def is_boundary(self) -> bool:
        return len(self.members) > 1

    @property
    def phase(self) -> Phase:
        if self.is_boundary:
            raise ValueError(f"degenerate ground state on boundary {self.members}")
        return self.members[0]


def boundary_singlet_half(params: TrimerParams) -> float:
    """Critical Zeeman energy of the singlet / half-plateau transition."""
    J, D = params.J, params.D
    return J / 2 + (math.sqrt((D - J) ** 2 + 8 * J * J) - math.sqrt(D * D + 4 * J * J)) / 2


def boundary_half_saturated(params: TrimerParams) -> float:
    """Critical Zeeman energy of the half-plateau / saturation transition."""
    J, D = params.J, params.D
    return J + D / 2 + math.sqrt(D * D + 4 * J * J) / 2


_BOUNDARY_TOL = 1e-12


def ground_state(params: TrimerParams) -> GroundStatePhase:
    """Classify the zero-temperature phase from the analytic boundaries.

    Field reversal maps h -> -h onto the mirrored eigenstates, so the phase
    is classified by |h|.  Within ``1e-12 * J`` of a boundary both adjacent
    phases are reported.
    """
    h = abs(params.h)
    tol = _BOUNDARY_TOL * params.J
    h1 = boundary_singlet_half(params)
    h2 = boundary_half_saturated(params)
    if abs(h - h1) <= tol:
        return GroundStatePhase((Phase.SINGLET, Phase.HALF_PLATEAU))
    if abs(h - h2) <= tol:
        return GroundStatePhase((Phase.HALF_PLATEAU, Phase.SATURATED))
    if h < h1:
        return GroundStatePhase((Phase.SINGLET,))
    if h < h2:
        return GroundStatePhase((Phase.HALF_PLATEAU,))
    return GroundStatePhase((Phase.SATURATED,))


_PHASE_FRACTION = {
    Phase.SINGLET: 0.0,
    Phase.HALF_PLATEAU: 0.5,
    Phase.SATURATED: 1.0,
}


def zero_T_magnetization(params: TrimerParams) -> float:
    """Zero-temperature |M|/M_s plateau value (0, 1/2 or 1).

    Raises ``ValueError`` on a phase boundary, where the ground state is a
    degenerate mixture.
    """
    return _PHASE_FRACTION[ground_state(params).phase]
