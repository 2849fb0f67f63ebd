"""Independent brute-force reference implementations.

Everything here is deliberately written against numpy/scipy primitives and
explicit index loops, avoiding the package's own kernels, so that agreement
between the two routes is meaningful.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

DIMS = (2, 3, 2)


def _single_spin(s: float):
    d = int(round(2 * s + 1))
    m = s - np.arange(d)
    sz = np.diag(m).astype(complex)
    sp = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        sp[k - 1, k] = np.sqrt(s * (s + 1) - m[k] * (m[k] + 1))
    sx = (sp + sp.conj().T) / 2
    sy = (sp - sp.conj().T) / 2j
    return sx, sy, sz


def site_ops():
    """xyz spin components of the three sites as 12x12 complex matrices."""
    half = _single_spin(0.5)
    one = _single_spin(1.0)
    eye = [np.eye(d, dtype=complex) for d in DIMS]
    out = []
    for site, trio in ((0, half), (1, one), (2, half)):
        mats = []
        for comp in trio:
            factors = list(eye)
            factors[site] = comp
            mats.append(np.kron(np.kron(factors[0], factors[1]), factors[2]))
        out.append(mats)
    return out


def hamiltonian(J: float, D: float, h: float) -> np.ndarray:
    sa, sb, sc = site_ops()
    H = np.zeros((12, 12), dtype=complex)
    for k in range(3):
        H += J * (sa[k] @ sb[k] + sb[k] @ sc[k])
    H += D * sb[2] @ sb[2]
    H -= h * (sa[2] + sb[2] + sc[2])
    assert np.abs(H.imag).max() < 1e-14
    return H.real


def gibbs_rho(J: float, D: float, h: float, T: float) -> np.ndarray:
    """Thermal state via scipy's matrix exponential (ground-energy shifted)."""
    H = hamiltonian(J, D, h)
    e0 = scipy.linalg.eigvalsh(H).min()
    rho = scipy.linalg.expm(-(H - e0 * np.eye(12)) / T)
    return rho / np.trace(rho)


def partial_trace_loops(rho: np.ndarray, dims, keep) -> np.ndarray:
    """Partial trace by explicit summation over basis labels."""
    keep = tuple(sorted(keep))
    n = len(dims)
    drop = [s for s in range(n) if s not in keep]
    d_keep = int(np.prod([dims[s] for s in keep]))
    out = np.zeros((d_keep, d_keep), dtype=rho.dtype)

    def unravel(flat):
        labels = []
        for d in reversed(dims):
            labels.append(flat % d)
            flat //= d
        return tuple(reversed(labels))

    def ravel(labels, sites):
        flat = 0
        for s in sites:
            flat = flat * dims[s] + labels[s]
        return flat

    total = int(np.prod(dims))
    for i in range(total):
        li = unravel(i)
        for j in range(total):
            lj = unravel(j)
            if all(li[s] == lj[s] for s in drop):
                out[ravel(li, keep), ravel(lj, keep)] += rho[i, j]
    return out


def partial_transpose_loops(rho: np.ndarray, dims, site: int) -> np.ndarray:
    n = len(dims)
    total = int(np.prod(dims))
    out = np.zeros_like(rho)

    def unravel(flat):
        labels = []
        for d in reversed(dims):
            labels.append(flat % d)
            flat //= d
        return list(reversed(labels))

    def ravel(labels):
        flat = 0
        for s in range(n):
            flat = flat * dims[s] + labels[s]
        return flat

    for i in range(total):
        for j in range(total):
            li, lj = unravel(i), unravel(j)
            li[site], lj[site] = lj[site], li[site]
            out[ravel(li), ravel(lj)] = rho[i, j]
    return out


def negativity_ref(rho: np.ndarray, dims, site: int) -> float:
    eigs = np.linalg.eigvalsh(partial_transpose_loops(rho, dims, site))
    return float(sum(abs(x) for x in eigs if x < 0))


def expm_taylor(m: np.ndarray, terms: int = 20) -> np.ndarray:
    """Plain truncated Taylor series; accurate only for small ||m||."""
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ m / k
        out = out + term
    return out


def random_density_matrix(rng: np.random.Generator, dim: int = 12) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real
