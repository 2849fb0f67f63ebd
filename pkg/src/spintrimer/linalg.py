"""Dense linear algebra for small spin clusters.

Spin operator matrices, Kronecker products, partial trace / partial
transpose over a tensor factorisation, and a Hermitian eigensolver built on
the cyclic-Jacobi kernel.  Everything operates on plain numpy arrays; a
density matrix is an ordinary (d, d) array whose invariants (unit trace,
positivity, hermiticity) are enforced by the producing functions and by the
test suite rather than by a wrapper type.

Basis convention used throughout the package: for local dimensions
``dims = (d0, d1, ...)`` the composite index is ``i0*d1*d2*... + i1*d2*... + ...``
(first site slowest), and each local basis is ordered by descending magnetic
quantum number (spin-1/2: up, down; spin-1: +1, 0, -1).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels

#: Local dimensions of the spin-(1/2, 1, 1/2) trimer in site order a, b, c.
TRIMER_DIMS: tuple[int, int, int] = (2, 3, 2)

_HERMITICITY_TOL = 1e-10


def spin_operators(s: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (Sx, Sy, Sz) for spin quantum number ``s``.

    Sz is diagonal with entries s, s-1, ..., -s; the trio satisfies the
    cyclic commutation relations [Sx, Sy] = i Sz.  Only the spin values
    appearing in the trimer (1/2 and 1) are accepted.
    """
    if not np.isclose(s, 0.5) and not np.isclose(s, 1.0):
        raise ValueError(f"unsupported spin value {s!r}: expected 1/2 or 1")
    d = int(round(2 * s + 1))
    m = s - np.arange(d)
    sz = np.diag(m).astype(complex)
    sp = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        sp[k - 1, k] = np.sqrt(s * (s + 1) - m[k] * (m[k] + 1))
    sm = sp.conj().T
    sx = (sp + sm) / 2
    sy = (sp - sm) / 2j
    return sx, sy, sz


def spin_ladder(s: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (S+, S-, Sz); real matrices, convenient for real Hamiltonians."""
    sx, sy, sz = spin_operators(s)
    return (sx + 1j * sy).real, (sx - 1j * sy).real, sz.real


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product (dimensions multiply)."""
    return np.kron(a, b)


def kron_all(ops: Iterable[np.ndarray]) -> np.ndarray:
    out = None
    for op in ops:
        out = op if out is None else np.kron(out, op)
    if out is None:
        raise ValueError("kron_all needs at least one operator")
    return out


def site_operator(op: np.ndarray, site: int, dims: Sequence[int]) -> np.ndarray:
    """Embed a single-site operator into the full tensor-product space."""
    _check_site(site, dims)
    factors = [np.eye(d, dtype=op.dtype) for d in dims]
    factors[site] = op
    return kron_all(factors)


def _check_site(site: int, dims: Sequence[int]) -> None:
    if not 0 <= site < len(dims):
        raise ValueError(f"site {site} out of range for dims {tuple(dims)}")


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> None:
    d = int(np.prod(dims))
    if m.ndim != 2 or m.shape != (d, d):
        raise ValueError(f"matrix shape {m.shape} inconsistent with dims {tuple(dims)}")


def partial_trace(m: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every site not listed in ``keep``; preserves trace and hermiticity."""
    m = np.asarray(m)
    _check_dims(m, dims)
    keep = sorted(set(keep))
    for site in keep:
        _check_site(site, dims)
    n = len(dims)
    t = m.reshape(tuple(dims) * 2)
    traced = 0
    for site in range(n):
        if site in keep:
            continue
        axis = site - traced
        t = np.trace(t, axis1=axis, axis2=axis + n - traced)
        traced += 1
    d_keep = int(np.prod([dims[s] for s in keep])) if keep else 1
    return t.reshape(d_keep, d_keep)


def partial_transpose(m: np.ndarray, dims: Sequence[int], site: int) -> np.ndarray:
    """Transpose the indices of one site; involutive and trace preserving."""
    m = np.asarray(m)
    _check_dims(m, dims)
    _check_site(site, dims)
    n = len(dims)
    t = m.reshape(tuple(dims) * 2)
    t = np.swapaxes(t, site, site + n)
    return np.ascontiguousarray(t.reshape(m.shape))


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of M from its conjugate transpose."""
    m = np.asarray(m)
    return float(np.abs(m - m.conj().T).max()) if m.size else 0.0


def eig_hermitian(
    m: np.ndarray, *, check: bool = True, tol: float = _HERMITICITY_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix.

    Real symmetric input is solved directly by the Jacobi kernel; complex
    Hermitian input goes through the standard real 2n x 2n embedding
    [[X, -Y], [Y, X]] of M = X + iY.  Raises ``ValueError`` if the input is
    not Hermitian to within ``tol`` relative to its magnitude.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("eig_hermitian expects a square matrix")
    scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
    if check and hermiticity_defect(m) > tol * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    if not np.iscomplexobj(m) or not np.abs(m.imag).any():
        sym = 0.5 * (m.real + m.real.T)
        return kernels.jacobi_eigh(sym)
    return _eig_hermitian_complex(m)


def _eig_hermitian_complex(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = m.shape[0]
    x = 0.5 * (m.real + m.real.T)
    y = 0.5 * (m.imag - m.imag.T)
    big = np.block([[x, -y], [y, x]])
    w2, v2 = kernels.jacobi_eigh(big)
    # Every eigenvalue of M appears twice in the embedding; the real column
    # (u; v) maps to the complex eigenvector u + iv, and its J-rotated twin
    # spans the same complex direction.
    w = 0.5 * (w2[0::2] + w2[1::2])
    vecs = np.empty((n, n), dtype=complex)
    scale = max(1.0, float(np.abs(w2).max()))
    ctol = 1e-12 * scale
    out = 0
    i = 0
    while i < 2 * n:
        j = i + 1
        while j < 2 * n and w2[j] - w2[j - 1] <= ctol:
            j += 1
        m_count = (j - i) // 2
        candidates = v2[:n, i:j] + 1j * v2[n:, i:j]
        accepted = _gram_schmidt(candidates, m_count)
        vecs[:, out : out + m_count] = accepted
        out += m_count
        i = j
    if out != n:
        raise RuntimeError("complex eigenvector extraction failed")
    return w, vecs


def _gram_schmidt(candidates: np.ndarray, count: int) -> np.ndarray:
    """Extract ``count`` orthonormal columns from the candidate span."""
    picked: list[np.ndarray] = []
    for k in range(candidates.shape[1]):
        z = candidates[:, k].copy()
        for _ in range(2):  # re-orthogonalise for stability
            for u in picked:
                z -= (u.conj() @ z) * u
        norm = np.linalg.norm(z)
        if norm > 1e-8:
            picked.append(z / norm)
        if len(picked) == count:
            break
    if len(picked) != count:
        raise RuntimeError("degenerate eigenspace extraction failed")
    return np.column_stack(picked)
