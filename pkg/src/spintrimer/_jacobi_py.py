"""Pure-Python twin of the compiled cyclic-Jacobi kernel.

Same algorithm and rotation order as ``_core.jacobi_eigh``, written with
plain Python loops so the package works without the compiled extension.
"""

from __future__ import annotations

import math

import numpy as np

_MAX_SWEEPS = 64


def jacobi_eigh(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a real symmetric matrix."""
    work = np.array(a, dtype=np.float64, copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError("jacobi_eigh expects a square matrix")
    n = work.shape[0]
    # Lists of floats are markedly faster than elementwise ndarray access here.
    m = [list(map(float, row)) for row in work]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    if n > 1:
        _sweeps(m, v, n)
    w = np.array([m[i][i] for i in range(n)])
    order = np.argsort(w, kind="stable")
    vecs = np.array(v)[:, order]
    return w[order], np.ascontiguousarray(vecs)


def _sweeps(a: list[list[float]], v: list[list[float]], n: int) -> None:
    for _ in range(_MAX_SWEEPS):
        off = 0.0
        total = 0.0
        for p in range(n):
            total += a[p][p] * a[p][p]
            for q in range(p + 1, n):
                off += 2.0 * a[p][q] * a[p][q]
        total += off
        if total == 0.0 or off <= 1e-30 * total:
            return
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                app = a[p][p]
                aqq = a[q][q]
                if abs(apq) <= 1e-18 * (abs(app) + abs(aqq)):
                    a[p][q] = 0.0
                    a[q][p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if abs(tau) > 1e10:
                    t = 0.5 / tau
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i][p]
                        aiq = a[i][q]
                        a[i][p] = aip * c - aiq * s
                        a[p][i] = a[i][p]
                        a[i][q] = aiq * c + aip * s
                        a[q][i] = a[i][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = 0.0
                a[q][p] = 0.0
                for i in range(n):
                    vip = v[i][p]
                    viq = v[i][q]
                    v[i][p] = vip * c - viq * s
                    v[i][q] = viq * c + vip * s
    raise RuntimeError("Jacobi eigensolver did not converge")
