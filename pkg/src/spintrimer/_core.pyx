# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic-Jacobi eigensolver for small dense symmetric matrices.

This is the hot kernel of parameter sweeps (thousands of 4x4 .. 24x24
eigendecompositions).  The pure-Python twin lives in ``_jacobi_py``; both
expose the same ``jacobi_eigh`` contract and are selected in ``kernels``.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


cdef int _sweeps(double[:, ::1] a, double[:, ::1] v, Py_ssize_t n) nogil:
    cdef Py_ssize_t p, q, i, sweep
    cdef double off, total, apq, app, aqq, tau, t, c, s
    cdef double aip, aiq, vip, viq
    for sweep in range(64):
        off = 0.0
        total = 0.0
        for p in range(n):
            total += a[p, p] * a[p, p]
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        total += off
        if total == 0.0 or off <= 1e-30 * total:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                # Rotation is skipped once the entry is negligible at
                # working precision relative to its diagonal neighbours.
                if fabs(apq) <= 1e-18 * (fabs(app) + fabs(aqq)):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if fabs(tau) > 1e10:
                    t = 0.5 / tau
                elif tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip * c - aiq * s
                        a[p, i] = a[i, p]
                        a[i, q] = aiq * c + aip * s
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = vip * c - viq * s
                    v[i, q] = viq * c + vip * s
    return 1


def jacobi_eigh(a):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a real symmetric matrix.

    Cyclic Jacobi sweeps; deterministic rotation order, converges
    quadratically for the small dimensions used here.
    """
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError("jacobi_eigh expects a square matrix")
    cdef Py_ssize_t n = work.shape[0]
    vecs = np.eye(n, dtype=np.float64)
    if n > 1:
        if _sweeps(work, vecs, n):
            raise RuntimeError("Jacobi eigensolver did not converge")
    w = np.diagonal(work).copy()
    order = np.argsort(w, kind="stable")
    return w[order], np.ascontiguousarray(vecs[:, order])
