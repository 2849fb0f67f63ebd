#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure-Python twin.

Times the raw eigensolver on batches of random symmetric matrices and a
representative negativity sweep through the library, then prints a small
table.  numpy.linalg.eigh is included as a reference point.

Run:  python benchmarks/bench_kernels.py [--points N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spintrimer import _jacobi_py

try:
    from spintrimer import _core
except ImportError:
    _core = None


def time_eigensolver(solver, matrices) -> float:
    start = time.perf_counter()
    for m in matrices:
        solver(m)
    return (time.perf_counter() - start) / len(matrices)


def time_sweep(points: int) -> float:
    from spintrimer import TrimerParams, negativity_report, thermal_state

    fields = np.linspace(0.0, 3.0, points)
    start = time.perf_counter()
    for h in fields:
        state = thermal_state(TrimerParams(J=1.0, D=0.05, h=float(h)), 0.25)
        negativity_report(state)
    return (time.perf_counter() - start) / points


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=300,
                        help="matrices per eigensolver batch / sweep points")
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    rows = []
    for n in (4, 6, 12, 24):
        mats = [m + m.T for m in rng.normal(size=(args.points, n, n))]
        t_py = time_eigensolver(_jacobi_py.jacobi_eigh, mats)
        t_np = time_eigensolver(np.linalg.eigh, mats)
        t_cy = time_eigensolver(_core.jacobi_eigh, mats) if _core else float("nan")
        rows.append((f"jacobi_eigh {n}x{n}", t_cy, t_py, t_np))

    print(f"{'kernel':<22}{'cython':>12}{'python':>12}{'numpy':>12}   (seconds/call)")
    for name, t_cy, t_py, t_np in rows:
        print(f"{name:<22}{t_cy:>12.3e}{t_py:>12.3e}{t_np:>12.3e}")
    if _core:
        speedups = [t_py / t_cy for _, t_cy, t_py, _ in rows]
        print(f"\ncython speedup over pure python: "
              f"{min(speedups):.0f}x .. {max(speedups):.0f}x")
    else:
        print("\ncompiled extension not built; showing pure-Python lane only")

    from spintrimer import kernels

    t_point = time_sweep(args.points)
    print(f"\nnegativity sweep ({kernels.BACKEND} backend): "
          f"{t_point * 1e3:.3f} ms/grid point")


if __name__ == "__main__":
    main()
