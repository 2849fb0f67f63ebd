import numpy as np
import pytest

import oracles
from spintrimer.model import BASIS_SZ, TrimerParams
from spintrimer.squeezing import (
    L_PRIME,
    collective_operators,
    second_moments,
    squeezing_minimum_locus,
    squeezing_parameter,
    transverse_variance,
)
from spintrimer.thermo import ThermalState, thermal_state


def sample_states(rng, n, t_lo=0.05, t_hi=3.0):
    for _ in range(n):
        p = TrimerParams(J=1.0, D=float(rng.uniform(-1, 1)), h=float(rng.uniform(0, 3)))
        yield thermal_state(p, float(rng.uniform(t_lo, t_hi)))


def as_state(rho: np.ndarray) -> ThermalState:
    p = TrimerParams(J=1.0)
    return ThermalState(p, 1.0, rho, np.full(12, 1 / 12), 0.0)


class TestCollectiveOperators:
    def test_commutator(self):
        ops = collective_operators()
        comm = ops.jx @ ops.jy - ops.jy @ ops.jx
        assert np.abs(comm - 1j * ops.jz).max() < 1e-12

    def test_jz_diagonal_labels(self):
        ops = collective_operators()
        assert np.array_equal(np.diag(ops.jz), BASIS_SZ)
        assert np.abs(ops.jz - np.diag(np.diag(ops.jz))).max() == 0


class TestZeroMoments:
    def test_first_moments_and_z_correlators_vanish(self, rng):
        ops = collective_operators()
        for state in sample_states(rng, 20):
            for j in (ops.jx, ops.jy):
                assert abs(np.trace(state.rho @ j)) < 1e-12
                assert abs(np.trace(state.rho @ (j @ ops.jz))) < 1e-12
                assert abs(np.trace(state.rho @ (ops.jz @ j))) < 1e-12

    def test_transverse_anisotropy_vanishes_for_thermal_states(self, rng):
        ops = collective_operators()
        for state in sample_states(rng, 10):
            assert abs(np.trace(state.rho @ ops.jx2_minus_jy2)) < 1e-12
            assert abs(np.trace(state.rho @ ops.jxy_anticommutator)) < 1e-12


class TestTransverseVariance:
    def test_maximally_mixed_isotropic(self):
        state = thermal_state(TrimerParams(1.0, 0.3, 0.8), 1e9)
        values = [transverse_variance(state, th) for th in np.linspace(0, np.pi, 7)]
        assert max(values) - min(values) < 1e-9
        ops = collective_operators()
        jx2 = np.trace(state.rho @ ops.jx @ ops.jx).real
        assert abs(values[0] - jx2) < 1e-9

    def test_saturated_coherent_state_variance_one(self):
        state = thermal_state(TrimerParams(1.0, 0.05, 3.0), 0.0)
        for th in np.linspace(0, 2 * np.pi, 9):
            assert abs(transverse_variance(state, th) - 1.0) < 1e-12

    def test_grid_minimum_matches_closed_form(self, rng):
        thetas = np.arange(360) * np.pi / 360
        for state in sample_states(rng, 8):
            grid_min = min(transverse_variance(state, th) for th in thetas)
            # with L' = 4 the closed form equals the minimal variance
            assert abs(grid_min - squeezing_parameter(state)) < 1e-8


class TestSqueezingParameter:
    def test_maximally_mixed_value(self):
        # the true infinite-temperature limit of the implemented parameter:
        # <Jx^2 + Jy^2> = 28/12 at rho = I/12, giving xi^2 = 7/6
        state = as_state(np.eye(12) / 12)
        xi2 = squeezing_parameter(state)
        assert abs(xi2 - 7 / 6) < 1e-12
        assert abs(xi2 - 5 / 6) > 0.3  # distinctly not 5/6

    def test_saturated_state_is_coherent(self):
        state = thermal_state(TrimerParams(1.0, 0.05, 3.0), 0.0)
        assert abs(squeezing_parameter(state) - 1.0) < 1e-12

    def test_half_plateau_pure_state_value(self):
        state = thermal_state(TrimerParams(1.0, 0.05, 1.5), 1e-4)
        assert abs(squeezing_parameter(state) - 0.500312354) < 1e-6  # frozen

    def test_singlet_state_strongly_squeezed(self):
        state = thermal_state(TrimerParams(1.0, 0.05, 0.0), 1e-4)
        assert squeezing_parameter(state) < 1e-3

    def test_positive_and_continuous_in_temperature(self):
        p = TrimerParams(1.0, 0.05, 0.7)
        ts = np.linspace(0.02, 3.0, 120)
        values = [squeezing_parameter(thermal_state(p, t)) for t in ts]
        assert min(values) > 0
        steps = np.abs(np.diff(values))
        assert steps.max() < 0.05

    def test_rotation_invariance_about_z(self, rng):
        ops = collective_operators()
        for _ in range(5):
            rho = oracles.random_density_matrix(rng)
            base = squeezing_parameter(as_state(rho))
            for phi in (0.4, 1.3, 2.9):
                w = np.exp(1j * phi * np.diag(ops.jz))
                rotated = (w[:, None] * rho) * w.conj()[None, :]
                assert abs(squeezing_parameter(as_state(rotated)) - base) < 1e-10


class TestMinimumLocus:
    def test_monotone_below_singlet_boundary(self):
        # heating only degrades squeezing there: no interior minimum
        out = squeezing_minimum_locus(
            TrimerParams(J=1.0, D=0.05), np.array([0.0, 0.4, 0.8]),
            t_hi=3.0, scan_points=80,
        )
        assert all(not rec.interior for rec in out)
        assert all(rec.t_min <= 0.05 for rec in out)

    def test_interior_minimum_above_saturation(self):
        # just above the saturation field thermal mixing with the
        # half-plateau doublet produces a genuine squeezing dip
        fields = np.array([2.05, 2.1, 2.2, 2.3])
        out = squeezing_minimum_locus(
            TrimerParams(J=1.0, D=0.05), fields, t_hi=3.0, scan_points=80
        )
        assert all(rec.interior for rec in out)
        assert all(rec.xi2_min < 1.0 for rec in out)
        t_mins = [rec.t_min for rec in out]
        assert all(b > a for a, b in zip(t_mins, t_mins[1:]))
        ref = min(
            squeezing_parameter(thermal_state(TrimerParams(1.0, 0.05, 2.1), t))
            for t in np.linspace(0.3, 1.2, 400)
        )
        rec = out[1]
        assert abs(rec.xi2_min - ref) < 1e-4


def test_l_prime_is_four():
    assert L_PRIME == 4


def test_second_moments_sum_rule(rng):
    ops = collective_operators()
    j2 = (ops.jx2_plus_jy2 + ops.jz @ ops.jz).real
    for state in sample_states(rng, 5):
        jx2, jy2, jz2 = second_moments(state)
        total = np.trace(state.rho @ j2).real
        assert abs(jx2 + jy2 + jz2 - total) < 1e-10
