import numpy as np
import pytest

import oracles
from spintrimer.model import (
    BASIS_SZ,
    EIGEN_SZ,
    Phase,
    TrimerParams,
    amplitudes,
    boundary_half_saturated,
    boundary_singlet_half,
    build_hamiltonian,
    diagonalize_numeric,
    energies_closed_form,
    ground_state,
    spectrum_closed_form,
    trimer_site_operators,
    zero_T_magnetization,
)


def random_params(rng, n):
    for _ in range(n):
        J = float(rng.uniform(0.2, 3.0))
        yield TrimerParams(J=J, D=float(rng.uniform(-2 * J, 2 * J)),
                           h=float(rng.uniform(0, 4 * J)))


def test_hamiltonian_matches_independent_construction(rng):
    for p in random_params(rng, 20):
        assert np.abs(build_hamiltonian(p) - oracles.hamiltonian(p.J, p.D, p.h)).max() < 1e-13


def test_isotropic_zero_field_multiset():
    e = np.sort(energies_closed_form(TrimerParams(J=1.0)))
    assert np.allclose(e, [-2, -1, -1, -1, 0, 0, 0, 1, 1, 1, 1, 1])
    w, _ = diagonalize_numeric(TrimerParams(J=1.0))
    assert np.abs(w - e).max() < 1e-12


def test_trace_is_8d(rng):
    # only the single-ion term survives the trace
    for p in random_params(rng, 10):
        assert abs(np.trace(build_hamiltonian(p)) - 8 * p.D) < 1e-12 * max(1, abs(p.D))


def test_commutes_with_total_sz(rng):
    jz = np.diag(BASIS_SZ)
    for p in random_params(rng, 5):
        H = build_hamiltonian(p)
        assert np.abs(H @ jz - jz @ H).max() == 0.0


def test_closed_form_spectrum_on_thousand_draws(rng):
    for p in random_params(rng, 1000):
        w, _ = diagonalize_numeric(p)
        cf = np.sort(energies_closed_form(p))
        assert np.abs(w - cf).max() < 1e-10 * p.J


def test_eigenvector_residuals(rng):
    for p in random_params(rng, 50):
        spec = spectrum_closed_form(p)
        H = build_hamiltonian(p)
        resid = np.abs(H @ spec.vectors - spec.vectors * spec.energies).max()
        assert resid < 1e-10 * p.J
        assert np.abs(spec.vectors.T @ spec.vectors - np.eye(12)).max() < 1e-10


def test_eigenvectors_respect_sz_sectors(rng):
    for p in random_params(rng, 10):
        spec = spectrum_closed_form(p)
        for i in range(12):
            support = np.abs(spec.vectors[:, i]) > 1e-14
            assert np.all(BASIS_SZ[support] == spec.total_sz[i])


def test_amplitude_normalisation(rng):
    for p in random_params(rng, 200):
        a = amplitudes(p)
        assert abs(2 * a.a**2 + a.b**2 - 1) < 1e-12
        assert abs(2 * a.c**2 + a.d**2 - 1) < 1e-12
        assert abs(2 * a.e**2 + 2 * a.f**2 - 1) < 1e-12
        assert abs(2 * a.g_amp**2 + 2 * a.h_amp**2 - 1) < 1e-12


def test_amplitudes_isotropic_values():
    a = amplitudes(TrimerParams(J=1.0, D=0.0))
    assert abs(a.a + 0.5) < 1e-14
    assert abs(a.b - 1 / np.sqrt(2)) < 1e-14
    assert abs(a.e - 1 / np.sqrt(6)) < 1e-14
    assert abs(a.f + 1 / np.sqrt(3)) < 1e-14


def test_singlet_energy_field_independent():
    base = energies_closed_form(TrimerParams(J=1.0, D=0.3, h=0.0))[8]
    for h in (0.5, 1.7, 3.0):
        assert energies_closed_form(TrimerParams(J=1.0, D=0.3, h=h))[8] == base


def test_saturated_energy_expression(rng):
    for p in random_params(rng, 20):
        assert abs(energies_closed_form(p)[10] - (p.D + p.J - 2 * p.h)) < 1e-14


def test_field_reversal_mirror(rng):
    mirror = {0: 0, 1: 1, 2: 3, 3: 2, 4: 6, 5: 7, 6: 4, 7: 5, 8: 8, 9: 9, 10: 11, 11: 10}
    for p in random_params(rng, 20):
        flipped = TrimerParams(p.J, p.D, -p.h)
        e_plus = energies_closed_form(p)
        e_minus = energies_closed_form(flipped)
        for i, j in mirror.items():
            assert abs(e_plus[i] - e_minus[j]) < 1e-12
        assert EIGEN_SZ[list(mirror.values())].tolist() == (-EIGEN_SZ).tolist()


class TestPhaseDiagram:
    def test_isotropic_boundaries(self):
        p = TrimerParams(J=1.0, D=0.0)
        assert abs(boundary_singlet_half(p) - 1.0) < 1e-14
        assert abs(boundary_half_saturated(p) - 2.0) < 1e-14

    def test_specific_points(self):
        assert ground_state(TrimerParams(1.0, 0.05, 0.5)).phase is Phase.SINGLET
        assert ground_state(TrimerParams(1.0, 0.05, 1.5)).phase is Phase.HALF_PLATEAU
        assert ground_state(TrimerParams(1.0, 0.05, 3.0)).phase is Phase.SATURATED

    def test_boundary_detection(self):
        p = TrimerParams(J=1.0, D=0.3)
        onb = ground_state(TrimerParams(1.0, 0.3, boundary_singlet_half(p)))
        assert onb.is_boundary and onb.members == (Phase.SINGLET, Phase.HALF_PLATEAU)
        with pytest.raises(ValueError):
            _ = onb.phase

    def test_argmin_agrees_with_boundaries(self, rng):
        ground_index = {Phase.SINGLET: 8, Phase.HALF_PLATEAU: 4, Phase.SATURATED: 10}
        for p in random_params(rng, 300):
            gs = ground_state(p)
            if gs.is_boundary:
                continue
            e = energies_closed_form(p)
            assert int(np.argmin(e)) == ground_index[gs.phase]

    def test_zero_t_magnetization_plateaus(self):
        assert zero_T_magnetization(TrimerParams(1.0, 0.05, 0.5)) == 0.0
        assert zero_T_magnetization(TrimerParams(1.0, 0.05, 1.5)) == 0.5
        assert zero_T_magnetization(TrimerParams(1.0, 0.05, 3.0)) == 1.0

    def test_zero_t_magnetization_boundary_raises(self):
        h = boundary_half_saturated(TrimerParams(J=1.0, D=0.1))
        with pytest.raises(ValueError):
            zero_T_magnetization(TrimerParams(1.0, 0.1, h))


def test_params_validation():
    with pytest.raises(ValueError):
        TrimerParams(J=0.0)
    with pytest.raises(ValueError):
        TrimerParams(J=-1.0)
    with pytest.raises(ValueError):
        TrimerParams(J=1.0, D=float("inf"))


def test_site_operator_table_consistency():
    ops = trimer_site_operators()
    ref = oracles.site_ops()
    for name, site in (("a", 0), ("b", 1), ("c", 2)):
        assert np.abs(ops[f"{name}z"] - ref[site][2].real).max() < 1e-14
        sx = (ops[f"{name}p"] + ops[f"{name}m"]) / 2
        assert np.abs(sx - ref[site][0].real).max() < 1e-14
