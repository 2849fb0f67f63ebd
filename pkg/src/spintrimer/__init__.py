"""spintrimer: exact thermal quantum resources of the mixed spin-(1/2, 1, 1/2)
Heisenberg trimer.

Closed-form spectrum and partition function, thermal density matrices,
bipartite/tripartite entanglement negativities, l1-norm coherence, collective
spin squeezing and Husimi Q-functions, cross-validated against brute-force
diagonalization and reproducible from the command line.
"""

__version__ = "0.1.0"

from .coherence import coherence_report, l1_coherence
from .entanglement import (
    NegativityReport,
    ThresholdResult,
    negativity,
    negativity_bipartite,
    negativity_report,
    negativity_tripartite,
    reduced_ab,
    reduced_ac,
    reduced_bc,
    threshold_temperature,
)
from .husimi import SphereGrid, coherent_state, husimi_grid, husimi_q
from .kernels import BACKEND
from .linalg import (
    TRIMER_DIMS,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    spin_operators,
)
from .model import (
    Amplitudes,
    GroundStatePhase,
    Phase,
    SpectralDecomposition,
    TrimerParams,
    amplitudes,
    boundary_half_saturated,
    boundary_singlet_half,
    build_hamiltonian,
    diagonalize_numeric,
    energies_closed_form,
    ground_state,
    spectrum_closed_form,
    zero_T_magnetization,
)
from .squeezing import (
    collective_operators,
    second_moments,
    squeezing_minimum_locus,
    squeezing_parameter,
    transverse_variance,
)
from .sweep import Axis, SweepConfig, run_sweep
from .thermo import (
    SATURATION_MAGNETIZATION,
    ThermalState,
    density_elements_closed,
    gibbs_free_energy,
    log_partition_function,
    magnetization,
    partition_function_closed,
    thermal_state,
)
from .units import (
    CONSTANTS,
    PhysicalParams,
    cunicu_preset,
    kelvin_per_j,
    tesla_per_j,
    to_physical,
    to_reduced,
)
