"""l1-norm of coherence: sum of the moduli of all off-diagonal elements.

Coherence is basis dependent; everything here is evaluated in the fixed
composite basis |m_a, m_b, m_c> in which the density matrices of this
package are expressed.  No dimensional normalisation is applied.
"""

from __future__ import annotations

import numpy as np

from .entanglement import reduced_ab, reduced_ac
from .thermo import ThermalState


def l1_coherence(matrix: np.ndarray) -> float:
    """Sum |M_ij| over i != j (complex entries enter via their modulus)."""
    m = np.abs(np.asarray(matrix)).astype(float)
    np.fill_diagonal(m, 0.0)
    return float(m.sum())


def coherence_report(state: ThermalState) -> tuple[float, float, float]:
    """(C_abc, C_ab, C_ac): coherence of the full state and both reduced pairs."""
    return (
        l1_coherence(state.rho),
        l1_coherence(reduced_ab(state)),
        l1_coherence(reduced_ac(state)),
    )
