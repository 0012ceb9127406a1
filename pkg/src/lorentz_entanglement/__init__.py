"""Entanglement degradation of a two-qubit spin state under Lorentz boosts."""

from .entanglement import (
    PTSpectrum,
    StateParameter,
    TauDensity,
    assemble_tau,
    boosted_pure_state,
    concurrence_pure,
    concurrence_reduced,
    concurrence_wootters,
    initial_state,
    log_negativity_closed,
    log_negativity_numeric,
    ppt_threshold,
    pt_eigenvalues_closed,
    spin_blocks,
)
from .kinematics import (
    WavePacket,
    polarization_leading_order,
    polarization_quadrature,
    rapidity_from_beta,
    wigner_angle,
)

__version__ = "0.1.0"
