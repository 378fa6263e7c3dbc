"""Directional asymmetry of correlations between the two sides.

For entropies S_A, S_B and mutual information I, the residual of A given B is
(S_A - I)/S_A: the share of A's uncertainty that knowing B does not remove.
The asymmetry is the difference of the two residuals.  The tomographic variant
uses the setting-dependent Shannon entropies and mutual information instead.
A residual is undefined when the corresponding entropy is below 1e-9 bits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qstate import TwoQubitState, von_neumann_entropy, quantum_mutual_information
from .tomography import (
    MeasurementSetting,
    reduced_tomograms,
    shannon_entropy,
    tomogram,
)

ENTROPY_FLOOR = 1e-9


@dataclass(frozen=True)
class AsymmetryReport:
    """Residuals and their difference; None marks an undefined value."""

    residual_a_given_b: float | None
    residual_b_given_a: float | None
    asymmetry: float | None
    variant: str


def _build(sa: float, sb: float, info: float, variant: str) -> AsymmetryReport:
    iab = (sa - info) / sa if sa >= ENTROPY_FLOOR else None
    iba = (sb - info) / sb if sb >= ENTROPY_FLOOR else None
    diff = iab - iba if iab is not None and iba is not None else None
    return AsymmetryReport(iab, iba, diff, variant)


def quantum_asymmetry(state: TwoQubitState) -> AsymmetryReport:
    """Residual asymmetry built from von Neumann entropies."""
    return _build(
        von_neumann_entropy(state.marginal_a),
        von_neumann_entropy(state.marginal_b),
        quantum_mutual_information(state),
        "quantum",
    )


def tomographic_asymmetry(state: TwoQubitState, setting: MeasurementSetting) -> AsymmetryReport:
    """Residual asymmetry built from one setting's tomographic entropies."""
    tom = tomogram(state, setting)
    pa, pb = reduced_tomograms(tom)
    ha, hb = shannon_entropy(pa), shannon_entropy(pb)
    j = ha + hb - shannon_entropy(tom.probs)
    return _build(ha, hb, j, "tomographic")
