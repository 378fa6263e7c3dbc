"""Tomographic correlation analysis for two-qubit states.

The library quantifies how much of the correlation in a two-qubit density
matrix survives a pair of local projective measurements, searches measurement
settings that retain the most, and applies the same machinery to the two-qubit
reduction of a pair of coupled harmonic oscillators.
"""

from .causal import AsymmetryReport, quantum_asymmetry, tomographic_asymmetry
from .circuits import (
    MODE_PAIRS,
    CircuitParams,
    GroundResult,
    NormalModes,
    OverlapTable,
    QuadratureNotConverged,
    ThermalResult,
    UnstableCoupling,
    ground_state_2qb,
    hermite_wavefunction,
    normal_modes,
    overlap_coefficients,
    thermal_state_2qb,
)
from .measures import (
    CanonicalResult,
    CorrelationReport,
    GridSpec,
    SchemeResult,
    XOptimalResult,
    canonical_discord,
    concurrence,
    diagonalizing_scheme,
    entanglement_of_formation,
    full_report,
    optimal_scheme,
    symmetrizing_scheme,
    x_optimal_discord,
)
from .qstate import (
    DensityMatrix,
    NotHermitian,
    NotPositive,
    NotXShaped,
    StateValidationError,
    TraceNotOne,
    TwoQubitState,
    XState,
    as_x_state,
    partial_trace,
    quantum_mutual_information,
    validate_density,
    von_neumann_entropy,
)
from .randgen import random_mixed_state, random_pure_state, random_x_state, substream
from .stateio import StateFileError, dump_state_file, load_state_file
from .tomography import (
    DIAG_SETTING,
    SYM_SETTING,
    MeasurementSetting,
    Tomogram,
    diag_tomogram,
    reduced_tomograms,
    rotation_matrix,
    shannon_entropy,
    sym_tomogram,
    tomogram,
    tomographic_mutual_information,
    x_tomogram_closed_form,
)

__version__ = "1.0.0"

__all__ = [
    "AsymmetryReport",
    "CanonicalResult",
    "CircuitParams",
    "CorrelationReport",
    "DIAG_SETTING",
    "DensityMatrix",
    "GridSpec",
    "GroundResult",
    "MODE_PAIRS",
    "MeasurementSetting",
    "NormalModes",
    "NotHermitian",
    "NotPositive",
    "NotXShaped",
    "OverlapTable",
    "QuadratureNotConverged",
    "SYM_SETTING",
    "SchemeResult",
    "StateFileError",
    "StateValidationError",
    "ThermalResult",
    "Tomogram",
    "TraceNotOne",
    "TwoQubitState",
    "UnstableCoupling",
    "XOptimalResult",
    "XState",
    "as_x_state",
    "canonical_discord",
    "concurrence",
    "diag_tomogram",
    "diagonalizing_scheme",
    "dump_state_file",
    "entanglement_of_formation",
    "full_report",
    "ground_state_2qb",
    "hermite_wavefunction",
    "load_state_file",
    "normal_modes",
    "optimal_scheme",
    "overlap_coefficients",
    "partial_trace",
    "quantum_asymmetry",
    "quantum_mutual_information",
    "random_mixed_state",
    "random_pure_state",
    "random_x_state",
    "reduced_tomograms",
    "rotation_matrix",
    "shannon_entropy",
    "substream",
    "sym_tomogram",
    "symmetrizing_scheme",
    "thermal_state_2qb",
    "tomogram",
    "tomographic_asymmetry",
    "tomographic_mutual_information",
    "validate_density",
    "von_neumann_entropy",
    "x_optimal_discord",
    "x_tomogram_closed_form",
]
