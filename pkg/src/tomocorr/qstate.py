"""Validated density matrices and entropy primitives for qubit pairs.

Conventions used throughout the package:

* two-qubit matrices are written in the product basis |00>, |01>, |10>, |11>,
  with subsystem A the left tensor factor and subsystem B the right one;
* every entropy is in bits (base-2 logarithms);
* tolerances are absolute.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
MIN_EIGENVALUE = -1e-10


class StateValidationError(ValueError):
    """Base class for density-matrix validation failures."""


class NotHermitian(StateValidationError):
    """Matrix is not Hermitian within tolerance."""


class TraceNotOne(StateValidationError):
    """Trace deviates from one beyond tolerance."""


class NotPositive(StateValidationError):
    """Smallest eigenvalue is below the admissible floor."""


class NotXShaped(StateValidationError):
    """Matrix does not have the X sparsity pattern within tolerance."""


class DensityMatrix:
    """A Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.

    Construction validates; instances are therefore always well formed.  The
    stored array is read-only.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix, shape (2, 2) or (4, 4).

    Raises
    ------
    NotHermitian, TraceNotOne, NotPositive
        With the violation magnitude in the message.
    """

    __slots__ = ("matrix", "dim", "eigenvalues")

    def __init__(self, matrix) -> None:
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
            raise StateValidationError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
        dev = np.max(np.abs(m - m.conj().T))
        if dev > HERMITICITY_TOL:
            raise NotHermitian(f"Hermiticity violation {dev:.3e} exceeds {HERMITICITY_TOL:.0e}")
        tr_dev = abs(m.trace() - 1.0)
        if tr_dev > TRACE_TOL:
            raise TraceNotOne(f"trace deviates from 1 by {tr_dev:.3e} (tolerance {TRACE_TOL:.0e})")
        eigs = np.linalg.eigvalsh(m)
        if eigs[0] < MIN_EIGENVALUE:
            raise NotPositive(
                f"smallest eigenvalue {eigs[0]:.3e} is below the floor {MIN_EIGENVALUE:.0e}"
            )
        m.flags.writeable = False
        eigs.flags.writeable = False
        self.matrix = m
        self.dim = m.shape[0]
        self.eigenvalues = eigs

    def __repr__(self) -> str:  # pragma: no cover
        return f"DensityMatrix(dim={self.dim})"


def validate_density(raw) -> DensityMatrix:
    """Validate a raw matrix as a density matrix.

    Returns
    -------
    DensityMatrix
    """
    return DensityMatrix(raw)


def partial_trace(state, traced: str) -> DensityMatrix:
    """Trace out one qubit of a two-qubit density matrix.

    Parameters
    ----------
    state : DensityMatrix or TwoQubitState
        The joint state.
    traced : {'A', 'B'}
        Which subsystem to trace out; the other one's marginal is returned.
    """
    m = state.matrix if hasattr(state, "matrix") else np.asarray(state, dtype=complex)
    if m.shape != (4, 4):
        raise StateValidationError(f"partial trace needs a 4x4 matrix, got {m.shape}")
    r = m.reshape(2, 2, 2, 2)
    if traced == "B":
        reduced = np.trace(r, axis1=1, axis2=3)
    elif traced == "A":
        reduced = np.trace(r, axis1=0, axis2=2)
    else:
        raise ValueError(f"traced must be 'A' or 'B', got {traced!r}")
    return DensityMatrix(reduced)


@dataclass(frozen=True)
class TwoQubitState:
    """A validated joint state together with its two marginals."""

    joint: DensityMatrix
    marginal_a: DensityMatrix
    marginal_b: DensityMatrix

    @classmethod
    def from_matrix(cls, raw) -> "TwoQubitState":
        joint = validate_density(raw)
        if joint.dim != 4:
            raise StateValidationError("a two-qubit state needs a 4x4 matrix")
        return cls(joint, partial_trace(joint, "B"), partial_trace(joint, "A"))

    @property
    def matrix(self) -> np.ndarray:
        return self.joint.matrix


def _entropy_of_eigenvalues(eigs: np.ndarray) -> float:
    # eigenvalues in [MIN_EIGENVALUE, 0) count as exact zeros
    lam = eigs[eigs > 0.0]
    if lam.size == 0:
        return 0.0
    return float(-np.sum(lam * np.log2(lam)))


def von_neumann_entropy(state) -> float:
    """Von Neumann entropy in bits of a DensityMatrix or TwoQubitState."""
    dm = state.joint if isinstance(state, TwoQubitState) else state
    if not isinstance(dm, DensityMatrix):
        dm = validate_density(dm)
    return _entropy_of_eigenvalues(dm.eigenvalues)


def quantum_mutual_information(state: TwoQubitState) -> float:
    """S(A) + S(B) - S(AB) in bits."""
    return (
        von_neumann_entropy(state.marginal_a)
        + von_neumann_entropy(state.marginal_b)
        - von_neumann_entropy(state.joint)
    )


_X_PATTERN = np.array(
    [
        [True, False, False, True],
        [False, True, True, False],
        [False, True, True, False],
        [True, False, False, True],
    ]
)

_XSTATE_TOL = 1e-12


@dataclass(frozen=True)
class XState:
    """Two-qubit state with population on the diagonal and anti-diagonal only.

    The two coherences are stored as non-negative reals; any complex phase can
    be removed by local phase rotations, which leave every correlation measure
    reported by this package unchanged.
    """

    rho11: float
    rho22: float
    rho33: float
    rho44: float
    rho14: float = 0.0
    rho23: float = 0.0

    def __post_init__(self) -> None:
        for name in ("rho11", "rho22", "rho33", "rho44", "rho14", "rho23"):
            v = float(getattr(self, name))
            if v < -_XSTATE_TOL:
                raise StateValidationError(f"{name} = {v:.3e} is negative beyond tolerance")
            object.__setattr__(self, name, max(v, 0.0))
        total = self.rho11 + self.rho22 + self.rho33 + self.rho44
        if abs(total - 1.0) > _XSTATE_TOL:
            raise TraceNotOne(f"diagonal sums to 1 with error {abs(total - 1.0):.3e}")
        if self.rho14**2 > self.rho11 * self.rho44 + _XSTATE_TOL:
            raise NotPositive(
                f"rho14^2 - rho11*rho44 = {self.rho14**2 - self.rho11 * self.rho44:.3e} > 0"
            )
        if self.rho23**2 > self.rho22 * self.rho33 + _XSTATE_TOL:
            raise NotPositive(
                f"rho23^2 - rho22*rho33 = {self.rho23**2 - self.rho22 * self.rho33:.3e} > 0"
            )

    # Bloch-vector z components of the marginals and the zz correlation;
    # the marginals of an X state are diagonal, so these three numbers and the
    # two coherences fix every tomogram.
    @property
    def bloch_z_a(self) -> float:
        return self.rho11 + self.rho22 - self.rho33 - self.rho44

    @property
    def bloch_z_b(self) -> float:
        return self.rho11 - self.rho22 + self.rho33 - self.rho44

    @property
    def corr_zz(self) -> float:
        return self.rho11 - self.rho22 - self.rho33 + self.rho44

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.rho11, self.rho22, self.rho33, self.rho44
        m[0, 3] = m[3, 0] = self.rho14
        m[1, 2] = m[2, 1] = self.rho23
        return m

    def to_state(self) -> TwoQubitState:
        return TwoQubitState.from_matrix(self.to_matrix())


def as_x_state(state, tol: float = 1e-9) -> XState:
    """Check the X sparsity pattern and return the exact XState.

    Entries outside the X pattern must vanish within ``tol`` and the two
    coherences must be real non-negative within ``tol``.  No rebasing is
    attempted: a state that is X-shaped only in a rotated basis is rejected.
    """
    m = state.matrix if hasattr(state, "matrix") else np.asarray(state, dtype=complex)
    if m.shape != (4, 4):
        raise StateValidationError(f"expected a 4x4 matrix, got {m.shape}")
    off = np.max(np.abs(m[~_X_PATTERN]))
    if off > tol:
        raise NotXShaped(f"off-pattern entry of magnitude {off:.3e} exceeds tol {tol:.0e}")
    for name, v in (("rho14", m[0, 3]), ("rho23", m[1, 2])):
        if abs(v.imag) > tol:
            raise NotXShaped(f"{name} has imaginary part {v.imag:.3e} beyond tol {tol:.0e}")
        if v.real < -tol:
            raise NotXShaped(f"{name} = {v.real:.3e} is negative; rebasing is not attempted")
    return XState(
        rho11=m[0, 0].real,
        rho22=m[1, 1].real,
        rho33=m[2, 2].real,
        rho44=m[3, 3].real,
        rho14=max(m[0, 3].real, 0.0),
        rho23=max(m[1, 2].real, 0.0),
    )
