"""Two bilinearly coupled harmonic oscillators reduced to a two-qubit state.

The model is a pair of unit-mass oscillators with frequencies omega1 and
omega2 = omega1 + delta_omega, coupled through a position-position term
g*omega1*omega2*x1*x2.  Rotating the coordinates by the mixing angle
diagonalizes the potential into normal modes Omega1, Omega2; the coupled
eigenstates are products of normal-mode Hermite functions.

Each eigenstate is expanded over the uncoupled oscillator basis by numerical
overlap integrals.  Keeping levels {0, 1} of each oscillator maps the state
onto two qubits; `alpha` reports the population lost to higher levels.  Local
phase gauges are chosen so both X-state coherences are nonnegative, which
leaves every reported measure unchanged.

Units: hbar = k_B = 1, energies in units of omega1 when omega1 = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_hermite

from .qstate import XState

MAX_HERMITE_LEVEL = 20
GROUND_LIMIT_TEMPERATURE = 1e-6

# eigenstates kept in the thermal sum: every pair with at most two quanta
# that projects onto the qubit subspace at first order
MODE_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0))


class UnstableCoupling(ValueError):
    """The coupled potential is not positive definite (|g| >= 1)."""


class QuadratureNotConverged(RuntimeError):
    """Overlap integrals changed by more than the tolerance on node doubling."""


@dataclass(frozen=True)
class CircuitParams:
    """Oscillator-pair parameters; omega2 is omega1 + delta_omega."""

    omega1: float = 1.0
    delta_omega: float = 0.0
    g: float = 0.0
    temperature: float = 0.0

    def __post_init__(self):
        if self.omega1 <= 0.0:
            raise ValueError(f"omega1 must be positive, got {self.omega1}")
        if self.omega2 <= 0.0:
            raise ValueError(f"omega1 + delta_omega must be positive, got {self.omega2}")
        if self.temperature < 0.0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")

    @property
    def omega2(self) -> float:
        return self.omega1 + self.delta_omega


@dataclass(frozen=True)
class NormalModes:
    """Normal-mode frequencies and the coordinate mixing angle."""

    omega1: float
    omega2: float
    mixing_angle: float


def normal_modes(params: CircuitParams) -> NormalModes:
    """Diagonalize the coupled quadratic potential.

    The mixing angle solves tan(2*beta) = 2*g*w1*w2 / (w1^2 - w2^2); at g = 0
    it is pinned to zero so the modes keep the bare ordering.  Raises
    UnstableCoupling when a squared mode frequency is nonpositive.
    """
    w1, w2, g = params.omega1, params.omega2, params.g
    if g == 0.0:
        return NormalModes(w1, w2, 0.0)
    beta = 0.5 * math.atan2(2.0 * g * w1 * w2, w1 * w1 - w2 * w2)
    c, s = math.cos(beta), math.sin(beta)
    cross = 2.0 * g * w1 * w2 * s * c
    sq1 = w1 * w1 * c * c + w2 * w2 * s * s + cross
    sq2 = w1 * w1 * s * s + w2 * w2 * c * c - cross
    if min(sq1, sq2) <= 0.0:
        raise UnstableCoupling(
            f"coupling g={g} makes a squared mode frequency nonpositive "
            f"({min(sq1, sq2):.3e})"
        )
    return NormalModes(math.sqrt(sq1), math.sqrt(sq2), beta)


def _hermite_stack(max_level: int, xi: np.ndarray) -> np.ndarray:
    """Normalized dimensionless Hermite functions, rows 0..max_level."""
    out = np.empty((max_level + 1, xi.size))
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * xi * xi)
    if max_level >= 1:
        out[1] = math.sqrt(2.0) * xi * out[0]
    for l in range(2, max_level + 1):
        out[l] = math.sqrt(2.0 / l) * xi * out[l - 1] - math.sqrt((l - 1) / l) * out[l - 2]
    return out


def hermite_wavefunction(level: int, omega: float, x) -> np.ndarray:
    """Oscillator eigenfunction of frequency `omega` at position(s) `x`."""
    if not 0 <= level <= MAX_HERMITE_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_HERMITE_LEVEL}, got {level}")
    xi = np.sqrt(omega) * np.asarray(x, dtype=float).ravel()
    vals = omega**0.25 * _hermite_stack(level, xi)[level]
    return vals.reshape(np.shape(x)) if np.ndim(x) else float(vals[0])


class OverlapTable:
    """Expansion coefficients of coupled eigenstates over the bare basis.

    `block(m, n)[i, j]` is the amplitude of bare level pair (i, j) in the
    normal-mode eigenstate (m, n), for every pair in MODE_PAIRS.  Entries with
    i + j + m + n odd vanish by parity and are stored as exact zeros.
    """

    def __init__(self, params: CircuitParams, modes: NormalModes, blocks: dict):
        self.params = params
        self.modes = modes
        self._blocks = blocks

    def block(self, m: int, n: int) -> np.ndarray:
        return self._blocks[(m, n)]

    def coefficient(self, m: int, n: int, i: int, j: int) -> float:
        return float(self._blocks[(m, n)][i, j])

    def completeness(self, m: int, n: int) -> float:
        """Captured norm of eigenstate (m, n); approaches 1 as levels grow."""
        b = self._blocks[(m, n)]
        return float(np.sum(b * b))


def _quad_blocks(params: CircuitParams, modes: NormalModes, max_level: int, nodes: int) -> dict:
    w1, w2 = params.omega1, params.omega2
    t, v = roots_hermite(nodes)
    # compensated weights stay O(1); the bare ones underflow past ~300 nodes
    with np.errstate(divide="ignore"):
        weights = np.exp(np.log(v) + t * t)
    scale = min(w1, w2, modes.omega1, modes.omega2) / 2.0
    x = t / math.sqrt(scale)
    stack_a = _hermite_stack(max_level, math.sqrt(w1) * x) * w1**0.25
    stack_b = _hermite_stack(max_level, math.sqrt(w2) * x) * w2**0.25
    aw = stack_a * weights
    bw = stack_b * weights
    c, s = math.cos(modes.mixing_angle), math.sin(modes.mixing_angle)
    y1 = (c * x[:, None] + s * x[None, :]).ravel()
    y2 = (-s * x[:, None] + c * x[None, :]).ravel()
    psi1 = _hermite_stack(2, math.sqrt(modes.omega1) * y1) * modes.omega1**0.25
    psi2 = _hermite_stack(2, math.sqrt(modes.omega2) * y2) * modes.omega2**0.25
    levels = np.arange(max_level + 1)
    blocks = {}
    for m, n in MODE_PAIRS:
        mat = (psi1[m] * psi2[n]).reshape(nodes, nodes)
        coeff = (aw @ mat @ bw.T) / scale
        odd = (levels[:, None] + levels[None, :] + m + n) % 2 == 1
        coeff[odd] = 0.0
        blocks[(m, n)] = coeff
    return blocks


def overlap_coefficients(
    params: CircuitParams,
    max_level: int = 12,
    nodes: int = 80,
    convergence_tol: float = 1e-8,
) -> OverlapTable:
    """Compute the overlap table by scaled Gauss-Hermite quadrature.

    The node count is doubled once and the two tables compared entrywise;
    a discrepancy above `convergence_tol` raises QuadratureNotConverged.
    The finer table is returned.
    """
    if not 0 <= max_level <= MAX_HERMITE_LEVEL:
        raise ValueError(f"max_level must be in 0..{MAX_HERMITE_LEVEL}, got {max_level}")
    modes = normal_modes(params)
    coarse = _quad_blocks(params, modes, max_level, nodes)
    fine = _quad_blocks(params, modes, max_level, 2 * nodes)
    worst = max(float(np.max(np.abs(coarse[k] - fine[k]))) for k in MODE_PAIRS)
    if worst > convergence_tol:
        raise QuadratureNotConverged(
            f"overlap table moved by {worst:.3e} on node doubling "
            f"({nodes} -> {2 * nodes}); raise `nodes`"
        )
    return OverlapTable(params, modes, fine)


@dataclass(frozen=True)
class GroundResult:
    """Qubit-subspace ground state and the population left outside it."""

    state: XState
    alpha: float


@dataclass(frozen=True)
class ThermalResult:
    """Qubit-subspace thermal state; `ground_limit` marks the T -> 0 shortcut."""

    state: XState
    alpha: float
    ground_limit: bool


def ground_state_2qb(
    params: CircuitParams,
    max_level: int = 12,
    nodes: int = 80,
    table: OverlapTable | None = None,
) -> GroundResult:
    """Project the coupled ground state onto two qubits.

    By parity only the (0,0) and (1,1) bare components survive, so the result
    is a pure X state with a single coherence.
    """
    if table is None:
        table = overlap_coefficients(params, max_level=max_level, nodes=nodes)
    c00 = table.coefficient(0, 0, 0, 0)
    c11 = table.coefficient(0, 0, 1, 1)
    kept = c00 * c00 + c11 * c11
    state = XState(
        c00 * c00 / kept, 0.0, 0.0, c11 * c11 / kept, abs(c00 * c11) / kept, 0.0
    )
    return GroundResult(state, max(0.0, 1.0 - kept))


def thermal_state_2qb(
    params: CircuitParams,
    max_level: int = 12,
    nodes: int = 80,
    table: OverlapTable | None = None,
) -> ThermalResult:
    """Project the thermal state onto two qubits.

    The Gibbs sum runs over MODE_PAIRS with Boltzmann factors of the
    normal-mode energies; below GROUND_LIMIT_TEMPERATURE it collapses to the
    ground state.  `alpha` counts both the higher-level population and the
    weight of eigenstates beyond the tracked pairs.
    """
    if params.temperature < GROUND_LIMIT_TEMPERATURE:
        ground = ground_state_2qb(params, max_level=max_level, nodes=nodes, table=table)
        return ThermalResult(ground.state, ground.alpha, True)
    if table is None:
        table = overlap_coefficients(params, max_level=max_level, nodes=nodes)
    u1 = math.exp(-table.modes.omega1 / params.temperature)
    u2 = math.exp(-table.modes.omega2 / params.temperature)
    s11 = s22 = s33 = s44 = s14 = s23 = 0.0
    for m, n in MODE_PAIRS:
        weight = u1**m * u2**n
        b = table.block(m, n)
        if (m + n) % 2 == 0:
            s11 += weight * b[0, 0] * b[0, 0]
            s44 += weight * b[1, 1] * b[1, 1]
            s14 += weight * b[0, 0] * b[1, 1]
        else:
            s22 += weight * b[0, 1] * b[0, 1]
            s33 += weight * b[1, 0] * b[1, 0]
            s23 += weight * b[0, 1] * b[1, 0]
    kept = s11 + s22 + s33 + s44
    state = XState(
        s11 / kept,
        s22 / kept,
        s33 / kept,
        s44 / kept,
        abs(s14) / kept,
        abs(s23) / kept,
    )
    alpha = max(0.0, 1.0 - (1.0 - u1) * (1.0 - u2) * kept)
    return ThermalResult(state, alpha, False)
