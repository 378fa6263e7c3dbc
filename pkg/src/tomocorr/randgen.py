"""Seeded random-state ensembles with reproducible per-index substreams."""

from __future__ import annotations

import numpy as np

from .qstate import TwoQubitState, XState


def substream(seed: int, index: int) -> np.random.Generator:
    """Generator for ensemble member `index`; independent of draw order."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def random_x_state(rng: np.random.Generator) -> XState:
    """X state with uniform populations and admissible uniform coherences."""
    diag = rng.uniform(0.0, 1.0, size=4)
    diag /= diag.sum()
    eps = rng.uniform(0.0, 1.0, size=2)
    rho14 = eps[0] * np.sqrt(diag[0] * diag[3])
    rho23 = eps[1] * np.sqrt(diag[1] * diag[2])
    return XState(diag[0], diag[1], diag[2], diag[3], float(rho14), float(rho23))


def random_mixed_state(rng: np.random.Generator, rank: int = 4) -> TwoQubitState:
    """Mixture of `rank` Haar-like random pure states with uniform weights."""
    if not 1 <= rank <= 4:
        raise ValueError(f"rank must be in 1..4, got {rank}")
    vecs = rng.standard_normal((rank, 4)) + 1j * rng.standard_normal((rank, 4))
    weights = rng.uniform(0.0, 1.0, size=rank)
    weights /= weights.sum()
    rho = np.zeros((4, 4), dtype=complex)
    for w, v in zip(weights, vecs):
        rho += w * np.outer(v, v.conj()) / np.vdot(v, v).real
    return TwoQubitState.from_matrix(rho)


def random_pure_state(rng: np.random.Generator) -> TwoQubitState:
    """Haar-random two-qubit pure state."""
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return TwoQubitState.from_matrix(np.outer(v, v.conj()))
