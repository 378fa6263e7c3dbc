"""Measurement tomograms of qubit pairs under local basis rotations.

A setting holds one rotation per side.  The local rotation is

    U(theta, phi) = [[cos(theta/2),  sin(theta/2)],     [[e^{i phi/2}, 0          ],
                     [-sin(theta/2), cos(theta/2)]]  @   [0,           e^{-i phi/2}]]

and the tomogram is the diagonal of (U_A x U_B) rho (U_A x U_B)^dag, i.e. the
outcome distribution of a projective measurement in the rotated product basis,
ordered (00, 01, 10, 11).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qstate import TwoQubitState, XState

PROB_CLAMP = -1e-12
PROB_SUM_TOL = 1e-12

_TWO_PI = 2.0 * math.pi


def _canonical_pair(theta: float, phi: float) -> tuple[float, float]:
    # (theta, phi) and (2*pi - theta, phi + pi) define the same measurement axis
    theta = theta % _TWO_PI
    if theta > math.pi:
        theta = _TWO_PI - theta
        phi = phi + math.pi
    return theta, phi % _TWO_PI


@dataclass(frozen=True)
class MeasurementSetting:
    """Local rotation angles (radians) for side A and side B."""

    theta_a: float
    phi_a: float
    theta_b: float
    phi_b: float

    def canonical(self) -> "MeasurementSetting":
        """Equivalent setting with theta in [0, pi] and phi in [0, 2*pi)."""
        ta, pa = _canonical_pair(self.theta_a, self.phi_a)
        tb, pb = _canonical_pair(self.theta_b, self.phi_b)
        return MeasurementSetting(ta, pa, tb, pb)


DIAG_SETTING = MeasurementSetting(0.0, 0.0, 0.0, 0.0)
SYM_SETTING = MeasurementSetting(math.pi / 2, 0.0, math.pi / 2, 0.0)


def rotation_matrix(theta: float, phi: float) -> np.ndarray:
    """The 2x2 local rotation for one side of a setting."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    half = complex(math.cos(phi / 2.0), math.sin(phi / 2.0))
    return np.array([[c * half, s / half], [-s * half, c / half]])


@dataclass(frozen=True)
class Tomogram:
    """Outcome distribution of one measurement setting, ordered (00,01,10,11)."""

    probs: np.ndarray
    setting: MeasurementSetting

    def __post_init__(self) -> None:
        p = np.array(self.probs, dtype=float)
        if p.shape != (4,):
            raise ValueError(f"tomogram needs 4 outcomes, got shape {p.shape}")
        if p.min() < PROB_CLAMP:
            raise ValueError(f"outcome probability {p.min():.3e} below clamp window")
        p[p < 0.0] = 0.0
        if abs(p.sum() - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"tomogram sums to 1 with error {abs(p.sum() - 1.0):.3e}")
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)


def tomogram(state: TwoQubitState, setting: MeasurementSetting) -> Tomogram:
    """Measure the joint state in the rotated product basis."""
    u = np.kron(
        rotation_matrix(setting.theta_a, setting.phi_a),
        rotation_matrix(setting.theta_b, setting.phi_b),
    )
    probs = np.einsum("ij,jk,ik->i", u, state.matrix, u.conj()).real
    return Tomogram(probs, setting)


def reduced_tomograms(tom: Tomogram) -> tuple[np.ndarray, np.ndarray]:
    """Marginal outcome distributions for side A and side B."""
    p = tom.probs
    return np.array([p[0] + p[1], p[2] + p[3]]), np.array([p[0] + p[2], p[1] + p[3]])


def shannon_entropy(probs) -> float:
    """Shannon entropy in bits; zeros contribute nothing."""
    p = np.asarray(probs, dtype=float)
    if p.min() < PROB_CLAMP:
        raise ValueError(f"probability {p.min():.3e} below clamp window")
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p)))


def tomographic_mutual_information(state: TwoQubitState, setting: MeasurementSetting) -> float:
    """H(A) + H(B) - H(AB) in bits for one measurement setting."""
    tom = tomogram(state, setting)
    pa, pb = reduced_tomograms(tom)
    return shannon_entropy(pa) + shannon_entropy(pb) - shannon_entropy(tom.probs)


def x_tomogram_closed_form(x: XState, setting: MeasurementSetting) -> Tomogram:
    """Tomogram of an X state without building the rotated matrix.

    Marginal terms enter through the diagonal Bloch data (bloch_z_a, bloch_z_b,
    corr_zz); the coherences enter through an interference weight
    rho14*cos(phi_a+phi_b) + rho23*cos(phi_a-phi_b) that multiplies
    sin(theta_a)*sin(theta_b)/2.  Valid for any finite angles.
    """
    ca, cb = math.cos(setting.theta_a), math.cos(setting.theta_b)
    sa, sb = math.sin(setting.theta_a), math.sin(setting.theta_b)
    za, zb, zab = x.bloch_z_a, x.bloch_z_b, x.corr_zz
    w = x.rho14 * math.cos(setting.phi_a + setting.phi_b) + x.rho23 * math.cos(
        setting.phi_a - setting.phi_b
    )
    interf = 0.5 * sa * sb * w
    base = 0.25
    p00 = base * (1.0 + za * ca + zb * cb + zab * ca * cb) + interf
    p01 = base * (1.0 + za * ca - zb * cb - zab * ca * cb) - interf
    p10 = base * (1.0 - za * ca + zb * cb - zab * ca * cb) - interf
    p11 = base * (1.0 - za * ca - zb * cb + zab * ca * cb) + interf
    return Tomogram(np.array([p00, p01, p10, p11]), setting)


def diag_tomogram(x: XState) -> Tomogram:
    """Tomogram in the bases that diagonalize both marginals: the populations."""
    return Tomogram(np.array([x.rho11, x.rho22, x.rho33, x.rho44]), DIAG_SETTING)


def sym_tomogram(x: XState) -> Tomogram:
    """Tomogram with both marginal distributions uniform (equator measurement)."""
    kappa = 0.5 * (x.rho14 + x.rho23)
    p = 0.25 + kappa
    q = 0.25 - kappa
    return Tomogram(np.array([p, q, q, p]), SYM_SETTING)
