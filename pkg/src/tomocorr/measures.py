"""Correlation measures built on optimized measurement settings.

Search protocol shared by every scheme: a coarse product grid over the free
angles (theta step pi/60 on [0, pi], phi step pi/30 on [0, 2*pi)), then
derivative-free coordinate descent started from the best coarse cells, halving
the steps whenever a full sweep brings no improvement and stopping once every
step is below 1e-5 rad.

For X states the four-angle optimum is found exactly on a reduced grid: the
joint entropy is concave in the interference weight, so the phi optimum sits
at an endpoint weight +-(rho14+rho23), and the negative endpoint equals the
phi = 0 tomogram with theta_a -> pi - theta_a up to outcome relabeling.  The
reduced search therefore runs over theta_a in [0, pi], theta_b in [0, pi/2]
at phi = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .causal import quantum_asymmetry, tomographic_asymmetry
from .qstate import (
    NotXShaped,
    StateValidationError,
    TwoQubitState,
    XState,
    quantum_mutual_information,
    von_neumann_entropy,
)
from .tomography import (
    DIAG_SETTING,
    SYM_SETTING,
    MeasurementSetting,
    diag_tomogram,
    shannon_entropy,
    sym_tomogram,
    tomogram,
)

_PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ]
)

DEGENERACY_GAP = 1e-9
SCHEME_TIE_TOL = 1e-9
_X_DETECT_TOL = 1e-9
_CHUNK_ROWS = 128


@dataclass(frozen=True)
class GridSpec:
    """Search-protocol parameters; the defaults are the reference protocol."""

    theta_step: float = math.pi / 60
    phi_step: float = math.pi / 30
    min_refine_step: float = 1e-5
    refine_starts: int = 5


DEFAULT_GRID = GridSpec()


@dataclass(frozen=True)
class SchemeResult:
    """A measurement scheme with its mutual information J and discord I - J."""

    scheme: str
    setting: MeasurementSetting
    mutual_information: float
    discord: float


@dataclass(frozen=True)
class CanonicalResult:
    """One-sided measured discord and the maximizing measurement axis."""

    side: str
    theta: float
    phi: float
    post_mutual_information: float
    discord: float


@dataclass(frozen=True)
class XOptimalResult:
    """Min-rule discord of an X state with the achieving scheme and subclass."""

    discord: float
    scheme: str
    subclass: str
    discord_diagonalizing: float
    discord_symmetrizing: float


@dataclass(frozen=True)
class CorrelationReport:
    """Every correlation quantity reported for one state."""

    mutual_information: float
    discord_optimal: float
    discord_diagonalizing: float
    discord_symmetrizing: float
    discord_measured_a: float
    discord_measured_b: float
    entanglement: float
    asymmetry_quantum: float | None
    asymmetry_diag: float | None
    asymmetry_optimal: float | None
    alpha: float | None
    subclass: str | None
    optimal_setting: MeasurementSetting


# ---------------------------------------------------------------------------
# vectorized probability helpers

def _plogp(p: np.ndarray) -> np.ndarray:
    # p*log2(p) with p<=0 contributing 0; tiny negative rounding is harmless
    return p * np.log2(np.maximum(p, 1e-300))


def _binary_entropy_bias(x: np.ndarray) -> np.ndarray:
    # entropy in bits of {(1+x)/2, (1-x)/2}
    return -_plogp((1.0 + x) / 2.0) - _plogp((1.0 - x) / 2.0)


def _bloch(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    r = m.reshape(2, 2, 2, 2)
    ma = np.trace(r, axis1=1, axis2=3)
    mb = np.trace(r, axis1=0, axis2=2)
    ra = np.real(np.einsum("ab,iba->i", ma, _PAULI))
    rb = np.real(np.einsum("ab,iba->i", mb, _PAULI))
    corr = np.real(np.einsum("abcd,ica,jdb->ij", r, _PAULI, _PAULI))
    return ra, rb, corr


def _axis(theta: float, phi: float) -> np.ndarray:
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def _axis_angles(n) -> tuple[float, float]:
    theta = math.atan2(math.hypot(n[0], n[1]), n[2])
    phi = math.atan2(n[1], n[0]) % (2.0 * math.pi)
    return theta, phi


@lru_cache(maxsize=8)
def _sphere_grid(theta_step: float, phi_step: float):
    thetas = np.arange(0.0, math.pi + 1e-12, theta_step)
    phis = np.arange(0.0, 2.0 * math.pi - 1e-12, phi_step)
    th = np.repeat(thetas, phis.size)
    ph = np.tile(phis, thetas.size)
    st = np.sin(th)
    axes = np.column_stack((st * np.cos(ph), st * np.sin(ph), np.cos(th)))
    return th, ph, axes


def _scalar_entropy4(p1: float, p2: float, p3: float, p4: float) -> float:
    h = 0.0
    for p in (p1, p2, p3, p4):
        if p > 0.0:
            h -= p * math.log2(p)
    return h


def _scalar_entropy2(p: float) -> float:
    h = 0.0
    for q in (p, 1.0 - p):
        if q > 0.0:
            h -= q * math.log2(q)
    return h


def _j_from_axes(ra, rb, corr, na, nb) -> float:
    x = float(na @ ra)
    y = float(nb @ rb)
    z = float(na @ corr @ nb)
    p1 = 0.25 * (1.0 + x + y + z)
    p2 = 0.25 * (1.0 + x - y - z)
    p3 = 0.25 * (1.0 - x + y - z)
    p4 = 0.25 * (1.0 - x - y + z)
    return (
        _scalar_entropy2(0.5 * (1.0 + x))
        + _scalar_entropy2(0.5 * (1.0 + y))
        - _scalar_entropy4(p1, p2, p3, p4)
    )


def _coordinate_descent(f, x0, steps0, min_step, max_evals=20000):
    """Maximize f by cyclic single-coordinate moves with step halving."""
    x = list(x0)
    fx = f(x)
    steps = list(steps0)
    evals = 0
    while max(steps) > min_step and evals < max_evals:
        improved = False
        for i in range(len(x)):
            for delta in (steps[i], -steps[i]):
                cand = x.copy()
                cand[i] += delta
                fc = f(cand)
                evals += 1
                if fc > fx:
                    x, fx = cand, fc
                    improved = True
                    break
        if not improved:
            steps = [0.5 * s for s in steps]
    return x, fx


def _top_candidates(j: np.ndarray, count: int) -> list[tuple[float, int]]:
    flat = j.ravel()
    count = min(count, flat.size)
    idx = np.argpartition(flat, -count)[-count:]
    return [(float(flat[k]), int(k)) for k in idx]


# ---------------------------------------------------------------------------
# four-angle search, general states

def _search_full(m: np.ndarray, grid: GridSpec) -> tuple[tuple[float, float, float, float], float]:
    ra, rb, corr = _bloch(m)
    th, ph, axes = _sphere_grid(grid.theta_step, grid.phi_step)
    x = axes @ ra
    y = axes @ rb
    ha = _binary_entropy_bias(x)
    hb = _binary_entropy_bias(y)
    zfac = axes @ corr
    n = axes.shape[0]
    candidates: list[tuple[float, int]] = []
    for lo in range(0, n, _CHUNK_ROWS):
        hi = min(lo + _CHUNK_ROWS, n)
        z = zfac[lo:hi] @ axes.T
        xs = x[lo:hi, None]
        ys = y[None, :]
        hab = -(
            _plogp(0.25 * (1.0 + xs + ys + z))
            + _plogp(0.25 * (1.0 + xs - ys - z))
            + _plogp(0.25 * (1.0 - xs + ys - z))
            + _plogp(0.25 * (1.0 - xs - ys + z))
        )
        j = ha[lo:hi, None] + hb[None, :] - hab
        for val, k in _top_candidates(j, grid.refine_starts):
            candidates.append((val, (lo + k // n) * n + k % n))
    candidates.sort(reverse=True)

    def objective(angles):
        return _j_from_axes(ra, rb, corr, _axis(angles[0], angles[1]), _axis(angles[2], angles[3]))

    best_angles, best_j = None, -np.inf
    steps = (grid.theta_step, grid.phi_step, grid.theta_step, grid.phi_step)
    for _, flat in candidates[: grid.refine_starts]:
        ia, ib = divmod(flat, n)
        start = (th[ia], ph[ia], th[ib], ph[ib])
        angles, j = _coordinate_descent(objective, start, steps, grid.min_refine_step)
        if j > best_j:
            best_angles, best_j = angles, j
    return tuple(best_angles), best_j


# ---------------------------------------------------------------------------
# reduced search, X states

def _x_j_scalar(za, zb, zab, w, ta, tb) -> float:
    ca, cb = math.cos(ta), math.cos(tb)
    sa, sb = math.sin(ta), math.sin(tb)
    interf = 0.5 * sa * sb * w
    p1 = 0.25 * (1.0 + za * ca + zb * cb + zab * ca * cb) + interf
    p2 = 0.25 * (1.0 + za * ca - zb * cb - zab * ca * cb) - interf
    p3 = 0.25 * (1.0 - za * ca + zb * cb - zab * ca * cb) - interf
    p4 = 0.25 * (1.0 - za * ca - zb * cb + zab * ca * cb) + interf
    return (
        _scalar_entropy2(0.5 * (1.0 + za * ca))
        + _scalar_entropy2(0.5 * (1.0 + zb * cb))
        - _scalar_entropy4(p1, p2, p3, p4)
    )


def _search_x(x: XState, grid: GridSpec) -> tuple[tuple[float, float, float, float], float]:
    za, zb, zab = x.bloch_z_a, x.bloch_z_b, x.corr_zz
    w = x.rho14 + x.rho23
    ta = np.arange(0.0, math.pi + 1e-12, grid.theta_step)
    tb = np.arange(0.0, math.pi / 2 + 1e-12, grid.theta_step)
    ca, sa = np.cos(ta)[:, None], np.sin(ta)[:, None]
    cb, sb = np.cos(tb)[None, :], np.sin(tb)[None, :]
    interf = 0.5 * w * sa * sb
    p1 = 0.25 * (1.0 + za * ca + zb * cb + zab * ca * cb) + interf
    p2 = 0.25 * (1.0 + za * ca - zb * cb - zab * ca * cb) - interf
    p3 = 0.25 * (1.0 - za * ca + zb * cb - zab * ca * cb) - interf
    p4 = 0.25 * (1.0 - za * ca - zb * cb + zab * ca * cb) + interf
    hab = -(_plogp(p1) + _plogp(p2) + _plogp(p3) + _plogp(p4))
    j = _binary_entropy_bias(za * ca) + _binary_entropy_bias(zb * cb) - hab

    def objective(angles):
        return _x_j_scalar(za, zb, zab, w, angles[0], angles[1])

    best_pair, best_j = None, -np.inf
    for _, flat in sorted(_top_candidates(j, grid.refine_starts), reverse=True):
        ia, ib = divmod(flat, tb.size)
        pair, val = _coordinate_descent(
            objective,
            (ta[ia], tb[ib]),
            (grid.theta_step, grid.theta_step),
            grid.min_refine_step,
        )
        if val > best_j:
            best_pair, best_j = pair, val
    return (best_pair[0], 0.0, best_pair[1], 0.0), best_j


def _try_x(state: TwoQubitState) -> XState | None:
    try:
        from .qstate import as_x_state

        return as_x_state(state, tol=_X_DETECT_TOL)
    except NotXShaped:
        return None


# ---------------------------------------------------------------------------
# closed-form X quantities

def _x_entropies(x: XState) -> tuple[float, float, float]:
    """(S_A, S_B, S_AB) of an X state from closed-form eigenvalues."""
    sa = _scalar_entropy2(x.rho11 + x.rho22)
    sb = _scalar_entropy2(x.rho11 + x.rho33)
    d1 = math.hypot(x.rho11 - x.rho44, 2.0 * x.rho14)
    d2 = math.hypot(x.rho22 - x.rho33, 2.0 * x.rho23)
    eigs = [
        0.5 * (x.rho11 + x.rho44 + d1),
        0.5 * (x.rho11 + x.rho44 - d1),
        0.5 * (x.rho22 + x.rho33 + d2),
        0.5 * (x.rho22 + x.rho33 - d2),
    ]
    sab = 0.0
    for lam in eigs:
        if lam > 0.0:
            sab -= lam * math.log2(lam)
    return sa, sb, sab


# ---------------------------------------------------------------------------
# schemes

def optimal_scheme(state: TwoQubitState, grid: GridSpec | None = None) -> SchemeResult:
    """Setting maximizing the tomographic mutual information over all angles."""
    grid = grid or DEFAULT_GRID
    x = _try_x(state)
    if x is not None:
        angles, j = _search_x(x, grid)
    else:
        angles, j = _search_full(state.matrix, grid)
    setting = MeasurementSetting(*angles).canonical()
    i = quantum_mutual_information(state)
    return SchemeResult("optimal", setting, j, i - j)


def _diag_side(marginal) -> tuple[tuple[float, float], bool]:
    eigs, vecs = np.linalg.eigh(marginal.matrix)
    if eigs[1] - eigs[0] < DEGENERACY_GAP:
        return (0.0, 0.0), True
    # outcome 0 keeps the eigenvector closest to |0>, so theta <= pi/2
    v = vecs[:, 0] if abs(vecs[0, 0]) >= abs(vecs[0, 1]) else vecs[:, 1]
    theta = 2.0 * math.atan2(abs(v[1]), abs(v[0]))
    phi = (np.angle(v[1]) - np.angle(v[0])) % (2.0 * math.pi) if abs(v[1]) > 0 else 0.0
    return (theta, phi), False


def _search_one_side(
    m: np.ndarray, grid: GridSpec, free_side: str, fixed_axis: np.ndarray
) -> tuple[tuple[float, float], float]:
    ra, rb, corr = _bloch(m)
    th, ph, axes = _sphere_grid(grid.theta_step, grid.phi_step)
    if free_side == "A":
        x = axes @ ra
        y = float(fixed_axis @ rb)
        z = axes @ (corr @ fixed_axis)
        hfix = _scalar_entropy2(0.5 * (1.0 + y))
    else:
        x = axes @ rb
        y = float(fixed_axis @ ra)
        z = axes @ (corr.T @ fixed_axis)
        hfix = _scalar_entropy2(0.5 * (1.0 + y))
    hab = -(
        _plogp(0.25 * (1.0 + x + y + z))
        + _plogp(0.25 * (1.0 + x - y - z))
        + _plogp(0.25 * (1.0 - x + y - z))
        + _plogp(0.25 * (1.0 - x - y + z))
    )
    j = _binary_entropy_bias(x) + hfix - hab

    def objective(angles):
        n = _axis(angles[0], angles[1])
        if free_side == "A":
            return _j_from_axes(ra, rb, corr, n, fixed_axis)
        return _j_from_axes(ra, rb, corr, fixed_axis, n)

    best, best_j = None, -np.inf
    for _, k in sorted(_top_candidates(j, grid.refine_starts), reverse=True):
        angles, val = _coordinate_descent(
            objective,
            (th[k], ph[k]),
            (grid.theta_step, grid.phi_step),
            grid.min_refine_step,
        )
        if val > best_j:
            best, best_j = angles, val
    return tuple(best), best_j


def diagonalizing_scheme(state: TwoQubitState, grid: GridSpec | None = None) -> SchemeResult:
    """Best setting among those whose local bases diagonalize the marginals.

    A marginal with eigenvalue gap below 1e-9 leaves its side's basis free;
    that side is then searched like the optimal scheme.
    """
    grid = grid or DEFAULT_GRID
    i = quantum_mutual_information(state)
    x = _try_x(state)
    if x is not None:
        sa, sb, _ = _x_entropies(x)
        j = sa + sb - shannon_entropy(diag_tomogram(x).probs)
        return SchemeResult("diagonalizing", DIAG_SETTING, j, i - j)
    (ang_a, deg_a) = _diag_side(state.marginal_a)
    (ang_b, deg_b) = _diag_side(state.marginal_b)
    if deg_a and deg_b:
        angles, j = _search_full(state.matrix, grid)
        setting = MeasurementSetting(*angles).canonical()
    elif deg_a:
        pair, j = _search_one_side(state.matrix, grid, "A", _axis(*ang_b))
        setting = MeasurementSetting(pair[0], pair[1], ang_b[0], ang_b[1]).canonical()
    elif deg_b:
        pair, j = _search_one_side(state.matrix, grid, "B", _axis(*ang_a))
        setting = MeasurementSetting(ang_a[0], ang_a[1], pair[0], pair[1]).canonical()
    else:
        setting = MeasurementSetting(ang_a[0], ang_a[1], ang_b[0], ang_b[1]).canonical()
        ra, rb, corr = _bloch(state.matrix)
        j = _j_from_axes(ra, rb, corr, _axis(*ang_a), _axis(*ang_b))
    return SchemeResult("diagonalizing", setting, j, i - j)


def _uniform_family(r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal pair spanning the axes with unbiased outcomes.

    For a vanishing marginal Bloch vector every axis qualifies; the family is
    then pinned to the equator, which reproduces the X-state closed form.
    """
    norm = np.linalg.norm(r)
    if norm < 1e-12:
        return np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
    rh = r / norm
    seed = np.array([0.0, 0.0, 1.0]) if abs(rh[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    e1 = np.cross(rh, seed)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(rh, e1)


def symmetrizing_scheme(state: TwoQubitState, grid: GridSpec | None = None) -> SchemeResult:
    """Best setting among those with both marginal tomograms uniform."""
    grid = grid or DEFAULT_GRID
    i = quantum_mutual_information(state)
    x = _try_x(state)
    if x is not None:
        j = 2.0 - shannon_entropy(sym_tomogram(x).probs)
        return SchemeResult("symmetrizing", SYM_SETTING, j, i - j)
    ra, rb, corr = _bloch(state.matrix)
    ea1, ea2 = _uniform_family(ra)
    eb1, eb2 = _uniform_family(rb)
    psis = np.arange(0.0, 2.0 * math.pi - 1e-12, grid.phi_step)
    cos_p, sin_p = np.cos(psis), np.sin(psis)
    axes_a = cos_p[:, None] * ea1 + sin_p[:, None] * ea2
    axes_b = cos_p[:, None] * eb1 + sin_p[:, None] * eb2
    x_bias = axes_a @ ra
    y_bias = axes_b @ rb
    z = (axes_a @ corr) @ axes_b.T
    xs, ys = x_bias[:, None], y_bias[None, :]
    hab = -(
        _plogp(0.25 * (1.0 + xs + ys + z))
        + _plogp(0.25 * (1.0 + xs - ys - z))
        + _plogp(0.25 * (1.0 - xs + ys - z))
        + _plogp(0.25 * (1.0 - xs - ys + z))
    )
    j_grid = (
        _binary_entropy_bias(x_bias)[:, None] + _binary_entropy_bias(y_bias)[None, :] - hab
    )

    def objective(ps):
        na = math.cos(ps[0]) * ea1 + math.sin(ps[0]) * ea2
        nb = math.cos(ps[1]) * eb1 + math.sin(ps[1]) * eb2
        return _j_from_axes(ra, rb, corr, na, nb)

    best, best_j = None, -np.inf
    for _, flat in sorted(_top_candidates(j_grid, grid.refine_starts), reverse=True):
        ia, ib = divmod(flat, psis.size)
        pair, val = _coordinate_descent(
            objective,
            (psis[ia], psis[ib]),
            (grid.phi_step, grid.phi_step),
            grid.min_refine_step,
        )
        if val > best_j:
            best, best_j = pair, val
    na = math.cos(best[0]) * ea1 + math.sin(best[0]) * ea2
    nb = math.cos(best[1]) * eb1 + math.sin(best[1]) * eb2
    ta, pa = _axis_angles(na)
    tb, pb = _axis_angles(nb)
    setting = MeasurementSetting(ta, pa, tb, pb).canonical()
    return SchemeResult("symmetrizing", setting, best_j, i - best_j)


# ---------------------------------------------------------------------------
# one-sided measured discord

def canonical_discord(
    state: TwoQubitState, side: str, grid: GridSpec | None = None
) -> CanonicalResult:
    """Discord under the best projective measurement on one side.

    The post-measurement mutual information equals the entropy of the kept
    marginal minus the average conditional entropy; it is maximized over the
    measurement axis with the same grid-plus-descent protocol on two angles.
    """
    grid = grid or DEFAULT_GRID
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    m = state.matrix
    r = m.reshape(2, 2, 2, 2)
    if side == "B":
        keep = state.marginal_a
        k_ops = np.einsum("abcd,jdb->jac", r, _PAULI)
    else:
        keep = state.marginal_b
        k_ops = np.einsum("abcd,jca->jbd", r, _PAULI)
    s_keep = von_neumann_entropy(keep)
    half = keep.matrix / 2.0

    th, ph, axes = _sphere_grid(grid.theta_step, grid.phi_step)

    def post_mi_batch(axes_arr: np.ndarray) -> np.ndarray:
        kn = np.tensordot(axes_arr, k_ops, axes=(1, 0)) / 2.0
        total = 0.0
        for sign in (1.0, -1.0):
            blk = half + sign * kn
            a = blk[..., 0, 0].real
            b = blk[..., 1, 1].real
            c = blk[..., 0, 1]
            disc = np.sqrt((a - b) ** 2 + 4.0 * (c.real**2 + c.imag**2))
            lam1 = np.maximum(0.5 * (a + b + disc), 0.0)
            lam2 = np.maximum(0.5 * (a + b - disc), 0.0)
            pb = a + b
            total = total + _plogp(lam1) + _plogp(lam2) - _plogp(pb)
        return s_keep + total

    mi = post_mi_batch(axes)

    def objective(angles):
        return float(post_mi_batch(_axis(angles[0], angles[1])[None, :])[0])

    best, best_mi = None, -np.inf
    for _, k in sorted(_top_candidates(mi, grid.refine_starts), reverse=True):
        angles, val = _coordinate_descent(
            objective,
            (th[k], ph[k]),
            (grid.theta_step, grid.phi_step),
            grid.min_refine_step,
        )
        if val > best_mi:
            best, best_mi = angles, val
    i = quantum_mutual_information(state)
    cset = MeasurementSetting(best[0], best[1], 0.0, 0.0).canonical()
    return CanonicalResult(side, cset.theta_a, cset.phi_a, best_mi, i - best_mi)


# ---------------------------------------------------------------------------
# entanglement

_SY_SY = np.kron(
    np.array([[0.0, -1.0j], [1.0j, 0.0]]), np.array([[0.0, -1.0j], [1.0j, 0.0]])
).real


def concurrence(state: TwoQubitState) -> float:
    """Concurrence of a two-qubit state."""
    m = state.matrix
    prod = m @ _SY_SY @ m.conj() @ _SY_SY
    lam = np.sqrt(np.maximum(np.linalg.eigvals(prod).real, 0.0))
    lam[::-1].sort()
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def entanglement_of_formation(state: TwoQubitState) -> float:
    """Entanglement of formation in bits, from the concurrence."""
    c = min(concurrence(state), 1.0)
    return _scalar_entropy2(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


# ---------------------------------------------------------------------------
# X-state min rule and the full report

def x_optimal_discord(x: XState) -> XOptimalResult:
    """min(D_diag, D_sym) with the achieving scheme; ties resolve to diag."""
    sa, sb, sab = _x_entropies(x)
    i = sa + sb - sab
    d_diag = i - (sa + sb - shannon_entropy(diag_tomogram(x).probs))
    d_sym = i - (2.0 - shannon_entropy(sym_tomogram(x).probs))
    value = min(d_diag, d_sym)
    if d_diag <= d_sym + SCHEME_TIE_TOL:
        winner, subclass = "diagonalizing", "asymmetric"
    else:
        winner, subclass = "symmetrizing", "symmetric"
    return XOptimalResult(value, winner, subclass, d_diag, d_sym)


def full_report(
    state: TwoQubitState, grid: GridSpec | None = None, alpha: float | None = None
) -> CorrelationReport:
    """Compute every reported measure for one state."""
    grid = grid or DEFAULT_GRID
    x = _try_x(state)
    opt = optimal_scheme(state, grid)
    diag = diagonalizing_scheme(state, grid)
    sym = symmetrizing_scheme(state, grid)
    can_a = canonical_discord(state, "A", grid)
    can_b = canonical_discord(state, "B", grid)
    return CorrelationReport(
        mutual_information=quantum_mutual_information(state),
        discord_optimal=opt.discord,
        discord_diagonalizing=diag.discord,
        discord_symmetrizing=sym.discord,
        discord_measured_a=can_a.discord,
        discord_measured_b=can_b.discord,
        entanglement=entanglement_of_formation(state),
        asymmetry_quantum=quantum_asymmetry(state).asymmetry,
        asymmetry_diag=tomographic_asymmetry(state, diag.setting).asymmetry,
        asymmetry_optimal=tomographic_asymmetry(state, opt.setting).asymmetry,
        alpha=alpha,
        subclass=x_optimal_discord(x).subclass if x is not None else None,
        optimal_setting=opt.setting,
    )
