"""Correlation quantifiers for two-qubit states.

Four quantities are computed: Wootters concurrence, measurement-induced
nonlocality in the squared Hilbert-Schmidt norm (hs_min) and in the trace
norm (trace_min), and the maximal CHSH/Bell function. Each of the last
three exists in two modes:

* ``FAITHFUL`` -- the definitional value. hs_min carries the 1/4
  prefactor that makes the Bloch-space expression agree with the
  operator-norm definition (verified against the brute-force optimizer);
  the Bell function is the Horodecki value 2*sqrt(u1 + u2), whose
  violation threshold is 2.
* ``PAPER_RAW`` -- the same expressions with literal prefactors as
  commonly printed (no 1/4 on hs_min; sqrt(2)*(u1 + u2) for the Bell
  function; trace_min evaluated directly from the raw diagonal of the
  correlation matrix and the raw Bloch vector, without rotating to the
  canonical frame). These reproduce published dynamics curves such as
  the trace-MIN plateau near 0.5.

The measurement optimization behind the MIN quantities ranges over the
projective measurements on qubit a that leave its marginal unchanged:
the unique marginal eigenbasis when the Bloch vector x is nonzero, every
direction when x = 0. :func:`min_bruteforce` performs that optimization
numerically at the operator level and is the ground truth the closed
expressions are tested against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    ID2,
    PAULIS,
    YY,
    fano_decompose,
    herm_eig,
    hs_norm_sq,
    mat_sqrt_psd,
    trace_norm,
)
from .tolerances import (
    CONCURRENCE_SPECTRUM_CLIP,
    DIRECTION_NORM_ATOL,
    FIB_GRID_POINTS,
    REFINE_ANGLE_TOL,
    X_TOL_DEFAULT,
)

_PAULI_STACK = np.stack(PAULIS)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class MeasureMode(enum.Enum):
    FAITHFUL = "faithful"
    PAPER_RAW = "paper"

    @classmethod
    def parse(cls, name: str) -> "MeasureMode":
        for mode in cls:
            if mode.value == name:
                return mode
        raise ValueError(f"unknown measure mode {name!r} (use 'faithful' or 'paper')")


@dataclass(frozen=True)
class MeasureReport:
    """The four quantifiers of one state, tagged with the producing mode."""

    concurrence: float
    hs_min: float
    trace_min: float
    bell: float
    mode: MeasureMode
    argmax_direction: np.ndarray | None = None


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit state.

    Computes the spin-flipped state rho~ = (sy (x) sy) rho* (sy (x) sy),
    the Hermitian PSD matrix R = sqrt(rho) rho~ sqrt(rho) (isospectral to
    rho rho~ but safe for a Hermitian solver), takes the square roots
    eps_i of its eigenvalues in decreasing order and returns
    max(0, eps_1 - eps_2 - eps_3 - eps_4).
    """
    rho = np.asarray(rho, dtype=complex)
    flipped = YY @ rho.conj() @ YY
    root = mat_sqrt_psd(rho)
    r = root @ flipped @ root
    r = 0.5 * (r + r.conj().T)
    w, _ = herm_eig(r)
    w = np.clip(w, 0.0, None)
    w[w < CONCURRENCE_SPECTRUM_CLIP * w[-1]] = 0.0
    eps = np.sqrt(w)[::-1]
    return float(max(0.0, eps[0] - eps[1] - eps[2] - eps[3]))


def post_measurement(rho: np.ndarray, direction: np.ndarray) -> np.ndarray:
    """Apply the projective measurement along a Bloch direction to qubit a.

    Returns sum_k (P_k (x) 1) rho (P_k (x) 1) for the rank-1 projectors
    P_+/- = (1 +/- n.sigma)/2. Idempotent by construction.
    """
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > DIRECTION_NORM_ATOL:
        raise ValueError("direction must be a unit 3-vector")
    p_plus = 0.5 * (ID2 + n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2])
    p_minus = ID2 - p_plus
    a = np.kron(p_plus, ID2)
    b = np.kron(p_minus, ID2)
    rho = np.asarray(rho, dtype=complex)
    return a @ rho @ a + b @ rho @ b


def locally_invariant_directions(rho: np.ndarray, x_tol: float = X_TOL_DEFAULT):
    """Measurement directions on qubit a that leave its marginal unchanged.

    Returns the unique unit direction (the marginal's Bloch axis) when
    ||x|| > x_tol, or ``None`` when the marginal is maximally mixed and
    every direction qualifies.
    """
    x = fano_decompose(rho).x
    nx = float(np.linalg.norm(x))
    if nx > x_tol:
        return x / nx
    return None


def _disturbance(rho: np.ndarray, direction: np.ndarray, norm: str) -> float:
    residual = rho - post_measurement(rho, direction)
    if norm == "hs":
        return hs_norm_sq(residual)
    return trace_norm(residual)


def _fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic quasi-uniform unit directions (n, 3)."""
    i = np.arange(n)
    z = 1.0 - 2.0 * (i + 0.5) / n
    theta = 2.0 * np.pi * i * _GOLDEN
    s = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    return np.stack([s * np.cos(theta), s * np.sin(theta), z], axis=1)


def _disturbance_grid(rho: np.ndarray, dirs: np.ndarray, norm: str) -> np.ndarray:
    """Vectorized operator-level disturbance over a stack of directions."""
    n = dirs.shape[0]
    p_plus = 0.5 * np.eye(2, dtype=complex) + 0.5 * np.einsum("nk,kij->nij", dirs, _PAULI_STACK)
    p_minus = np.eye(2, dtype=complex) - p_plus
    a = np.zeros((n, 4, 4), dtype=complex)
    b = np.zeros((n, 4, 4), dtype=complex)
    a[:, 0::2, 0::2] = p_plus
    a[:, 1::2, 1::2] = p_plus
    b[:, 0::2, 0::2] = p_minus
    b[:, 1::2, 1::2] = p_minus
    measured = a @ rho @ a + b @ rho @ b
    residual = rho - measured
    if norm == "hs":
        return np.sum(np.abs(residual) ** 2, axis=(1, 2))
    residual = 0.5 * (residual + residual.conj().transpose(0, 2, 1))
    return np.abs(np.linalg.eigvalsh(residual)).sum(axis=1)


def _golden_max(fun, lo: float, hi: float, tol: float) -> float:
    """Golden-section maximizer of a unimodal function on [lo, hi]."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
    return 0.5 * (a + b)


def _angles(direction: np.ndarray) -> tuple[float, float]:
    theta = math.acos(max(-1.0, min(1.0, direction[2])))
    phi = math.atan2(direction[1], direction[0])
    return theta, phi


def _from_angles(theta: float, phi: float) -> np.ndarray:
    s = math.sin(theta)
    return np.array([s * math.cos(phi), s * math.sin(phi), math.cos(theta)])


def min_bruteforce(
    rho: np.ndarray,
    norm: str = "hs",
    *,
    grid_points: int = FIB_GRID_POINTS,
    angle_tol: float = REFINE_ANGLE_TOL,
    x_tol: float = X_TOL_DEFAULT,
) -> tuple[float, np.ndarray]:
    """Ground-truth MIN optimizer at the operator level.

    For a state with nonzero marginal Bloch vector x the admissible
    measurement is unique and is evaluated directly. For x = 0 the
    disturbance is maximized over the unit sphere: a Fibonacci lattice of
    ``grid_points`` directions followed by alternating golden-section
    refinement of the two spherical angles down to ``angle_tol`` radians.
    Entirely deterministic.

    Parameters
    ----------
    norm : "hs" or "trace"
        Squared Hilbert-Schmidt norm or trace norm of rho - Pi(rho).

    Returns
    -------
    (value, direction)
        The maximal disturbance and the direction achieving it.
    """
    if norm not in ("hs", "trace"):
        raise ValueError(f"norm must be 'hs' or 'trace', got {norm!r}")
    rho = np.asarray(rho, dtype=complex)
    d = locally_invariant_directions(rho, x_tol=x_tol)
    if d is not None:
        return _disturbance(rho, d, norm), d

    dirs = _fibonacci_sphere(grid_points)
    values = _disturbance_grid(rho, dirs, norm)
    best = int(np.argmax(values))
    theta, phi = _angles(dirs[best])
    # Bracket one lattice spacing around the best grid point and polish.
    spacing = 2.0 / math.sqrt(grid_points)
    for _ in range(3):
        theta = _golden_max(
            lambda t: _disturbance(rho, _from_angles(t, phi), norm),
            theta - spacing,
            theta + spacing,
            angle_tol,
        )
        phi = _golden_max(
            lambda p: _disturbance(rho, _from_angles(theta, p), norm),
            phi - spacing,
            phi + spacing,
            angle_tol,
        )
        spacing = max(spacing * 0.25, angle_tol)
    direction = _from_angles(theta, phi)
    return _disturbance(rho, direction, norm), direction


def hs_min(rho: np.ndarray, mode: MeasureMode, x_tol: float = X_TOL_DEFAULT) -> float:
    """Measurement-induced nonlocality in the squared Hilbert-Schmidt norm.

    FAITHFUL evaluates (1/4) [Tr(T T^t) - x^t T T^t x / ||x||^2] for
    x != 0 and (1/4) [Tr(T T^t) - lambda_min(T T^t)] for x = 0; the 1/4
    restores agreement with the operator-norm definition. PAPER_RAW drops
    the 1/4.
    """
    f = fano_decompose(rho)
    ttt = f.t @ f.t.T
    nx = float(np.linalg.norm(f.x))
    if nx > x_tol:
        raw = float(np.trace(ttt) - f.x @ ttt @ f.x / (nx * nx))
    else:
        w, _ = herm_eig(ttt)
        raw = float(np.trace(ttt).real - w[0])
    return raw / 4.0 if mode is MeasureMode.FAITHFUL else raw


def trace_min(rho: np.ndarray, mode: MeasureMode, x_tol: float = X_TOL_DEFAULT) -> float:
    """Measurement-induced nonlocality in the trace norm.

    FAITHFUL: for x != 0 the admissible measurement is unique, so the
    definitional value ||rho - Pi_x(rho)||_1 is computed outright; for
    x = 0 the maximum equals the largest singular value of the
    correlation matrix. PAPER_RAW: the literature's chi formula evaluated
    with the raw diagonal c_i = T_ii, the raw Bloch vector x and
    Euclidean norms throughout, with no canonicalization -- the reading
    that reproduces published plateau curves.
    """
    f = fano_decompose(rho)
    nx = float(np.linalg.norm(f.x))
    if mode is MeasureMode.FAITHFUL:
        if nx > x_tol:
            return trace_norm(rho - post_measurement(rho, f.x / nx))
        return float(np.linalg.svd(f.t, compute_uv=False)[0])
    c = np.diagonal(f.t).copy()
    if nx <= x_tol:
        return float(np.max(np.abs(c)))
    x2 = f.x * f.x
    c2 = c * c
    alpha = float(c2.sum() * nx * nx - (c2 * x2).sum())
    beta = float(x2[0] * c2[1] * c2[2] + x2[1] * c2[2] * c2[0] + x2[2] * c2[0] * c2[1])
    half = 2.0 * math.sqrt(beta) * nx
    chi_plus = max(alpha + half, 0.0)
    chi_minus = max(alpha - half, 0.0)
    return (math.sqrt(chi_plus) + math.sqrt(chi_minus)) / (2.0 * nx)


def bell_max(rho: np.ndarray, mode: MeasureMode) -> float:
    """Maximal CHSH/Bell function.

    With u1 >= u2 >= u3 the eigenvalues of T^t T: FAITHFUL returns the
    Horodecki value 2*sqrt(u1 + u2) (violation iff > 2); PAPER_RAW
    returns sqrt(2)*(u1 + u2).
    """
    f = fano_decompose(rho)
    w, _ = herm_eig(f.t.T @ f.t)
    s = float(max(w[-1] + w[-2], 0.0))
    if mode is MeasureMode.FAITHFUL:
        return 2.0 * math.sqrt(s)
    return math.sqrt(2.0) * s


def measure_all(
    rho: np.ndarray, mode: MeasureMode, x_tol: float = X_TOL_DEFAULT
) -> MeasureReport:
    """Bundle all four quantifiers of a state into one report."""
    direction = locally_invariant_directions(rho, x_tol=x_tol)
    return MeasureReport(
        concurrence=concurrence(rho),
        hs_min=hs_min(rho, mode, x_tol=x_tol),
        trace_min=trace_min(rho, mode, x_tol=x_tol),
        bell=bell_max(rho, mode),
        mode=mode,
        argmax_direction=direction,
    )
