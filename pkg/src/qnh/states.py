"""Initial-state factories and closed-form evolved states.

Four families are supported: the pure superpositions a|00> + b|11> and
a|01> + b|10>, and their Werner-like mixtures r|Bell><Bell| + (1-r)/4 I.
For each family the full 4x4 evolved density matrix under the local
non-Hermitian propagator is available in closed form, expressed through
the regime-safe kernels (C, S) so a single expression covers the
oscillatory, exceptional and broken regimes. The closed forms serve as
an independent cross-check of the generic evolution engine (and vice
versa).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import kernel_cs
from .errors import NormalizationError, PurityOutOfRangeError
from .linalg import ID4, as_density_matrix

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_PURE_KINDS = ("phi", "psi")
_MIXED_KINDS = ("mixed_phi", "mixed_psi")


@dataclass(frozen=True)
class StateFamily:
    """One of the four supported initial-state families.

    Use the classmethod constructors; they validate the parameters.
    ``a``/``b`` may be complex for the pure families (the closed-form
    evolved matrices below are written for real coefficients only, the
    generic engine handles the rest).
    """

    kind: str
    a: complex | None = None
    b: complex | None = None
    r: float | None = None

    @classmethod
    def pure_phi(cls, a, b) -> "StateFamily":
        _check_norm(a, b)
        return cls(kind="phi", a=complex(a), b=complex(b))

    @classmethod
    def pure_psi(cls, a, b) -> "StateFamily":
        _check_norm(a, b)
        return cls(kind="psi", a=complex(a), b=complex(b))

    @classmethod
    def mixed_phi(cls, r: float) -> "StateFamily":
        _check_r(r)
        return cls(kind="mixed_phi", r=float(r))

    @classmethod
    def mixed_psi(cls, r: float) -> "StateFamily":
        _check_r(r)
        return cls(kind="mixed_psi", r=float(r))

    def label(self) -> str:
        if self.kind in _PURE_KINDS:
            return f"{self.kind}(a={self.a:.6g}, b={self.b:.6g})"
        return f"{self.kind}(r={self.r:.6g})"


def _check_norm(a, b):
    n = abs(complex(a)) ** 2 + abs(complex(b)) ** 2
    if abs(n - 1.0) > 1e-12:
        raise NormalizationError(f"|a|^2 + |b|^2 = {n:.12g}, expected 1")


def _check_r(r):
    r = float(r)
    if not math.isfinite(r) or not 0.0 <= r <= 1.0:
        raise PurityOutOfRangeError(f"r = {r!r} outside [0, 1]")


def make_initial(f: StateFamily) -> np.ndarray:
    """Build the initial density matrix of a family."""
    if f.kind == "phi":
        v = np.array([f.a, 0.0, 0.0, f.b], dtype=complex)
        return as_density_matrix(np.outer(v, v.conj()))
    if f.kind == "psi":
        v = np.array([0.0, f.a, f.b, 0.0], dtype=complex)
        return as_density_matrix(np.outer(v, v.conj()))
    if f.kind in _MIXED_KINDS:
        bell = make_initial(
            StateFamily.pure_phi(_INV_SQRT2, _INV_SQRT2)
            if f.kind == "mixed_phi"
            else StateFamily.pure_psi(_INV_SQRT2, _INV_SQRT2)
        )
        return as_density_matrix(f.r * bell + (1.0 - f.r) / 4.0 * ID4)
    raise ValueError(f"unknown family kind {f.kind!r}")


def _check_real_pair(a: float, b: float):
    if isinstance(a, complex) or isinstance(b, complex):
        raise ValueError("closed forms are written for real coefficients")
    if abs(a * a + b * b - 1.0) > 1e-12:
        raise NormalizationError(f"a^2 + b^2 = {a * a + b * b:.12g}, expected 1")


def closed_phi(a: float, b: float, gamma_tilde: float, tau: float) -> np.ndarray:
    """Closed-form evolved state of a|00> + b|11| (real a, b).

    All sixteen entries are polynomial in the kernels C, S and are divided
    by the norm M = M1 + M2 accumulated from the diagonal.
    """
    _check_real_pair(a, b)
    c, s = kernel_cs(gamma_tilde, tau)
    g = gamma_tilde
    e1 = c - g * s
    e2 = c + g * s
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = a * a * e1 * e1
    rho[1, 1] = b * b * s * s
    rho[2, 2] = a * a * s * s
    rho[3, 3] = b * b * e2 * e2
    rho[0, 1] = 1j * a * b * s * (g * s - c)
    rho[0, 2] = 1j * a * a * s * (g * s - c)
    rho[0, 3] = a * b * (c * c - g * g * s * s)
    rho[1, 2] = a * b * s * s
    rho[1, 3] = 1j * b * b * s * (g * s + c)
    rho[2, 3] = 1j * a * b * s * (g * s + c)
    _fill_lower(rho)
    m1 = a * a * e1 * e1 + b * b * s * s
    m2 = a * a * s * s + b * b * e2 * e2
    return as_density_matrix(rho / (m1 + m2))


def closed_psi(a: float, b: float, gamma_tilde: float, tau: float) -> np.ndarray:
    """Closed-form evolved state of a|01> + b|10> (real a, b)."""
    _check_real_pair(a, b)
    c, s = kernel_cs(gamma_tilde, tau)
    g = gamma_tilde
    e1 = c - g * s
    e2 = c + g * s
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = b * b * s * s
    rho[1, 1] = a * a * e1 * e1
    rho[2, 2] = b * b * e2 * e2
    rho[3, 3] = a * a * s * s
    rho[0, 1] = 1j * a * b * s * (c - g * s)
    rho[0, 2] = 1j * b * b * s * (g * s + c)
    rho[0, 3] = a * b * s * s
    rho[1, 2] = a * b * (c * c - g * g * s * s)
    rho[1, 3] = 1j * a * a * s * (g * s - c)
    rho[2, 3] = -1j * a * b * s * (g * s + c)
    _fill_lower(rho)
    m = (a * a * (e1 * e1 + s * s) + b * b * (e2 * e2 + s * s))
    return as_density_matrix(rho / m)


def closed_mixed_phi(r: float, gamma_tilde: float, tau: float) -> np.ndarray:
    """Closed-form evolved state of r|Phi+><Phi+| + (1-r)/4 I.

    The raw entries below are not trace normalized (their trace is
    C^2 + (1 + gamma_tilde^2) S^2), so the matrix is divided by its own
    trace, exactly as the generic engine divides by the evolved norm.
    """
    _check_r(r)
    c, s = kernel_cs(gamma_tilde, tau)
    g = gamma_tilde
    e1 = c - g * s
    e2 = c + g * s
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = ((1 + r) * e1 * e1 + (1 - r) * s * s) / 4.0
    rho[1, 1] = ((1 + r) * s * s + (1 - r) * e1 * e1) / 4.0
    rho[2, 2] = ((1 + r) * s * s + (1 - r) * e2 * e2) / 4.0
    rho[3, 3] = ((1 + r) * e2 * e2 + (1 - r) * s * s) / 4.0
    rho[0, 1] = 0.5j * r * s * (g * s - c)
    rho[0, 2] = 0.5j * s * (g * s - r * c)
    rho[0, 3] = 0.5 * r * (c * c - g * g * s * s)
    rho[1, 2] = 0.5 * r * s * s
    rho[1, 3] = 0.5j * s * (g * s + r * c)
    rho[2, 3] = 0.5j * r * s * (g * s + c)
    _fill_lower(rho)
    return as_density_matrix(rho / rho.trace().real)


def closed_mixed_psi(r: float, gamma_tilde: float, tau: float) -> np.ndarray:
    """Closed-form evolved state of r|Psi+><Psi+| + (1-r)/4 I.

    Normalization as in :func:`closed_mixed_phi`.
    """
    _check_r(r)
    c, s = kernel_cs(gamma_tilde, tau)
    g = gamma_tilde
    e1 = c - g * s
    e2 = c + g * s
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = ((1 + r) * s * s + (1 - r) * e1 * e1) / 4.0
    rho[1, 1] = ((1 + r) * e1 * e1 + (1 - r) * s * s) / 4.0
    rho[2, 2] = ((1 + r) * e2 * e2 + (1 - r) * s * s) / 4.0
    rho[3, 3] = ((1 + r) * s * s + (1 - r) * e2 * e2) / 4.0
    rho[0, 1] = 0.5j * r * s * (c - g * s)
    rho[0, 2] = 0.5j * s * (g * s + r * c)
    rho[0, 3] = 0.5 * r * s * s
    rho[1, 2] = 0.5 * r * (c * c - g * g * s * s)
    rho[1, 3] = 0.5j * s * (g * s - r * c)
    rho[2, 3] = -0.5j * r * s * (g * s + c)
    _fill_lower(rho)
    return as_density_matrix(rho / rho.trace().real)


def _fill_lower(rho: np.ndarray):
    """Complete the strict lower triangle by Hermitian symmetry."""
    for i in range(4):
        for j in range(i + 1, 4):
            rho[j, i] = rho[i, j].conjugate()
