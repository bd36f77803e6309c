"""Fixed-size complex matrix algebra and the Bloch/Fano machinery.

Everything here operates on small dense ``numpy`` arrays: 2x2 and 4x4
complex matrices, 3-vectors and the 3x3 correlation matrix of a two-qubit
state. Eigen work is delegated to LAPACK through ``numpy.linalg``; the
functions in this module add the Hermiticity/PSD gates and the error
vocabulary the rest of the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidStateError,
    NoConvergenceError,
    NonRealBlochComponentError,
    NotHermitianError,
    NotPSDError,
)
from .tolerances import (
    BLOCH_IMAG_ATOL,
    DENSITY_HERM_ATOL,
    DENSITY_PSD_CLIP,
    DENSITY_TRACE_ATOL,
    HERM_EIG_ATOL,
    SQRT_PSD_REJECT,
)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)

# Stacked operator bases for Bloch-vector and correlation-matrix traces:
# SIG_A[j] = sigma_j (x) 1, SIG_B[j] = 1 (x) sigma_j, SIG_AB[m, n] =
# sigma_m (x) sigma_n.
SIG_A = np.stack([np.kron(s, ID2) for s in PAULIS])
SIG_B = np.stack([np.kron(ID2, s) for s in PAULIS])
SIG_AB = np.stack([np.stack([np.kron(sm, sn) for sn in PAULIS]) for sm in PAULIS])

# sigma_y (x) sigma_y, used by the spin flip in the concurrence.
YY = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass
class FanoForm:
    """Bloch-vector parametrization of a two-qubit state.

    Attributes
    ----------
    x : (3,) float array
        Bloch vector of subsystem a, x_j = Tr(rho (sigma_j (x) 1)).
    y : (3,) float array
        Bloch vector of subsystem b, y_j = Tr(rho (1 (x) sigma_j)).
    t : (3, 3) float array
        Correlation matrix, t_mn = Tr(rho (sigma_m (x) sigma_n)).
    """

    x: np.ndarray
    y: np.ndarray
    t: np.ndarray


@dataclass
class CanonicalForm:
    """Local-rotation frame in which the correlation matrix is diagonal.

    ``o_a @ t @ o_b.T == diag(c)`` with both rotations proper
    (determinant +1); the sign freedom is absorbed into ``c``, so the
    entries of ``c`` are signed singular values ordered by decreasing
    magnitude.
    """

    c: np.ndarray
    x_rot: np.ndarray
    y_rot: np.ndarray
    o_a: np.ndarray
    o_b: np.ndarray


def herm_eig(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : square complex array
        Must satisfy max|m - m^dag| <= 1e-8.

    Returns
    -------
    (w, v)
        Eigenvalues ``w`` in ascending order and orthonormal eigenvectors
        as the columns of ``v``.

    Raises
    ------
    NotHermitianError
        If the Hermiticity gate fails.
    NoConvergenceError
        If the underlying iteration does not converge.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > HERM_EIG_ATOL:
        raise NotHermitianError(f"max |M - M^dag| = {dev:.3e} exceeds {HERM_EIG_ATOL:.0e}")
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return w, v


def mat_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root S of a Hermitian PSD matrix, S @ S = m.

    Eigenvalues in [-1e-8, 0) are clipped to zero; anything more negative
    raises :class:`NotPSDError`.
    """
    w, v = herm_eig(m)
    if w[0] < -SQRT_PSD_REJECT:
        raise NotPSDError(f"least eigenvalue {w[0]:.3e} below -{SQRT_PSD_REJECT:.0e}")
    w = np.clip(w, 0.0, None)
    s = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (s + s.conj().T)


def trace_norm(m: np.ndarray) -> float:
    """Trace norm of a Hermitian matrix: the sum of |eigenvalues|."""
    w, _ = herm_eig(m)
    return float(np.abs(w).sum())


def hs_norm_sq(m: np.ndarray) -> float:
    """Squared Hilbert-Schmidt norm Tr(M M^dag) = sum |m_ij|^2."""
    m = np.asarray(m)
    return float(np.sum(np.abs(m) ** 2))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product (row-major convention, subsystem a first)."""
    return np.kron(a, b)


def as_density_matrix(m: np.ndarray) -> np.ndarray:
    """Validate (and lightly repair) a candidate two-qubit density matrix.

    Checks shape, finiteness, Hermiticity, unit trace and positive
    semidefiniteness. Eigenvalues in [-1e-10, 0) -- harmless rounding
    debris from renormalized evolution -- are clipped to zero and the
    matrix is rebuilt; more negative spectra are rejected.

    Returns the validated 4x4 complex array.

    Raises
    ------
    InvalidStateError
        With ``invariant`` set to one of ``"shape"``, ``"finite"``,
        ``"hermitian"``, ``"trace"`` or ``"psd"``.
    """
    arr = np.array(m, dtype=complex)
    if arr.shape != (4, 4):
        raise InvalidStateError("shape", f"got {arr.shape}, need (4, 4)")
    if not np.all(np.isfinite(arr.view(float))):
        raise InvalidStateError("finite")
    dev = np.abs(arr - arr.conj().T).max()
    if dev > DENSITY_HERM_ATOL:
        raise InvalidStateError("hermitian", f"max |m - m^dag| = {dev:.3e}")
    tr = arr.trace()
    if abs(tr - 1.0) > DENSITY_TRACE_ATOL:
        raise InvalidStateError("trace", f"Tr m = {tr:.12g}")
    w, v = np.linalg.eigh(arr)
    if w[0] < -DENSITY_PSD_CLIP:
        raise InvalidStateError("psd", f"least eigenvalue {w[0]:.3e}")
    if w[0] < 0.0:
        w = np.clip(w, 0.0, None)
        arr = (v * w) @ v.conj().T
        arr /= arr.trace().real
        arr = 0.5 * (arr + arr.conj().T)
    return arr


def fano_decompose(rho: np.ndarray) -> FanoForm:
    """Bloch vectors and correlation matrix of a two-qubit state.

    The defining traces are real for any valid state; imaginary residue up
    to 1e-10 is discarded, anything beyond 1e-8 raises
    :class:`NonRealBlochComponentError`.
    """
    rho = np.asarray(rho, dtype=complex)
    x = np.einsum("ij,kji->k", rho, SIG_A)
    y = np.einsum("ij,kji->k", rho, SIG_B)
    t = np.einsum("ij,mnji->mn", rho, SIG_AB)
    worst = max(np.abs(x.imag).max(), np.abs(y.imag).max(), np.abs(t.imag).max())
    if worst > BLOCH_IMAG_ATOL:
        raise NonRealBlochComponentError(f"imaginary part {worst:.3e} exceeds {BLOCH_IMAG_ATOL:.0e}")
    return FanoForm(x=x.real, y=y.real, t=t.real)


def fano_compose(f: FanoForm) -> np.ndarray:
    """Rebuild the 4x4 matrix from a Fano form (the exact inverse of
    :func:`fano_decompose`).

    No positivity validation is performed: synthesizing a state from an
    arbitrary (x, y, t) may leave the PSD check to the caller.
    """
    rho = ID4.copy()
    rho += np.einsum("k,kij->ij", f.x, SIG_A)
    rho += np.einsum("k,kij->ij", f.y, SIG_B)
    rho += np.einsum("mn,mnij->ij", f.t, SIG_AB)
    return 0.25 * rho


def canonicalize(f: FanoForm) -> CanonicalForm:
    """Rotate a Fano form into the frame where the correlation matrix is
    diagonal.

    Built on the SVD of ``t`` with the sign of any improper factor pushed
    into the diagonal, so both returned rotations are proper
    (det = +1) and correspond to local unitaries on the qubits.
    """
    u, s, vt = np.linalg.svd(np.asarray(f.t, dtype=float))
    det_u = float(np.sign(np.linalg.det(u)))
    det_v = float(np.sign(np.linalg.det(vt)))
    flip_a = np.diag([1.0, 1.0, det_u])
    flip_b = np.diag([1.0, 1.0, det_v])
    o_a = flip_a @ u.T
    o_b = flip_b @ vt
    c = s * np.array([1.0, 1.0, det_u * det_v])
    return CanonicalForm(c=c, x_rot=o_a @ f.x, y_rot=o_b @ f.y, o_a=o_a, o_b=o_b)
