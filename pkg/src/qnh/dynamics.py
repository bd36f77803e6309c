"""Single-qubit non-Hermitian dynamics acting locally on a two-qubit state.

The generator is H = -i*gamma*sigma_z - Delta*sigma_x. Only the two
dimensionless combinations gamma_tilde = gamma/Delta and tau = Delta*t
enter any observable, so that is the parametrization used throughout.
The propagator exp(-i H t) is evaluated in closed form through the
regime-safe kernels of :func:`kernel_cs`; because the evolution is not
trace preserving, the evolved two-qubit state is renormalized by its
trace.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateNormError
from .linalg import ID2, as_density_matrix
from .tolerances import DEGENERATE_NORM_FLOOR, EXCEPTIONAL_SWITCH, REGIME_ATOL


class Regime(enum.Enum):
    """Spectral regime of the generator.

    The single-qubit eigenvalues are +/- Delta*sqrt(1 - gamma_tilde^2):
    real below gamma_tilde = 1 (coherent oscillation), coalescing at
    exactly 1, purely imaginary above it (exponential growth/decay).
    """

    OSCILLATORY = "oscillatory"
    EXCEPTIONAL = "exceptional"
    BROKEN = "broken"


@dataclass(frozen=True)
class HamiltonianParams:
    """Dimensionless evolution parameters (gamma_tilde, tau)."""

    gamma_tilde: float
    tau: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma_tilde) and math.isfinite(self.tau)):
            raise ValueError("gamma_tilde and tau must be finite")
        if self.gamma_tilde < 0:
            raise ValueError("gamma_tilde must be >= 0")
        if self.tau < 0:
            raise ValueError("tau must be >= 0")


@dataclass(frozen=True)
class EvolutionResult:
    """Renormalized evolved state plus the norm it was divided by."""

    rho: np.ndarray
    norm: float


def regime(gamma_tilde: float) -> Regime:
    """Classify gamma_tilde by the sign of 1 - gamma_tilde^2."""
    if not math.isfinite(gamma_tilde) or gamma_tilde < 0:
        raise ValueError("gamma_tilde must be finite and >= 0")
    d = 1.0 - gamma_tilde * gamma_tilde
    if abs(d) <= REGIME_ATOL:
        return Regime.EXCEPTIONAL
    return Regime.OSCILLATORY if d > 0 else Regime.BROKEN


def kernel_cs(gamma_tilde: float, tau: float) -> tuple[float, float]:
    """Regime-safe evaluation of the propagator kernels (C, S).

    With mu^2 = gamma_tilde^2 - 1 the kernels are C = cosh(mu*tau) and
    S = sinh(mu*tau)/mu, which reduce to cos(omega*tau) and
    sin(omega*tau)/omega (omega = sqrt(1 - gamma_tilde^2)) below the
    exceptional point. Near mu = 0 both are evaluated by their Taylor
    series in the signed variable z = mu^2 * tau^2, which avoids the
    0/0 cancellation and makes the kernels continuous across all three
    regimes.
    """
    if not (math.isfinite(gamma_tilde) and math.isfinite(tau)):
        raise ValueError("kernel arguments must be finite")
    if tau < 0:
        raise ValueError("tau must be >= 0")
    mu2 = gamma_tilde * gamma_tilde - 1.0
    z = mu2 * tau * tau
    if abs(z) < EXCEPTIONAL_SWITCH:
        c = 1.0 + z / 2.0 + z * z / 24.0
        s = tau * (1.0 + z / 6.0 + z * z / 120.0)
    elif mu2 > 0:
        mu = math.sqrt(mu2)
        c = math.cosh(mu * tau)
        s = math.sinh(mu * tau) / mu
    else:
        omega = math.sqrt(-mu2)
        c = math.cos(omega * tau)
        s = math.sin(omega * tau) / omega
    return c, s


def propagator(p: HamiltonianParams) -> np.ndarray:
    """Exact 2x2 propagator U = C*I - i*S*(H/Delta).

    H/Delta = -i*gamma_tilde*sigma_z - sigma_x squares to
    (1 - gamma_tilde^2) I, which is what collapses the exponential to
    the two kernels:

        U = [[C - g*S,  i*S],
             [i*S,      C + g*S]]
    """
    c, s = kernel_cs(p.gamma_tilde, p.tau)
    g = p.gamma_tilde
    return np.array(
        [[c - g * s, 1j * s], [1j * s, c + g * s]],
        dtype=complex,
    )


def evolve(rho0: np.ndarray, p: HamiltonianParams) -> EvolutionResult:
    """Evolve a two-qubit state by U on qubit a, then renormalize.

    Returns ``EvolutionResult(rho, norm)`` with
    rho = (U (x) 1) rho0 (U (x) 1)^dag / norm and norm the trace of the
    unnormalized evolved matrix. The returned state is validated
    (Hermitian, unit trace, PSD with tiny-negative clipping).
    """
    u = propagator(p)
    ui = np.kron(u, ID2)
    rho = ui @ np.asarray(rho0, dtype=complex) @ ui.conj().T
    norm = float(rho.trace().real)
    if norm < DEGENERATE_NORM_FLOOR:
        raise DegenerateNormError(f"trace of evolved matrix is {norm:.3e}")
    rho = rho / norm
    rho = 0.5 * (rho + rho.conj().T)
    return EvolutionResult(rho=as_density_matrix(rho), norm=norm)
