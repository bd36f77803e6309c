import numpy as np
import pytest

from qnh import FanoForm, StateFamily, fano_compose, make_initial

INV_SQRT2 = 1.0 / np.sqrt(2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def rand_rho(rng: np.random.Generator) -> np.ndarray:
    """Random full-rank two-qubit density matrix."""
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return rho / rho.trace().real


def rand_herm(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def rand_unitary(rng: np.random.Generator, n: int = 2) -> np.ndarray:
    """Haar-ish random unitary via QR with phase fix."""
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def rand_bell_diagonal(rng: np.random.Generator) -> np.ndarray:
    """Random state with both marginals maximally mixed (x = y = 0)."""
    while True:
        c = rng.uniform(-1.0, 1.0, size=3)
        rho = fano_compose(FanoForm(x=np.zeros(3), y=np.zeros(3), t=np.diag(c)))
        if np.linalg.eigvalsh(rho)[0] >= 0.0:
            return rho


def bell_phi() -> np.ndarray:
    return make_initial(StateFamily.pure_phi(INV_SQRT2, INV_SQRT2))


def bell_psi() -> np.ndarray:
    return make_initial(StateFamily.pure_psi(INV_SQRT2, INV_SQRT2))


def werner_phi(r: float) -> np.ndarray:
    return make_initial(StateFamily.mixed_phi(r))
