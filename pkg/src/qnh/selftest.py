"""Built-in oracle-equivalence suite behind ``qnh selftest``.

Runs the cross-checks that pin the closed-form implementations to
independent computations: propagator vs. series matrix exponential,
closed-form evolved states vs. the generic engine, Bloch-space MIN
formulas vs. the operator-level brute-force optimizer, and the Fano
round trip. Prints one line per check.
"""

from __future__ import annotations

import numpy as np

from ._oracles import expm_taylor
from .dynamics import HamiltonianParams, evolve, propagator
from .linalg import SIGMA_X, SIGMA_Z, fano_compose, fano_decompose
from .measures import MeasureMode, hs_min, min_bruteforce, trace_min
from .states import (
    StateFamily,
    closed_mixed_phi,
    closed_mixed_psi,
    closed_phi,
    closed_psi,
    make_initial,
)


def _random_state(rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return rho / rho.trace().real


def _random_bell_diagonal(rng: np.random.Generator) -> np.ndarray:
    f = fano_decompose(np.eye(4, dtype=complex) / 4.0)
    while True:
        f.t[:] = np.diag(rng.uniform(-1.0, 1.0, size=3))
        rho = fano_compose(f)
        if np.linalg.eigvalsh(rho)[0] >= 0.0:
            return rho


def _check_propagator(rng) -> float:
    worst = 0.0
    for _ in range(100):
        g = float(rng.uniform(0.0, 3.0))
        tau = float(rng.uniform(0.0, 10.0))
        h_over_delta = -1j * g * SIGMA_Z - SIGMA_X
        u_ref = expm_taylor(-1j * h_over_delta * tau)
        u = propagator(HamiltonianParams(g, tau))
        worst = max(worst, float(np.abs(u - u_ref).max() / max(1.0, np.abs(u_ref).max())))
    return worst


def _check_closed_forms() -> float:
    gammas = (0.0, 0.5, 1.0, 1.5)
    taus = np.arange(0.0, 10.5, 1.0)
    worst = 0.0
    a, b = 1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0)
    cases = [
        (StateFamily.pure_phi(a, b), lambda g, t: closed_phi(a, b, g, t)),
        (StateFamily.pure_psi(a, b), lambda g, t: closed_psi(a, b, g, t)),
        (StateFamily.mixed_phi(0.5), lambda g, t: closed_mixed_phi(0.5, g, t)),
        (StateFamily.mixed_psi(0.5), lambda g, t: closed_mixed_psi(0.5, g, t)),
    ]
    for family, closed in cases:
        rho0 = make_initial(family)
        for g in gammas:
            for tau in taus:
                engine = evolve(rho0, HamiltonianParams(g, float(tau))).rho
                worst = max(worst, float(np.abs(closed(g, float(tau)) - engine).max()))
    return worst


def _check_min_oracle(rng) -> float:
    worst = 0.0
    for _ in range(40):
        rho = _random_state(rng)
        got_hs, _ = min_bruteforce(rho, "hs")
        got_tr, _ = min_bruteforce(rho, "trace")
        worst = max(worst, abs(got_hs - hs_min(rho, MeasureMode.FAITHFUL)))
        worst = max(worst, abs(got_tr - trace_min(rho, MeasureMode.FAITHFUL)))
    for _ in range(3):
        rho = _random_bell_diagonal(rng)
        got_hs, _ = min_bruteforce(rho, "hs", grid_points=5000)
        got_tr, _ = min_bruteforce(rho, "trace", grid_points=5000)
        worst = max(worst, abs(got_hs - hs_min(rho, MeasureMode.FAITHFUL)))
        worst = max(worst, abs(got_tr - trace_min(rho, MeasureMode.FAITHFUL)))
    return worst


def _check_fano_roundtrip(rng) -> float:
    worst = 0.0
    for _ in range(100):
        rho = _random_state(rng)
        worst = max(worst, float(np.abs(fano_compose(fano_decompose(rho)) - rho).max()))
    return worst


def run_selftest(verbose: bool = True) -> bool:
    """Run all checks; returns True if every one passes."""
    rng = np.random.default_rng(20240817)
    checks = [
        ("propagator vs series exponential", _check_propagator(rng), 1e-11),
        ("closed forms vs generic engine", _check_closed_forms(), 1e-10),
        ("MIN formulas vs brute force", _check_min_oracle(rng), 1e-4),
        ("fano round trip", _check_fano_roundtrip(rng), 1e-12),
    ]
    ok = True
    for name, err, tol in checks:
        passed = err <= tol
        ok = ok and passed
        if verbose:
            print(f"[{'PASS' if passed else 'FAIL'}] {name}: max error {err:.3e} (tol {tol:.0e})")
    return ok
