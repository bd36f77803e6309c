"""Acceptance suite: the package's exit criteria.

Each test enforces one criterion at its stated tolerance and prints one
pass line with the measured numbers (visible with ``pytest -s`` or on
failure). Everything here runs against the library alone; no plotting.
"""

import hashlib
import math
import os
import time

import numpy as np
import pytest

from qnh import (
    HamiltonianParams,
    MeasureMode,
    StateFamily,
    SweepConfig,
    bell_max,
    closed_mixed_phi,
    closed_mixed_psi,
    closed_phi,
    closed_psi,
    concurrence,
    evolve,
    hs_min,
    make_initial,
    measure_all,
    min_bruteforce,
    run_figure,
    run_sweep,
    trace_min,
)

from conftest import INV_SQRT2, bell_phi, rand_bell_diagonal, rand_rho

F = MeasureMode.FAITHFUL
P = MeasureMode.PAPER_RAW

A13 = 1.0 / math.sqrt(3.0)
B23 = math.sqrt(2.0 / 3.0)


def _report(n: int, text: str):
    print(f"[PASS] criterion {n}: {text}")


def test_criterion_1_bell_state_baseline():
    rep = measure_all(bell_phi(), F)
    got = (rep.concurrence, rep.hs_min, rep.trace_min, rep.bell)
    want = (1.0, 0.5, 1.0, 2.0 * math.sqrt(2.0))
    assert got == pytest.approx(want, abs=1e-9)
    _report(1, f"measure_all(|Phi+>) = {tuple(f'{v:.12f}' for v in got)} within 1e-9")


def test_criterion_2_closed_form_engine_equivalence():
    cases = [
        (StateFamily.pure_phi(INV_SQRT2, INV_SQRT2),
         lambda g, t: closed_phi(INV_SQRT2, INV_SQRT2, g, t)),
        (StateFamily.pure_phi(A13, B23), lambda g, t: closed_phi(A13, B23, g, t)),
        (StateFamily.pure_psi(INV_SQRT2, INV_SQRT2),
         lambda g, t: closed_psi(INV_SQRT2, INV_SQRT2, g, t)),
        (StateFamily.pure_psi(A13, B23), lambda g, t: closed_psi(A13, B23, g, t)),
        (StateFamily.mixed_phi(0.0), lambda g, t: closed_mixed_phi(0.0, g, t)),
        (StateFamily.mixed_phi(0.5), lambda g, t: closed_mixed_phi(0.5, g, t)),
        (StateFamily.mixed_phi(1.0), lambda g, t: closed_mixed_phi(1.0, g, t)),
        (StateFamily.mixed_psi(0.5), lambda g, t: closed_mixed_psi(0.5, g, t)),
        (StateFamily.mixed_psi(1.0), lambda g, t: closed_mixed_psi(1.0, g, t)),
    ]
    gammas = (0.0, 0.1, 0.25, 0.5, 1.0, 1.5, 3.0)
    taus = np.round(np.arange(0.0, 10.0 + 1e-9, 0.1), 10)
    start = time.perf_counter()
    worst = 0.0
    for family, closed in cases:
        rho0 = make_initial(family)
        for g in gammas:
            for tau in taus:
                engine = evolve(rho0, HamiltonianParams(g, float(tau))).rho
                worst = max(worst, float(np.abs(closed(g, float(tau)) - engine).max()))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-10
    assert elapsed <= 5.0
    _report(2, f"max entrywise |closed - engine| = {worst:.3e} <= 1e-10 in {elapsed:.2f} s")


def test_criterion_3_min_oracle_equivalence():
    rng = np.random.default_rng(424242)
    start = time.perf_counter()
    worst_generic = 0.0
    for _ in range(490):
        rho = rand_rho(rng)
        hs_ref, _ = min_bruteforce(rho, "hs")
        tr_ref, _ = min_bruteforce(rho, "trace")
        worst_generic = max(
            worst_generic,
            abs(hs_min(rho, F) - hs_ref),
            abs(trace_min(rho, F) - tr_ref),
        )
    assert worst_generic <= 1e-6
    worst_degenerate = 0.0
    for _ in range(10):
        rho = rand_bell_diagonal(rng)
        hs_ref, _ = min_bruteforce(rho, "hs")
        tr_ref, _ = min_bruteforce(rho, "trace")
        worst_degenerate = max(
            worst_degenerate,
            abs(hs_min(rho, F) - hs_ref),
            abs(trace_min(rho, F) - tr_ref),
        )
    elapsed = time.perf_counter() - start
    assert worst_degenerate <= 1e-4
    assert elapsed <= 60.0
    _report(
        3,
        f"500 states: |formula - brute force| = {worst_generic:.2e} (x != 0, tol 1e-6), "
        f"{worst_degenerate:.2e} (x = 0, tol 1e-4) in {elapsed:.1f} s",
    )


def test_criterion_4_hermitian_limit_freezing():
    cfg = SweepConfig(
        family=StateFamily.pure_phi(INV_SQRT2, INV_SQRT2),
        gamma_tilde_list=(0.0,),
        tau_max=10.0,
        steps=1001,
        mode=F,
    )
    rows = run_sweep(cfg)
    worst_var = 0.0
    for field in ("concurrence", "hs_min", "trace_min", "bell"):
        col = np.array([getattr(r, field) for r in rows])
        worst_var = max(worst_var, float(np.ptp(col)))
    worst_norm = max(abs(r.norm - 1.0) for r in rows)
    assert worst_var < 1e-9
    assert worst_norm <= 1e-12
    _report(4, f"gamma=0 sweep: column variation {worst_var:.2e} < 1e-9, |norm - 1| {worst_norm:.2e}")


def test_criterion_5_paper_plateau():
    res = evolve(bell_phi(), HamiltonianParams(1.5, 10.0))
    raw_tmin = trace_min(res.rho, P)
    faithful_bell = bell_max(res.rho, F)
    conc = concurrence(res.rho)
    faithful_hs = hs_min(res.rho, F)
    assert raw_tmin == pytest.approx(0.497, abs=0.005)
    assert faithful_bell == pytest.approx(2.0, abs=1e-3)
    assert conc <= 1e-6
    assert faithful_hs <= 1e-6
    _report(
        5,
        f"gamma=1.5, tau=10: raw trace-MIN {raw_tmin:.4f} (0.497 +/- 0.005), "
        f"Bell {faithful_bell:.6f} (2 +/- 1e-3), C {conc:.1e}, HS-MIN {faithful_hs:.1e}",
    )


def test_criterion_6_mixed_state_bell_subthreshold():
    worst_bell = 0.0
    for g in (0.5, 1.5):
        cfg = SweepConfig(
            family=StateFamily.mixed_phi(0.5),
            gamma_tilde_list=(g,),
            tau_max=10.0,
            steps=1001,
            mode=F,
        )
        rows = run_sweep(cfg)
        worst_bell = max(worst_bell, max(r.bell for r in rows))
        assert rows[0].trace_min == pytest.approx(0.5, abs=1e-9)
        assert rows[0].concurrence == pytest.approx(0.25, abs=1e-9)
    assert worst_bell < 2.0
    _report(6, f"mixed r=0.5: max Bell over both sweeps {worst_bell:.6f} < 2; "
               f"trace-MIN(0) = 0.5, C(0) = 0.25")


def test_criterion_7_exceptional_point_continuity():
    families = [
        StateFamily.pure_phi(INV_SQRT2, INV_SQRT2),
        StateFamily.pure_psi(INV_SQRT2, INV_SQRT2),
        StateFamily.mixed_phi(0.5),
        StateFamily.mixed_psi(0.5),
    ]
    taus = np.linspace(0.0, 10.0, 101)
    worst = 0.0
    for family in families:
        rho0 = make_initial(family)
        for mode in (F, P):
            base = []
            for tau in taus:
                rep = measure_all(evolve(rho0, HamiltonianParams(1.0, float(tau))).rho, mode)
                base.append((rep.concurrence, rep.hs_min, rep.trace_min, rep.bell))
            base = np.array(base)
            for g in (1.0 - 1e-6, 1.0 + 1e-6):
                pert = []
                for tau in taus:
                    rep = measure_all(evolve(rho0, HamiltonianParams(g, float(tau))).rho, mode)
                    pert.append((rep.concurrence, rep.hs_min, rep.trace_min, rep.bell))
                worst = max(worst, float(np.abs(np.array(pert) - base).max()))
    assert worst < 1e-4
    _report(7, f"gamma = 1 +/- 1e-6 vs 1: max |delta measure| = {worst:.2e} < 1e-4")


def test_criterion_8_oscillatory_regime():
    cfg = SweepConfig(
        family=StateFamily.pure_phi(INV_SQRT2, INV_SQRT2),
        gamma_tilde_list=(0.25,),
        tau_max=10.0,
        steps=4001,
        mode=F,
    )
    rows = run_sweep(cfg)
    conc = np.array([r.concurrence for r in rows])
    peaks = [
        i
        for i in range(1, len(conc) - 1)
        if conc[i] >= conc[i - 1] and conc[i] >= conc[i + 1]
    ]
    assert len(peaks) >= 2
    peak_vals = conc[peaks]
    spread = float(peak_vals.max() - peak_vals.min())
    assert spread <= 1e-6
    assert conc.min() < conc[0] - 1e-3
    _report(
        8,
        f"gamma=0.25: {len(peaks)} maxima agree to {spread:.2e} <= 1e-6; "
        f"min {conc.min():.4f} dips below initial {conc[0]:.4f}",
    )


def test_criterion_9_figure_generation(tmp_path):
    first = tmp_path / "run1"
    second = tmp_path / "run2"
    start = time.perf_counter()
    for n in range(1, 7):
        run_figure(n, str(first))
    elapsed = time.perf_counter() - start
    files = sorted(os.listdir(first))
    assert len(files) == 12
    assert elapsed <= 10.0
    for n in range(1, 7):
        run_figure(n, str(second))
    for name in files:
        h1 = hashlib.sha256((first / name).read_bytes()).hexdigest()
        h2 = hashlib.sha256((second / name).read_bytes()).hexdigest()
        assert h1 == h2, f"{name} not deterministic"
    _report(9, f"12 preset CSVs in {elapsed:.2f} s <= 10 s, byte-identical on rerun")
