"""Time sweeps over (gamma_tilde, tau), CSV output and figure presets.

``run_sweep`` drives the evolution plus all four quantifiers on a uniform
tau grid for each requested gamma_tilde. The per-grid work is evaluated
through vectorized batch kernels (stacked 4x4 eigenproblems) that mirror
the scalar operations exactly; the test suite pins the two paths against
each other. Output rows serialize to CSV with 12 significant digits.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigError,
    DegenerateNormError,
    InvalidStateError,
    NonRealBlochComponentError,
    ParseError,
    UnknownFigureError,
)
from .linalg import PAULIS, SIG_A, SIG_AB, YY, as_density_matrix
from .measures import MeasureMode, MeasureReport, measure_all
from .states import StateFamily, make_initial
from .tolerances import (
    BLOCH_IMAG_ATOL,
    CONCURRENCE_SPECTRUM_CLIP,
    DEGENERATE_NORM_FLOOR,
    DENSITY_PSD_CLIP,
    EXCEPTIONAL_SWITCH,
    X_TOL_DEFAULT,
)

CSV_HEADER = "gamma_tilde,tau,concurrence,hs_min,trace_min,bell,norm"

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_PAULI_STACK = np.stack(PAULIS)


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: a state family, gamma_tilde values and a tau grid."""

    family: StateFamily
    gamma_tilde_list: tuple[float, ...]
    tau_max: float
    steps: int
    mode: MeasureMode
    output_path: str = ""

    def validate(self):
        if not isinstance(self.family, StateFamily):
            raise ConfigError("family must be a StateFamily")
        if not self.gamma_tilde_list:
            raise ConfigError("gamma_tilde_list must not be empty")
        for g in self.gamma_tilde_list:
            if not math.isfinite(g) or g < 0:
                raise ConfigError(f"gamma_tilde values must be finite and >= 0, got {g!r}")
        if not math.isfinite(self.tau_max) or self.tau_max <= 0:
            raise ConfigError(f"tau_max must be positive, got {self.tau_max!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ConfigError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not isinstance(self.mode, MeasureMode):
            raise ConfigError("mode must be a MeasureMode")


@dataclass(frozen=True)
class TimeSeriesRow:
    """One (gamma_tilde, tau) grid point of a sweep."""

    gamma_tilde: float
    tau: float
    concurrence: float
    hs_min: float
    trace_min: float
    bell: float
    norm: float


def run_sweep(cfg: SweepConfig) -> list[TimeSeriesRow]:
    """Evaluate a sweep; rows ordered by (gamma list order, ascending tau)."""
    cfg.validate()
    rho0 = make_initial(cfg.family)
    taus = np.linspace(0.0, cfg.tau_max, int(cfg.steps))
    rows: list[TimeSeriesRow] = []
    for g in cfg.gamma_tilde_list:
        rhos, norms = _evolve_grid(rho0, float(g), taus)
        vals = _measure_grid(rhos, cfg.mode)
        for i, tau in enumerate(taus):
            rows.append(
                TimeSeriesRow(
                    gamma_tilde=float(g),
                    tau=float(tau),
                    concurrence=float(vals[i, 0]),
                    hs_min=float(vals[i, 1]),
                    trace_min=float(vals[i, 2]),
                    bell=float(vals[i, 3]),
                    norm=float(norms[i]),
                )
            )
    return rows


def _kernel_grid(g: float, taus: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized propagator kernels over a tau grid (single gamma_tilde)."""
    mu2 = g * g - 1.0
    z = mu2 * taus * taus
    c = np.empty_like(taus)
    s = np.empty_like(taus)
    series = np.abs(z) < EXCEPTIONAL_SWITCH
    rest = ~series
    if mu2 > 0:
        mu = math.sqrt(mu2)
        c[rest] = np.cosh(mu * taus[rest])
        s[rest] = np.sinh(mu * taus[rest]) / mu
    elif mu2 < 0:
        omega = math.sqrt(-mu2)
        c[rest] = np.cos(omega * taus[rest])
        s[rest] = np.sin(omega * taus[rest]) / omega
    zs = z[series]
    c[series] = 1.0 + zs / 2.0 + zs * zs / 24.0
    s[series] = taus[series] * (1.0 + zs / 6.0 + zs * zs / 120.0)
    return c, s


def _evolve_grid(rho0: np.ndarray, g: float, taus: np.ndarray):
    """Batch evolution: returns (states (N,4,4), norms (N,))."""
    c, s = _kernel_grid(g, taus)
    n = taus.shape[0]
    u = np.zeros((n, 2, 2), dtype=complex)
    u[:, 0, 0] = c - g * s
    u[:, 1, 1] = c + g * s
    u[:, 0, 1] = 1j * s
    u[:, 1, 0] = 1j * s
    ui = np.zeros((n, 4, 4), dtype=complex)
    ui[:, 0::2, 0::2] = u
    ui[:, 1::2, 1::2] = u
    rho = ui @ rho0 @ ui.conj().transpose(0, 2, 1)
    norms = np.einsum("nii->n", rho).real
    if norms.min() < DEGENERATE_NORM_FLOOR:
        raise DegenerateNormError(f"trace of evolved matrix reached {norms.min():.3e}")
    rho = rho / norms[:, None, None]
    rho = 0.5 * (rho + rho.conj().transpose(0, 2, 1))
    w = np.linalg.eigvalsh(rho)
    if w[:, 0].min() < -DENSITY_PSD_CLIP:
        raise InvalidStateError("psd", f"least eigenvalue {w[:, 0].min():.3e}")
    for i in np.nonzero(w[:, 0] < 0.0)[0]:
        rho[i] = as_density_matrix(rho[i])
    return rho, norms


def _measure_grid(rhos: np.ndarray, mode: MeasureMode, x_tol: float = X_TOL_DEFAULT) -> np.ndarray:
    """Batch quantifiers: (N, 4) columns [concurrence, hs_min, trace_min, bell].

    Mirrors the scalar functions in :mod:`qnh.measures` operation for
    operation, evaluated on stacked matrices.
    """
    n = rhos.shape[0]
    x_c = np.einsum("nij,kji->nk", rhos, SIG_A)
    t_c = np.einsum("nij,mkji->nmk", rhos, SIG_AB)
    worst = max(np.abs(x_c.imag).max(), np.abs(t_c.imag).max())
    if worst > BLOCH_IMAG_ATOL:
        raise NonRealBlochComponentError(f"imaginary part {worst:.3e}")
    x = x_c.real
    t = t_c.real

    # Concurrence via sqrt(rho) rho~ sqrt(rho).
    w, v = np.linalg.eigh(rhos)
    root = (v * np.sqrt(np.clip(w, 0.0, None))[:, None, :]) @ v.conj().transpose(0, 2, 1)
    flipped = YY @ rhos.conj() @ YY
    r = root @ flipped @ root
    r = 0.5 * (r + r.conj().transpose(0, 2, 1))
    w_r = np.clip(np.linalg.eigvalsh(r), 0.0, None)
    w_r[w_r < CONCURRENCE_SPECTRUM_CLIP * w_r[:, 3:]] = 0.0
    eps = np.sqrt(w_r)
    conc = np.maximum(0.0, eps[:, 3] - eps[:, 2] - eps[:, 1] - eps[:, 0])

    ttt = t.transpose(0, 2, 1) @ t  # T^t T; same spectrum as T T^t
    u_eigs = np.linalg.eigvalsh(ttt)
    tr_tt = np.einsum("nmk,nmk->n", t, t)
    nx = np.linalg.norm(x, axis=1)
    xmask = nx > x_tol

    # hs_min
    tt_x = np.einsum("nmk,nm->nk", t, x)
    quad = np.zeros(n)
    np.divide(
        np.einsum("nk,nk->n", tt_x, tt_x), nx * nx, out=quad, where=xmask
    )
    hs_raw = np.where(xmask, tr_tt - quad, tr_tt - u_eigs[:, 0])
    hs = hs_raw / 4.0 if mode is MeasureMode.FAITHFUL else hs_raw

    # bell
    s_top = np.maximum(u_eigs[:, 2] + u_eigs[:, 1], 0.0)
    bell = 2.0 * np.sqrt(s_top) if mode is MeasureMode.FAITHFUL else _SQRT2 * s_top

    # trace_min
    tmin = np.empty(n)
    if mode is MeasureMode.FAITHFUL:
        tmin[~xmask] = np.sqrt(np.maximum(u_eigs[~xmask, 2], 0.0))
        idx = np.nonzero(xmask)[0]
        if idx.size:
            dirs = x[idx] / nx[idx, None]
            tmin[idx] = _trace_residual(rhos[idx], dirs)
    else:
        c_diag = np.diagonal(t, axis1=1, axis2=2)
        c2 = c_diag * c_diag
        x2 = x * x
        tmin[~xmask] = np.max(np.abs(c_diag[~xmask]), axis=1)
        idx = np.nonzero(xmask)[0]
        if idx.size:
            alpha = c2[idx].sum(axis=1) * nx[idx] ** 2 - (c2[idx] * x2[idx]).sum(axis=1)
            beta = (
                x2[idx, 0] * c2[idx, 1] * c2[idx, 2]
                + x2[idx, 1] * c2[idx, 2] * c2[idx, 0]
                + x2[idx, 2] * c2[idx, 0] * c2[idx, 1]
            )
            half = 2.0 * np.sqrt(beta) * nx[idx]
            chi_p = np.maximum(alpha + half, 0.0)
            chi_m = np.maximum(alpha - half, 0.0)
            tmin[idx] = (np.sqrt(chi_p) + np.sqrt(chi_m)) / (2.0 * nx[idx])

    return np.stack([conc, hs, tmin, bell], axis=1)


def _trace_residual(rhos: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    """Trace norm of rho - Pi_dir(rho) for stacked states/directions."""
    n = rhos.shape[0]
    p_plus = 0.5 * np.eye(2, dtype=complex) + 0.5 * np.einsum(
        "nk,kij->nij", dirs, _PAULI_STACK
    )
    p_minus = np.eye(2, dtype=complex) - p_plus
    a = np.zeros((n, 4, 4), dtype=complex)
    b = np.zeros((n, 4, 4), dtype=complex)
    a[:, 0::2, 0::2] = p_plus
    a[:, 1::2, 1::2] = p_plus
    b[:, 0::2, 0::2] = p_minus
    b[:, 1::2, 1::2] = p_minus
    residual = rhos - (a @ rhos @ a + b @ rhos @ b)
    residual = 0.5 * (residual + residual.conj().transpose(0, 2, 1))
    return np.abs(np.linalg.eigvalsh(residual)).sum(axis=1)


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

FIGURE_TAU_MAX = 10.0
FIGURE_STEPS = 1001


def _presets() -> dict[int, tuple[StateFamily, tuple[float, ...]]]:
    inv2 = 1.0 / _SQRT2
    a13 = 1.0 / _SQRT3
    b23 = math.sqrt(2.0 / 3.0)
    return {
        1: (StateFamily.pure_phi(inv2, inv2), (0.1, 0.25, 0.5, 1.5)),
        2: (StateFamily.pure_phi(a13, b23), (0.5, 1.5)),
        3: (StateFamily.pure_psi(inv2, inv2), (0.1, 0.25, 0.5, 1.5)),
        4: (StateFamily.pure_psi(a13, b23), (0.5, 1.5)),
        5: (StateFamily.mixed_phi(0.5), (0.5, 1.5)),
        6: (StateFamily.mixed_psi(0.5), (0.5, 1.5)),
    }


def figure_preset(n: int) -> list[SweepConfig]:
    """Sweep configurations behind one of the six standard figures.

    One config per gamma_tilde value, tau grid of 1001 points on [0, 10].
    The headline mode is PAPER_RAW; :func:`run_figure` always emits a
    faithful companion CSV alongside.
    """
    try:
        family, gammas = _presets()[int(n)]
    except (KeyError, TypeError, ValueError):
        raise UnknownFigureError(f"figure number must be in 1..6, got {n!r}") from None
    return [
        SweepConfig(
            family=family,
            gamma_tilde_list=(g,),
            tau_max=FIGURE_TAU_MAX,
            steps=FIGURE_STEPS,
            mode=MeasureMode.PAPER_RAW,
            output_path=f"fig{int(n)}.paper.csv",
        )
        for g in gammas
    ]


def run_figure(n: int, outdir: str) -> dict[str, str]:
    """Generate both mode CSVs for figure ``n`` into ``outdir``.

    Returns {"paper": path, "faithful": path}.
    """
    configs = figure_preset(n)
    os.makedirs(outdir, exist_ok=True)
    out = {}
    for mode in (MeasureMode.PAPER_RAW, MeasureMode.FAITHFUL):
        rows: list[TimeSeriesRow] = []
        for cfg in configs:
            rows.extend(
                run_sweep(
                    SweepConfig(
                        family=cfg.family,
                        gamma_tilde_list=cfg.gamma_tilde_list,
                        tau_max=cfg.tau_max,
                        steps=cfg.steps,
                        mode=mode,
                        output_path=cfg.output_path,
                    )
                )
            )
        path = os.path.join(outdir, f"fig{int(n)}.{mode.value}.csv")
        emit_csv(rows, path)
        out[mode.value] = path
    return out


# ---------------------------------------------------------------------------
# CSV and density-matrix file I/O
# ---------------------------------------------------------------------------


def emit_csv(rows: list[TimeSeriesRow], path: str):
    """Write rows with the standard header, 12 significant digits, LF endings."""
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in rows:
            fh.write(
                f"{r.gamma_tilde:.12g},{r.tau:.12g},{r.concurrence:.12g},"
                f"{r.hs_min:.12g},{r.trace_min:.12g},{r.bell:.12g},{r.norm:.12g}\n"
            )


def read_csv(path: str) -> list[TimeSeriesRow]:
    """Parse a CSV produced by :func:`emit_csv`."""
    with open(path, "r", newline="") as fh:
        header = fh.readline().rstrip("\n")
        if header != CSV_HEADER:
            raise ParseError(f"unexpected CSV header {header!r}")
        rows = []
        for line_no, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 7:
                raise ParseError(f"line {line_no}: expected 7 fields, got {len(parts)}")
            try:
                vals = [float(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"line {line_no}: {exc}") from None
            rows.append(TimeSeriesRow(*vals))
    return rows


def load_density_matrix(path: str) -> np.ndarray:
    """Read a 4x4 complex matrix from JSON ({"rho": 4x4 of [re, im]}) and
    validate it as a density matrix."""
    try:
        with open(path, "r") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict) or "rho" not in data:
        raise ParseError(f'{path}: expected a JSON object with a "rho" key')
    raw = data["rho"]
    try:
        arr = np.array(
            [[complex(cell[0], cell[1]) for cell in row] for row in raw],
            dtype=complex,
        )
    except (TypeError, IndexError, ValueError):
        raise ParseError(
            f"{path}: rho must be 4 rows of 4 entries, each entry [re, im]"
        ) from None
    if arr.shape != (4, 4):
        raise ParseError(f"{path}: rho has shape {arr.shape}, expected (4, 4)")
    return as_density_matrix(arr)


def measure_file(path: str, mode: MeasureMode) -> MeasureReport:
    """Load a density matrix from JSON and evaluate all four quantifiers."""
    rho = load_density_matrix(path)
    return measure_all(rho, mode)
