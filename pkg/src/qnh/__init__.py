"""Two-qubit correlation dynamics under a local non-Hermitian Hamiltonian.

A small simulation toolkit: exact propagation of a two-qubit state when
one qubit evolves under H = -i*gamma*sigma_z - Delta*sigma_x, plus four
nonlocal-correlation quantifiers (concurrence, Hilbert-Schmidt and
trace-norm measurement-induced nonlocality, maximal Bell function), each
available in a definitional mode and a literal-prefactor reproduction
mode, cross-checked by an operator-level brute-force optimizer.
"""

from .dynamics import (
    EvolutionResult,
    HamiltonianParams,
    Regime,
    evolve,
    kernel_cs,
    propagator,
    regime,
)
from .errors import (
    ConfigError,
    DegenerateNormError,
    InvalidStateError,
    NoConvergenceError,
    NonRealBlochComponentError,
    NormalizationError,
    NotHermitianError,
    NotPSDError,
    NumericalInvariantError,
    ParseError,
    PurityOutOfRangeError,
    QnhError,
    UnknownFigureError,
)
from .linalg import (
    CanonicalForm,
    FanoForm,
    as_density_matrix,
    canonicalize,
    fano_compose,
    fano_decompose,
    herm_eig,
    hs_norm_sq,
    kron,
    mat_sqrt_psd,
    trace_norm,
)
from .measures import (
    MeasureMode,
    MeasureReport,
    bell_max,
    concurrence,
    hs_min,
    locally_invariant_directions,
    measure_all,
    min_bruteforce,
    post_measurement,
    trace_min,
)
from .states import (
    StateFamily,
    closed_mixed_phi,
    closed_mixed_psi,
    closed_phi,
    closed_psi,
    make_initial,
)
from .sweep import (
    CSV_HEADER,
    SweepConfig,
    TimeSeriesRow,
    emit_csv,
    figure_preset,
    load_density_matrix,
    measure_file,
    read_csv,
    run_figure,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ConfigError",
    "CSV_HEADER",
    "DegenerateNormError",
    "EvolutionResult",
    "FanoForm",
    "HamiltonianParams",
    "InvalidStateError",
    "MeasureMode",
    "MeasureReport",
    "NoConvergenceError",
    "NonRealBlochComponentError",
    "NormalizationError",
    "NotHermitianError",
    "NotPSDError",
    "NumericalInvariantError",
    "ParseError",
    "PurityOutOfRangeError",
    "QnhError",
    "Regime",
    "StateFamily",
    "SweepConfig",
    "TimeSeriesRow",
    "UnknownFigureError",
    "as_density_matrix",
    "bell_max",
    "canonicalize",
    "closed_mixed_phi",
    "closed_mixed_psi",
    "closed_phi",
    "closed_psi",
    "concurrence",
    "emit_csv",
    "evolve",
    "fano_compose",
    "fano_decompose",
    "figure_preset",
    "herm_eig",
    "hs_min",
    "hs_norm_sq",
    "kernel_cs",
    "kron",
    "load_density_matrix",
    "locally_invariant_directions",
    "make_initial",
    "mat_sqrt_psd",
    "measure_all",
    "measure_file",
    "min_bruteforce",
    "post_measurement",
    "propagator",
    "read_csv",
    "regime",
    "run_figure",
    "run_sweep",
    "trace_min",
    "trace_norm",
]
