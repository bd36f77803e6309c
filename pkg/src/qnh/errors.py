"""Exception types.

Two broad classes matter for the CLI exit-code contract: configuration or
parse problems (exit code 1) and numerical-invariant failures (exit code 2).
"""


class QnhError(Exception):
    """Base class for all package errors."""


class NumericalInvariantError(QnhError):
    """A numerical invariant of the data failed."""


class NotHermitianError(NumericalInvariantError):
    """Matrix is not Hermitian within tolerance."""


class NotPSDError(NumericalInvariantError):
    """Matrix has an eigenvalue below the allowed negative floor."""


class NoConvergenceError(NumericalInvariantError):
    """Eigensolver failed to converge."""


class NonRealBlochComponentError(NumericalInvariantError):
    """A Bloch/correlation trace came out with a non-negligible imaginary part."""


class DegenerateNormError(NumericalInvariantError):
    """Evolution norm collapsed to (numerical) zero; cannot renormalize."""


class InvalidStateError(NumericalInvariantError):
    """A candidate density matrix violated one of its invariants."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"invalid density matrix: {invariant} invariant failed"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ConfigError(QnhError):
    """Invalid configuration or command-line input."""


class NormalizationError(ConfigError):
    """Pure-state coefficients are not normalized."""


class PurityOutOfRangeError(ConfigError):
    """Mixing parameter r is outside [0, 1]."""


class UnknownFigureError(ConfigError):
    """Figure preset index outside 1..6."""


class ParseError(QnhError):
    """Input file could not be parsed."""
