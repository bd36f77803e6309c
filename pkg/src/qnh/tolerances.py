"""Numerical tolerances used across the package.

All thresholds live here so that every module draws from a single set of
defaults. Values are absolute unless noted otherwise.
"""

# Hermiticity gate for the eigensolver (max |M - M^dag| entry).
HERM_EIG_ATOL = 1e-8

# Density-matrix construction gates.
DENSITY_HERM_ATOL = 1e-10
DENSITY_TRACE_ATOL = 1e-10
# Eigenvalues in [-DENSITY_PSD_CLIP, 0) are clipped to 0; anything more
# negative rejects the matrix.
DENSITY_PSD_CLIP = 1e-10

# PSD matrix square root rejects below this eigenvalue floor.
SQRT_PSD_REJECT = 1e-8

# Bloch/correlation traces must be real up to this imaginary part; smaller
# imaginary residue is silently discarded.
BLOCH_IMAG_ATOL = 1e-8

# Bloch-vector norm below which a marginal counts as maximally mixed (the
# measurement direction is then unconstrained). The induced measures are
# genuinely discontinuous at x -> 0, so the switch is exposed as a keyword
# argument wherever it matters.
X_TOL_DEFAULT = 1e-8

# Regime classification: |1 - gamma_tilde^2| at or below this is treated as
# the exceptional point.
REGIME_ATOL = 1e-12

# Propagator kernels switch to their Taylor form when |mu^2| * tau^2 falls
# below this, avoiding cancellation in sinh(mu*tau)/mu near mu = 0.
EXCEPTIONAL_SWITCH = 1e-8

# Sphere search used by the brute-force measurement optimizer.
FIB_GRID_POINTS = 20_000
REFINE_ANGLE_TOL = 1e-6

# Unit-norm gate for measurement directions.
DIRECTION_NORM_ATOL = 1e-12

# Eigenvalues of sqrt(rho) rho~ sqrt(rho) below this fraction of the largest
# one are rounding debris of a rank-deficient spectrum; they are zeroed
# before the square root, which would otherwise amplify them to ~1e-8 and
# make the concurrence of pure states jitter at that level.
CONCURRENCE_SPECTRUM_CLIP = 1e-13

# Norm floor below which a renormalized evolution is considered degenerate.
DEGENERATE_NORM_FLOOR = 1e-300
