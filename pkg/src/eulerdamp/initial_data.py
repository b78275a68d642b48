"""Initial perturbation data, its moments q0/q1, and the hypothesis screen.

The data is rho(x,0) = 1 + epsilon*rho0(x), u(x,0) = epsilon*u0(x) with both
profiles compactly supported in |x| <= R.  The blow-up side of the theory asks
for the moments

    q0(r) = integral over x > r of (x-r)^2 rho0(x) dx      (> 0)
    q1(r) = 2 * integral over x > r of (x-r) rho0(x) u0(x) dx   (>= 0)

to have fixed signs on a window (R0, R); B0 = 0.5 * integral of q0 over
[R0, R] measures the data size entering the lifespan bound.  All integrals
here use adaptive Simpson quadrature with a 1e-10 absolute tolerance so that
quadrature error is negligible against every comparison made downstream.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConfigError, DomainError
from .grid import GridField
from .profiles import make_profile

# Slack on the q1 >= 0 check, absorbing roundoff on exactly-zero profiles.
TOL_HYP = 1e-12

DEFAULT_HYPOTHESIS_SAMPLES = 257


def adaptive_simpson(f, a, b, tol=1e-10, max_depth=48):
    """Adaptive Simpson quadrature of a scalar function on [a, b].

    Standard interval-halving with the Richardson error estimate
    |S_half - S| / 15 <= tol per interval.
    """
    if b <= a:
        return 0.0
    fa, fb = float(f(a)), float(f(b))
    m = 0.5 * (a + b)
    fm = float(f(m))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _simpson_recurse(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = float(f(lm)), float(f(rm))
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = left + right - whole
    if depth <= 0 or abs(err) <= 15.0 * tol:
        return left + right + err / 15.0
    half = 0.5 * tol
    return (_simpson_recurse(f, a, m, fa, flm, fm, left, half, depth - 1)
            + _simpson_recurse(f, m, b, fm, frm, fb, right, half, depth - 1))


@dataclass
class InitialDataSpec:
    """Amplitude, support geometry, and named profiles of the initial data."""

    epsilon: float
    R: float = 1.0
    R0: float = 0.5
    rho_profile: str = "bump"
    u_profile: str = "zero"

    def __post_init__(self):
        if self.epsilon < 0:
            raise ConfigError(f"epsilon must be >= 0, got {self.epsilon}")
        if not (0 < self.R0 < self.R):
            raise ConfigError(f"need 0 < R0 < R, got R0={self.R0}, R={self.R}")
        self._rho0 = make_profile(self.rho_profile, self.R)
        self._u0 = make_profile(self.u_profile, self.R)

    def rho0(self, x):
        """Density perturbation shape (before the epsilon factor)."""
        return self._rho0(x)

    def u0(self, x):
        """Velocity perturbation shape (before the epsilon factor)."""
        return self._u0(x)


@dataclass
class HypothesisVerdict:
    holds: bool
    failed_at: Optional[float] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.holds


def sample_initial(spec: InitialDataSpec, grid: GridField) -> GridField:
    """Evaluate rho = 1 + eps*rho0, m = rho * eps*u0 at the grid cell centers.

    Cells outside the support are exactly at background.  The grid must cover
    [-R, R].
    """
    if grid.x_min > -spec.R or grid.x_max < spec.R:
        raise ConfigError(
            f"grid [{grid.x_min}, {grid.x_max}] does not cover the data support "
            f"[-{spec.R}, {spec.R}]")
    x = grid.x
    rho = 1.0 + spec.epsilon * spec.rho0(x)
    if np.any(rho <= 0.0):
        raise DomainError("initial density is not everywhere positive")
    u = spec.epsilon * spec.u0(x)
    return GridField(grid.x_min, grid.x_max, grid.n_cells, rho, rho * u, t=0.0)


def q0(r: float, spec: InitialDataSpec, tol=1e-10) -> float:
    """Second moment of rho0 over the tail x > r (no epsilon factor)."""
    if r >= spec.R:
        return 0.0
    a = max(r, -spec.R)
    return adaptive_simpson(lambda x: (x - r) ** 2 * float(spec.rho0(x)),
                            a, spec.R, tol=tol)


def q1(r: float, spec: InitialDataSpec, tol=1e-10) -> float:
    """First moment of the product rho0*u0 over the tail x > r, times 2."""
    if r >= spec.R:
        return 0.0
    a = max(r, -spec.R)
    return 2.0 * adaptive_simpson(
        lambda x: (x - r) * float(spec.rho0(x)) * float(spec.u0(x)),
        a, spec.R, tol=tol)


def check_hypothesis(spec: InitialDataSpec,
                     n_samples: int = DEFAULT_HYPOTHESIS_SAMPLES) -> HypothesisVerdict:
    """Numerical screen of the sign conditions q0 > 0, q1 >= 0 on (R0, R).

    Samples finitely many interior points; a `holds` verdict is evidence,
    not a proof.
    """
    if n_samples < 2:
        raise ValueError("need at least 2 samples")
    rs = np.linspace(spec.R0, spec.R, n_samples + 2)[1:-1]
    for r in rs:
        if q0(r, spec) <= 0.0:
            return HypothesisVerdict(False, failed_at=float(r), reason="q0 <= 0")
        if q1(r, spec) < -TOL_HYP:
            return HypothesisVerdict(False, failed_at=float(r), reason="q1 < 0")
    return HypothesisVerdict(True)


def b0(spec: InitialDataSpec, tol=1e-10) -> float:
    """Data-size moment 0.5 * integral of q0(r) over [R0, R], by nested quadrature."""
    return 0.5 * adaptive_simpson(lambda r: q0(r, spec, tol=tol),
                                  spec.R0, spec.R, tol=tol)
