"""Independent small-amplitude references for validating the solver.

Two tools live here:

* A per-Fourier-mode integrator for the damped wave equation obtained by
  linearizing the sound-variable system,

      vhat'' + (mu/(1+t)**lam) vhat' + xi**2 vhat = 0,

  synthesized over the periodic extension of the computational domain.  Run
  at a tolerance around 1e-10 it is more accurate than anything it judges by
  a comfortable margin.  (For mu = 2, lam = 1 the substitution w = (1+t)v
  reduces each mode to an undamped oscillator; that closed form is kept in
  the tests as an exact cross-check of this integrator.)

* Manufactured solutions: analytic (rho*, u*) targets whose residual under
  the full damped system is added as forcing, giving an exact reference for
  convergence measurements.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .gas import DampingProfile, GasParams, damping_coefficient
from .grid import GridField
from .initial_data import InitialDataSpec

DEFAULT_TOL = 1e-10


@dataclass
class ModeState:
    """One Fourier mode of the linearized sound variable."""

    xi: float
    vhat: complex
    vhat_dot: complex
    t: float = 0.0


def _integrate_batch(xi, v0, vd0, profile: DampingProfile, t0, t_eval, tol):
    """Integrate all modes simultaneously; the RHS is diagonal in the modes.

    xi, v0, vd0 are equal-length complex arrays; t_eval is an increasing
    array of output times with t_eval[0] >= t0.  Returns (v, vd) arrays of
    shape (len(t_eval), len(xi)).
    """
    xi = np.asarray(xi, dtype=float)
    k = len(xi)
    y0 = np.empty(4 * k)
    y0[0:k] = np.real(v0)
    y0[k:2 * k] = np.imag(v0)
    y0[2 * k:3 * k] = np.real(vd0)
    y0[3 * k:] = np.imag(vd0)
    xi2 = xi * xi
    mu, lam = profile.mu, profile.lam

    def rhs(t, y):
        a = mu / (1.0 + t) ** lam
        v = y[:2 * k]
        vd = y[2 * k:]
        out = np.empty_like(y)
        out[:2 * k] = vd
        out[2 * k:3 * k] = -a * vd[:k] - xi2 * v[:k]
        out[3 * k:] = -a * vd[k:] - xi2 * v[k:]
        return out

    t_end = float(t_eval[-1])
    if t_end == t0:
        v = (y0[0:k] + 1j * y0[k:2 * k])[None, :]
        vd = (y0[2 * k:3 * k] + 1j * y0[3 * k:])[None, :]
        return v, vd
    sol = solve_ivp(rhs, (t0, t_end), y0, method="DOP853",
                    t_eval=np.asarray(t_eval, dtype=float),
                    rtol=tol, atol=tol * 1e-2, dense_output=False)
    if not sol.success:
        raise RuntimeError(f"mode integration failed: {sol.message}")
    y = sol.y.T  # (n_times, 4k)
    v = y[:, 0:k] + 1j * y[:, k:2 * k]
    vd = y[:, 2 * k:3 * k] + 1j * y[:, 3 * k:]
    return v, vd


def integrate_mode(mode: ModeState, profile: DampingProfile, until: float,
                   tol: float = DEFAULT_TOL) -> ModeState:
    """Advance a single mode to `until` with adaptive high-order integration."""
    if until < mode.t:
        raise ValueError("until must be >= mode.t")
    if until == mode.t:
        return ModeState(mode.xi, mode.vhat, mode.vhat_dot, mode.t)
    v, vd = _integrate_batch(np.array([mode.xi]),
                             np.array([mode.vhat], dtype=complex),
                             np.array([mode.vhat_dot], dtype=complex),
                             profile, mode.t, np.array([until]), tol)
    return ModeState(mode.xi, complex(v[-1, 0]), complex(vd[-1, 0]), until)


def mode_energy(mode: ModeState) -> float:
    """Per-mode energy 0.5*(|vhat'|^2 + xi^2 |vhat|^2)."""
    return 0.5 * (abs(mode.vhat_dot) ** 2 + mode.xi ** 2 * abs(mode.vhat) ** 2)


def linear_solution(spec: InitialDataSpec, profile: DampingProfile,
                    grid: GridField, t, n_modes: int | None = None,
                    tol: float = DEFAULT_TOL):
    """Linearized v(x, t) by Fourier synthesis over the periodic domain.

    Initial data is the linearization of the run data: v(x,0) = eps*rho0(x)
    and dv/dt(x,0) = -d/dx (eps*u0(x)), the latter taken spectrally.  Valid
    exactly until waves reach the domain padding.  `t` may be a scalar or an
    increasing array of times; the result has matching leading shape.
    """
    n = grid.n_cells
    if n_modes is not None and n_modes > n // 2:
        raise ValueError("n_modes must be <= n_cells / 2")
    x = grid.x
    v0 = spec.epsilon * spec.rho0(x)
    u0 = spec.epsilon * spec.u0(x)
    xi = 2.0 * np.pi * np.fft.rfftfreq(n, d=grid.dx)
    vhat0 = np.fft.rfft(v0)
    vdhat0 = -1j * xi * np.fft.rfft(u0)
    if n_modes is not None:
        vhat0[n_modes + 1:] = 0.0
        vdhat0[n_modes + 1:] = 0.0

    times = np.atleast_1d(np.asarray(t, dtype=float))
    scalar = np.ndim(t) == 0
    if np.any(times < 0):
        raise ValueError("t must be >= 0")
    v, _ = _integrate_batch(xi, vhat0, vdhat0, profile, 0.0, times, tol)
    fields = np.fft.irfft(v, n=n, axis=1)
    return fields[0] if scalar else fields


@dataclass
class ManufacturedSolution:
    """Analytic compactly supported target (rho*, u*) and its PDE residual.

    rho*(x,t) = 1 + amp_rho * cos(freq_rho * t) * phi(x)
    u*(x,t)   =     amp_u   * cos(freq_u   * t) * phi(x)

    with phi the C-infinity bump of half-width R.  The residual of the damped
    system applied to the target is returned by `mass` / `momentum` and is
    meant to be passed as the solver's forcing, making (rho*, u*) the exact
    solution.
    """

    params: GasParams
    profile: DampingProfile
    amp_rho: float = 0.1
    amp_u: float = 0.08
    freq_rho: float = 1.3
    freq_u: float = 1.7
    R: float = 1.0

    def _phi(self, x):
        y = np.asarray(x, dtype=float) / self.R
        out = np.zeros_like(y)
        inside = np.abs(y) < 1.0
        yi = y[inside]
        out[inside] = np.exp(-1.0 / (1.0 - yi * yi))
        return out

    def _dphi(self, x):
        y = np.asarray(x, dtype=float) / self.R
        out = np.zeros_like(y)
        inside = np.abs(y) < 1.0
        yi = y[inside]
        w = 1.0 - yi * yi
        out[inside] = np.exp(-1.0 / w) * (-2.0 * yi / (w * w)) / self.R
        return out

    def rho(self, x, t):
        return 1.0 + self.amp_rho * np.cos(self.freq_rho * t) * self._phi(x)

    def u(self, x, t):
        return self.amp_u * np.cos(self.freq_u * t) * self._phi(x)

    def initial_field(self, grid: GridField) -> GridField:
        x = grid.x
        rho = self.rho(x, 0.0)
        return GridField(grid.x_min, grid.x_max, grid.n_cells,
                         rho, rho * self.u(x, 0.0), t=0.0)

    def mass(self, x, t):
        """Residual of the continuity equation at the target state."""
        phi, dphi = self._phi(x), self._dphi(x)
        gr = np.cos(self.freq_rho * t)
        gu = np.cos(self.freq_u * t)
        rho = 1.0 + self.amp_rho * gr * phi
        u = self.amp_u * gu * phi
        rho_t = -self.amp_rho * self.freq_rho * np.sin(self.freq_rho * t) * phi
        rho_x = self.amp_rho * gr * dphi
        u_x = self.amp_u * gu * dphi
        return rho_t + rho_x * u + rho * u_x

    def momentum(self, x, t):
        """Residual of the momentum equation (damping included) at the target."""
        phi, dphi = self._phi(x), self._dphi(x)
        gr = np.cos(self.freq_rho * t)
        gu = np.cos(self.freq_u * t)
        rho = 1.0 + self.amp_rho * gr * phi
        u = self.amp_u * gu * phi
        rho_t = -self.amp_rho * self.freq_rho * np.sin(self.freq_rho * t) * phi
        rho_x = self.amp_rho * gr * dphi
        u_t = -self.amp_u * self.freq_u * np.sin(self.freq_u * t) * phi
        u_x = self.amp_u * gu * dphi
        m_t = rho_t * u + rho * u_t
        dx_rho_u2 = rho_x * u * u + 2.0 * rho * u * u_x
        dx_p = rho ** (self.params.gamma - 1.0) * rho_x
        a = damping_coefficient(t, self.profile)
        return m_t + dx_rho_u2 + dx_p + a * rho * u


def manufactured_forcing(target: ManufacturedSolution):
    """The forcing object for solver.advance(): the target's PDE residual."""
    return target
