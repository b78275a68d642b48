"""Equation of state, variable transforms, and the time-decayed damping coefficient.

The gas is polytropic with p(rho) = rho**gamma / gamma, so the sound speed is
c = rho**((gamma-1)/2) and the background state rho = 1 has c = 1.  The scaled
sound-speed perturbation v = (2/(gamma-1))*(c - 1) symmetrizes the system and
is the variable the decay diagnostics are phrased in.  The damping coefficient
is a(t) = mu / (1+t)**lam.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Densities at or below this are treated as vacuum (a solver failure, not physics).
RHO_MIN = 1e-10


@dataclass(frozen=True)
class GasParams:
    """Polytropic gas with adiabatic exponent gamma > 1."""

    gamma: float = 2.0

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise DomainError(f"gamma must be > 1, got {self.gamma}")


@dataclass(frozen=True)
class DampingProfile:
    """Damping coefficient a(t) = mu / (1+t)**lam.

    lam = 1 is the critical scale-invariant case; lam = 0 recovers constant
    damping; mu = 0 switches damping off entirely.
    """

    mu: float
    lam: float = 1.0

    def __post_init__(self):
        if self.mu < 0:
            raise DomainError(f"mu must be >= 0, got {self.mu}")
        if self.lam < 0:
            raise DomainError(f"lam must be >= 0, got {self.lam}")


@dataclass
class PrimitiveState:
    """Density/velocity pair; rho is relative to the unit background."""

    rho: np.ndarray
    u: np.ndarray


@dataclass
class SoundVars:
    """Scaled sound-speed perturbation v = (2/(gamma-1))(c-1) and velocity u."""

    v: np.ndarray
    u: np.ndarray


def _check_positive_density(rho):
    if np.any(np.asarray(rho) <= RHO_MIN):
        raise DomainError("non-positive (vacuum) density")


def pressure(rho, params: GasParams):
    """p(rho) = rho**gamma / gamma."""
    _check_positive_density(rho)
    return np.asarray(rho) ** params.gamma / params.gamma


def sound_speed(rho, params: GasParams):
    """c(rho) = sqrt(p'(rho)) = rho**((gamma-1)/2)."""
    _check_positive_density(rho)
    return np.asarray(rho) ** (0.5 * (params.gamma - 1.0))


def primitive_to_soundvars(state: PrimitiveState, params: GasParams) -> SoundVars:
    """Map (rho, u) to (v, u) with v = (2/(gamma-1))(rho**((gamma-1)/2) - 1)."""
    c = sound_speed(state.rho, params)
    v = (2.0 / (params.gamma - 1.0)) * (c - 1.0)
    return SoundVars(v=v, u=np.asarray(state.u))


def soundvars_to_primitive(sv: SoundVars, params: GasParams) -> PrimitiveState:
    """Invert primitive_to_soundvars: rho = (1 + (gamma-1) v / 2)**(2/(gamma-1)).

    v <= -2/(gamma-1) corresponds to vacuum or negative sound speed and is
    rejected.
    """
    g1 = params.gamma - 1.0
    base = 1.0 + 0.5 * g1 * np.asarray(sv.v)
    if np.any(base <= 0.0):
        raise DomainError("v at or below vacuum bound -2/(gamma-1)")
    rho = base ** (2.0 / g1)
    return PrimitiveState(rho=rho, u=np.asarray(sv.u))


def damping_coefficient(t, profile: DampingProfile):
    """a(t) = mu / (1+t)**lam for t >= 0."""
    return profile.mu / (1.0 + np.asarray(t, dtype=float)) ** profile.lam


def damping_decay_factor(t, dt, profile: DampingProfile):
    """exp(-integral of a(s) ds over [t, t+dt]), the exact momentum decay over one step.

    Closed form ((1+t)/(1+t+dt))**mu for lam = 1, and
    exp(-mu * ((1+t+dt)**(1-lam) - (1+t)**(1-lam)) / (1-lam)) otherwise.
    Always in (0, 1] for mu > 0 and identically 1 for mu = 0.
    """
    if profile.mu == 0.0:
        return np.ones_like(np.asarray(t, dtype=float))[()] if np.ndim(t) else 1.0
    t = np.asarray(t, dtype=float)
    if profile.lam == 1.0:
        return ((1.0 + t) / (1.0 + t + dt)) ** profile.mu
    expo = 1.0 - profile.lam
    integral = profile.mu * ((1.0 + t + dt) ** expo - (1.0 + t) ** expo) / expo
    return np.exp(-integral)
