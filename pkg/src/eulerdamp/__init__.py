"""1-D isentropic Euler equations with time-decayed damping mu/(1+t)**lam.

A finite-volume solver plus the diagnostics needed to exhibit, numerically,
the dichotomy between global decay (mu > 2) and gradient blow-up
(0 <= mu <= 2) for the critical decay rate lam = 1.
"""

from .errors import ConfigError, DomainError, NumericalFailure
from .gas import (RHO_MIN, DampingProfile, GasParams, PrimitiveState,
                  SoundVars, damping_coefficient, damping_decay_factor,
                  pressure, primitive_to_soundvars, sound_speed,
                  soundvars_to_primitive)
from .grid import GridField, make_grid
from .initial_data import (HypothesisVerdict, InitialDataSpec, b0,
                           check_hypothesis, q0, q1, sample_initial)
from .profiles import make_profile, profile_names
from .solver import (FLAG_BLOWUP, FLAG_NONFINITE, FLAG_OK, FLAG_VACUUM,
                     RunTrace, SolverConfig, StepOutcome, advance,
                     compute_dt, damping_step, domain_half_width,
                     hyperbolic_step)

__version__ = "0.1.0"
