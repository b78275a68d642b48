"""Named smooth compactly supported profile shapes for initial perturbations.

Every profile is a function of x that vanishes identically outside |x| <= R
and is bounded by 1 in absolute value, so the run amplitude is controlled by
epsilon alone.  Available names:

    zero                identically 0
    bump                exp(-1/(1-(x/R)^2)) inside |x| < R   (C-infinity)
    poly2               (1-(x/R)^2)^2 inside |x| < R         (C-1)
    shifted_bump(s)     bump recentered at x = s with half-width R - |s|,
                        so the support stays inside [-R, R]

A leading ``-`` negates any profile, e.g. ``-bump``.
"""

import re

import numpy as np

_PARAM_RE = re.compile(r"^([a-zA-Z_][a-zA-Z0-9_]*)\s*(?:\(\s*([-+0-9.eE]+)\s*\))?$")


def _bump_shape(y):
    """exp(-1/(1-y^2)) for |y| < 1, exactly zero outside."""
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    inside = np.abs(y) < 1.0
    yi = y[inside]
    out[inside] = np.exp(-1.0 / (1.0 - yi * yi))
    return out


def _poly2_shape(y):
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    inside = np.abs(y) < 1.0
    yi = y[inside]
    out[inside] = (1.0 - yi * yi) ** 2
    return out


def make_profile(name: str, R: float):
    """Build the profile callable f(x) for a profile name on support radius R.

    Raises ValueError on unknown names or parameters that would push the
    support outside [-R, R].
    """
    name = name.strip()
    sign = 1.0
    while name.startswith("-"):
        sign = -sign
        name = name[1:].strip()
    m = _PARAM_RE.match(name)
    if m is None:
        raise ValueError(f"malformed profile name {name!r}")
    base, arg = m.group(1), m.group(2)

    if base == "zero":
        if arg is not None:
            raise ValueError("profile 'zero' takes no parameter")
        return lambda x: np.zeros_like(np.asarray(x, dtype=float))
    if base == "bump":
        if arg is not None:
            raise ValueError("profile 'bump' takes no parameter")
        return lambda x: sign * _bump_shape(np.asarray(x, dtype=float) / R)
    if base == "poly2":
        if arg is not None:
            raise ValueError("profile 'poly2' takes no parameter")
        return lambda x: sign * _poly2_shape(np.asarray(x, dtype=float) / R)
    if base == "shifted_bump":
        if arg is None:
            raise ValueError("profile 'shifted_bump' needs a center, e.g. shifted_bump(0.3)")
        s = float(arg)
        w = R - abs(s)
        if w <= 0.0:
            raise ValueError(f"shifted_bump center {s} leaves no support inside |x| <= {R}")
        return lambda x: sign * _bump_shape((np.asarray(x, dtype=float) - s) / w)
    raise ValueError(f"unknown profile {base!r}")


def profile_names():
    return ("zero", "bump", "poly2", "shifted_bump(s)")
