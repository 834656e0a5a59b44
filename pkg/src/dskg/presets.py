"""Analytically defined data sets used by the CLI, tests and sweeps.

All presets are built from the standard mollifier
beta(s) = exp(1 / (s^2 - 1)) for |s| < 1 and 0 otherwise, which is C-infinity.
"""

from __future__ import annotations

import numpy as np

from .cauchy import CauchyData1D
from .errors import UnknownPreset, ValidationError
from .spherical import CauchyDataND

PRESETS = ("bump-phi0", "bump-phi1", "shell-3d", "source-pulse", "mode-cos")
# dimension used when the caller does not ask for one
DEFAULT_DIM = {"shell-3d": 3}

SHELL_CENTER, SHELL_HALF_WIDTH = 0.5, 0.1
PULSE_RADIUS = 0.5


def bump(s):
    """beta(s) = exp(1/(s^2 - 1)) inside (-1, 1), zero outside."""
    s = np.asarray(s, dtype=float)
    inside = np.abs(s) < 1.0
    out = np.zeros(s.shape)
    si = s[inside]
    out[inside] = np.exp(1.0 / (si * si - 1.0))
    return out[()] if out.ndim == 0 else out


def bump_prime(s):
    """beta'(s) = -2 s beta(s) / (s^2 - 1)^2."""
    s = np.asarray(s, dtype=float)
    inside = np.abs(s) < 1.0
    out = np.zeros(s.shape)
    si = s[inside]
    q = si * si - 1.0
    out[inside] = -2.0 * si * np.exp(1.0 / q) / (q * q)
    return out[()] if out.ndim == 0 else out


def _radial(profile, dprofile):
    """Point function and gradient of y -> profile(|y|)."""
    def fn(y):
        return profile(np.linalg.norm(y, axis=-1))

    def grad(y):
        r = np.linalg.norm(y, axis=-1)
        with np.errstate(invalid="ignore", divide="ignore"):
            scale = np.where(r > 0, dprofile(r) / np.where(r > 0, r, 1.0), 0.0)
        return y * scale[..., None]

    return fn, grad


def _pulse_time(b):
    return bump(2.0 * np.asarray(b, dtype=float) - 1.0)


def preset_data(name: str, n: int | None = None, amplitude: float = 1.0):
    """Named data set in dimension n (1 gives CauchyData1D, 2 or 3 CauchyDataND).

    bump-phi0, bump-phi1: beta(|x|) as position or velocity datum, support 1.
    shell-3d: velocity datum beta((|x| - 0.5)/0.1), supported in 0.4 < |x| < 0.6.
    source-pulse: f = beta(|x|/0.5) beta(2b - 1), supported in |x| < 0.5, 0 < b < 1.
    mode-cos: position datum cos(4 x_1) beta(|x|/3), support 3.
    """
    if name not in PRESETS:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    n = DEFAULT_DIM.get(name, 1) if n is None else int(n)
    if n < 1:
        raise ValidationError("dimension must be >= 1")
    A = float(amplitude)

    if name in ("bump-phi0", "bump-phi1"):
        prof, dprof, R = (lambda r: A * bump(r)), (lambda r: A * bump_prime(r)), 1.0
    elif name == "shell-3d":
        prof = lambda r: A * bump((np.asarray(r) - SHELL_CENTER) / SHELL_HALF_WIDTH)
        dprof = lambda r: A * bump_prime((np.asarray(r) - SHELL_CENTER) / SHELL_HALF_WIDTH) / SHELL_HALF_WIDTH
        R = SHELL_CENTER + SHELL_HALF_WIDTH
    elif name == "source-pulse":
        fprof = lambda r, b: A * bump(np.asarray(r) / PULSE_RADIUS) * _pulse_time(b)
        dfprof = lambda r, b: A * bump_prime(np.asarray(r) / PULSE_RADIUS) / PULSE_RADIUS * _pulse_time(b)
        if n == 1:
            return CauchyData1D(f=lambda y, b: fprof(np.abs(y), b), Rf=PULSE_RADIUS,
                                source_times=(0.0, 1.0), name=name)
        fn = lambda y, b: fprof(np.linalg.norm(y, axis=-1), b)

        def grad(y, b):
            r = np.linalg.norm(y, axis=-1)
            scale = np.where(r > 0, dfprof(r, b) / np.where(r > 0, r, 1.0), 0.0)
            return y * scale[..., None]

        return CauchyDataND(n, f=fn, gradf=grad, Rf=PULSE_RADIUS, source_times=(0.0, 1.0),
                            radial_f=fprof, dradial_f=dfprof, name=name)
    else:  # mode-cos
        if n == 1:
            return CauchyData1D(phi0=lambda x: A * np.cos(4 * np.asarray(x)) * bump(np.asarray(x) / 3.0),
                                R0=3.0, name=name)

        def fn(y):
            return A * np.cos(4 * y[..., 0]) * bump(np.linalg.norm(y, axis=-1) / 3.0)

        def grad(y):
            r = np.linalg.norm(y, axis=-1)
            c, s = np.cos(4 * y[..., 0]), np.sin(4 * y[..., 0])
            scale = np.where(r > 0, bump_prime(r / 3.0) / 3.0 / np.where(r > 0, r, 1.0), 0.0)
            g = A * c[..., None] * y * scale[..., None]
            g[..., 0] -= A * 4 * s * bump(r / 3.0)
            return g

        return CauchyDataND(n, phi0=fn, grad0=grad, R0=3.0, name=name)

    slot = "1" if name in ("bump-phi1", "shell-3d") else "0"
    if n == 1:
        fn1 = lambda x: prof(np.abs(np.asarray(x, dtype=float)))
        return CauchyData1D(**{f"phi{slot}": fn1, f"R{slot}": R}, name=name)
    fn, grad = _radial(prof, dprof)
    return CauchyDataND(n, **{f"phi{slot}": fn, f"grad{slot}": grad, f"R{slot}": R,
                              f"radial{slot}": prof, f"dradial{slot}": dprof}, name=name)
