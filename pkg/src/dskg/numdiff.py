"""Finite-difference derivatives with Richardson extrapolation."""

from __future__ import annotations

import numpy as np

from .errors import DerivativeFailure

# error expansions of the base stencils, in powers of h
_ORDERS = {
    "central": (2, 4, 6, 8),
    "forward": (2, 3, 4, 5),  # (-3 f0 + 4 f1 - f2) / (2h)
    "backward": (2, 3, 4, 5),
}


def _stencil(f, x, h, kind):
    if kind == "central":
        return (f(x + h) - f(x - h)) / (2 * h)
    if kind == "forward":
        return (-3 * f(x) + 4 * f(x + h) - f(x + 2 * h)) / (2 * h)
    if kind == "backward":
        return (3 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (2 * h)
    raise ValueError(f"unknown stencil {kind!r}")


def richardson(estimates, orders, ratio=2.0):
    """Eliminate the leading error terms of a sequence of step-halved estimates.

    ``estimates[i]`` is the approximation at step h / ratio**i and
    ``orders`` lists the powers of h in its error expansion.  Returns the
    extrapolated value and the size of the last correction.
    """
    row = [np.asarray(e, dtype=float) for e in estimates]
    correction = np.zeros_like(row[0])
    for p in orders[: len(row) - 1]:
        fac = ratio**p
        new = [(fac * row[i + 1] - row[i]) / (fac - 1) for i in range(len(row) - 1)]
        correction = new[-1] - row[-1]
        row = new
    return row[-1], np.abs(correction)


def derivative(f, x, h, kind="central", levels=2):
    """Derivative of f at x from ``levels`` Richardson steps on top of a stencil.

    Returns (value, error_estimate).  ``kind`` is 'central', or 'forward' /
    'backward' for one-sided second-order stencils that never evaluate f on
    the far side of x.
    """
    try:
        orders = _ORDERS[kind]
    except KeyError as exc:
        raise ValueError(f"unknown stencil {kind!r}") from exc
    ests = [_stencil(f, x, h / 2**i, kind) for i in range(levels + 1)]
    value, corr = richardson(ests, orders)
    if not np.all(np.isfinite(value)):
        raise DerivativeFailure("non-finite finite-difference estimate")
    return value, corr
