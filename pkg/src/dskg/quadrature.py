"""Adaptive one-dimensional quadrature for vector-valued integrands.

The integrand is called with a 1-D array of nodes and must return an array
whose first axis runs over those nodes; any trailing axes are carried along,
so one call can integrate for a whole batch of observation points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import QuadratureFailure, ValidationError

RULES = ("gauss-legendre", "tanh-sinh")


@dataclass(frozen=True)
class QuadratureSpec:
    """Rule and tolerances for the adaptive integrators.

    ``panels`` is the number of initial panels per breakpoint interval;
    ``max_panels`` caps the total number of panels the bisection may create.
    """

    rule: str = "gauss-legendre"
    panels: int = 1
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_panels: int = 2**14
    order: int = 16

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValidationError(f"unknown quadrature rule {self.rule!r}")
        if self.panels < 1 or self.max_panels < self.panels:
            raise ValidationError("need 1 <= panels <= max_panels")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValidationError("quadrature tolerances must be positive")
        if self.order < 2:
            raise ValidationError("Gauss-Legendre order must be at least 2")


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_nodes(order):
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


def _panel_rule(f, lo, hi, x, w):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.asarray(f(nodes), dtype=float)
    vals = vals.reshape((lo.size, x.size) + vals.shape[1:])
    out = np.tensordot(vals, w, axes=([1], [0]))  # (P, ...)
    return out * half.reshape((-1,) + (1,) * (out.ndim - 1))


def _maxabs(a):
    a = np.abs(a)
    return a.reshape(a.shape[0], -1).max(axis=1) if a.ndim > 1 else a


def gauss_legendre_adaptive(f, a, b, spec=QuadratureSpec(), breakpoints=()):
    """Integrate f over [a, b] by Gauss-Legendre panels with bisection.

    Each panel's estimate is compared with the sum over its two halves; a
    panel is accepted when the difference is below its width-proportional
    share of max(abs_tol, rel_tol * |I|).  Returns (integral, error_estimate).
    """
    a, b = float(a), float(b)
    if a == b:
        probe = np.asarray(f(np.array([a])), dtype=float)
        return np.zeros(probe.shape[1:]), 0.0
    if b < a:
        val, err = gauss_legendre_adaptive(f, b, a, spec, breakpoints)
        return -val, err

    x, w = _gl_nodes(spec.order)
    edges = [a] + sorted(float(p) for p in set(breakpoints) if a < p < b) + [b]
    lo = np.concatenate([np.linspace(l, r, spec.panels + 1)[:-1] for l, r in zip(edges[:-1], edges[1:])])
    hi = np.concatenate([np.linspace(l, r, spec.panels + 1)[1:] for l, r in zip(edges[:-1], edges[1:])])
    length = b - a
    est = _panel_rule(f, lo, hi, x, w)
    total = np.zeros(est.shape[1:])
    err_total = 0.0
    n_panels = lo.size

    while lo.size:
        mid = 0.5 * (lo + hi)
        left = _panel_rule(f, lo, mid, x, w)
        right = _panel_rule(f, mid, hi, x, w)
        refined = left + right
        diff = _maxabs(refined - est)
        scale = np.max(np.abs(total + refined.sum(axis=0)), initial=0.0)
        tol = max(spec.abs_tol, spec.rel_tol * scale)
        accept = diff <= tol * (hi - lo) / length
        # panels that can no longer be split in floating point are accepted
        accept |= (mid <= lo) | (mid >= hi)
        if np.any(accept):
            total = total + refined[accept].sum(axis=0)
            err_total += float(diff[accept].sum())
        keep = ~accept
        n_panels += int(keep.sum())
        if n_panels > spec.max_panels:
            raise QuadratureFailure(
                f"adaptive Gauss-Legendre exceeded {spec.max_panels} panels on [{a:g}, {b:g}]"
            )
        lo = np.concatenate([lo[keep], mid[keep]])
        hi = np.concatenate([mid[keep], hi[keep]])
        est = np.concatenate([left[keep], right[keep]])
    return total, err_total


def tanh_sinh(f, a, b, spec=QuadratureSpec(rule="tanh-sinh"), max_level=10):
    """Double-exponential quadrature on [a, b], robust to endpoint singularities.

    Nodes are generated as distances from the nearer endpoint so that points
    extremely close to a or b are represented without cancellation.  The
    step is halved until successive estimates agree to tolerance.
    """
    a, b = float(a), float(b)
    if a == b:
        probe = np.asarray(f(np.array([a])), dtype=float)
        return np.zeros(probe.shape[1:]), 0.0
    if b < a:
        val, err = tanh_sinh(f, b, a, spec, max_level)
        return -val, err
    length = b - a
    tmax = 3.2

    def nodes_weights(t):
        u = 0.5 * np.pi * np.sinh(t)
        w = 0.5 * np.pi * np.cosh(t) / np.cosh(u) ** 2 * 0.5 * length
        d = length / (1.0 + np.exp(2.0 * np.abs(u)))
        pts = np.where(t < 0, a + d, b - d)
        ok = (d > 0) & (pts > a) & (pts < b) & (w > 0)
        return pts[ok], w[ok]

    h = 0.5
    t = np.arange(-tmax, tmax + 0.5 * h, h)
    pts, w = nodes_weights(t)
    acc = np.tensordot(np.asarray(f(pts), dtype=float), w, axes=([0], [0]))
    est = h * acc
    for _ in range(max_level):
        h *= 0.5
        t = np.arange(-tmax + h, tmax, 2 * h)
        pts, w = nodes_weights(t)
        if pts.size:
            acc = acc + np.tensordot(np.asarray(f(pts), dtype=float), w, axes=([0], [0]))
        new = h * acc
        diff = float(np.max(np.abs(new - est), initial=0.0))
        tol = max(spec.abs_tol, spec.rel_tol * float(np.max(np.abs(new), initial=0.0)))
        est = new
        if diff <= tol:
            return est, diff
    raise QuadratureFailure(f"tanh-sinh did not converge on [{a:g}, {b:g}]")


def integrate(f, a, b, spec=QuadratureSpec(), breakpoints=()):
    """Dispatch to the rule named in ``spec``."""
    if spec.rule == "tanh-sinh":
        return tanh_sinh(f, a, b, spec)
    return gauss_legendre_adaptive(f, a, b, spec, breakpoints)
