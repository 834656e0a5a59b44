"""Representation formulas in n >= 2 space dimensions.

The n-dimensional solutions are built from v(x, r), the solution at time r
of the flat wave equation with data (phi, 0):

* n = 3:  v = d/dr (r I(x, r)),  I the mean of phi over the sphere |y - x| = r.
* n = 2:  v = d/dr ((r / 2 pi) int_{|y|<1} phi(x + r y) / sqrt(1 - |y|^2) dy).

Then, with p = 1 - e^-t,

    u_hom = e^(t/2) v0(x, p) + 2 int_0^1 v0(x, p s) K0(p s, t) p ds
            + 2 int_0^1 v1(x, p s) K1(p s, t) p ds,
    u_src = 2 int_0^t db int_0^(e^-b - e^-t) v(x, r; b) E(r, t; 0, b) dr.

Radial derivatives are taken under the integral sign when a gradient is
available, otherwise by Richardson-extrapolated central differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from .errors import DerivativeFailure, ValidationError
from .kernels import CurvedMass, K0_array, K1_array, kernel_E
from .numdiff import derivative
from .quadrature import QuadratureSpec, gauss_legendre_adaptive, tanh_sinh

EDGE_FRACTION = 0.01
# number of (r, time) pairs whose sphere samples are materialized at once
PAIR_CHUNK = 256


@dataclass(frozen=True)
class SphericalConstants:
    """Area of the unit sphere S^(n-1) and the odd-product constant c0."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("dimension must be >= 2")

    @property
    def omega_nm1(self) -> float:
        return 2 * math.pi ** (self.n / 2) / math.gamma(self.n / 2)

    @property
    def c0n(self) -> float:
        top = self.n - 2 if self.n % 2 else self.n - 1
        return float(math.prod(range(1, top + 1, 2)))


@dataclass(frozen=True)
class SphereRule:
    """Product rule on S^(n-1): Gauss-Legendre in cos(theta) times a
    trapezoid in azimuth (n=3), or a trapezoid on the circle (n=2).
    Weights sum to one, so the rule returns means."""

    n: int = 3
    n_theta: int = 32
    n_phi: int = 64
    n_circle: int = 128

    @cached_property
    def nodes(self):
        if self.n == 2:
            a = 2 * np.pi * np.arange(self.n_circle) / self.n_circle
            pts = np.stack([np.cos(a), np.sin(a)], axis=-1)
            return pts, np.full(self.n_circle, 1.0 / self.n_circle)
        if self.n != 3:
            raise ValidationError("sphere rule implemented for n = 2, 3")
        c, wc = np.polynomial.legendre.leggauss(self.n_theta)
        a = 2 * np.pi * np.arange(self.n_phi) / self.n_phi
        st = np.sqrt(1 - c**2)
        pts = np.stack([
            np.outer(st, np.cos(a)).ravel(),
            np.outer(st, np.sin(a)).ravel(),
            np.repeat(c, self.n_phi),
        ], axis=-1)
        w = np.repeat(wc / 2, self.n_phi) / self.n_phi
        return pts, w


@dataclass(frozen=True)
class BallRule:
    """Rule for int_{|y|<1} g(y) / sqrt(1 - |y|^2) dy in the plane.

    With |y| = sin(psi) the weight becomes sin(psi) dpsi dphi, which is
    smooth, so Gauss-Legendre in psi and a trapezoid in azimuth suffice.
    """

    n_psi: int = 48
    n_phi: int = 128

    @cached_property
    def nodes(self):
        x, w = np.polynomial.legendre.leggauss(self.n_psi)
        psi = 0.25 * np.pi * (x + 1)
        wpsi = 0.25 * np.pi * w * np.sin(psi)
        a = 2 * np.pi * np.arange(self.n_phi) / self.n_phi
        rho = np.sin(psi)
        pts = np.stack([np.outer(rho, np.cos(a)).ravel(), np.outer(rho, np.sin(a)).ravel()], axis=-1)
        wts = np.repeat(wpsi, self.n_phi) * (2 * np.pi / self.n_phi)
        return pts, wts


@dataclass(frozen=True)
class CauchyDataND:
    """Data for the n-dimensional problem.

    Callables take points with the coordinate on the last axis: ``phi0(y)``
    with y of shape (..., n) and ``f(y, b)`` with b broadcast against
    y[..., 0].  Gradients return (..., n).  The optional ``radial*``
    profiles (functions of |y|, with derivatives ``dradial*``) describe
    radially symmetric data and enable the closed-form n=3 means.
    ``wave_solutions`` lets a caller supply v(x, r) directly, which is
    required for n > 3.
    """

    n: int
    phi0: Optional[Callable] = None
    phi1: Optional[Callable] = None
    f: Optional[Callable] = None
    grad0: Optional[Callable] = None
    grad1: Optional[Callable] = None
    gradf: Optional[Callable] = None
    R0: float = 0.0
    R1: float = 0.0
    Rf: float = 0.0
    source_times: tuple = (0.0, math.inf)
    radial0: Optional[Callable] = None
    radial1: Optional[Callable] = None
    radial_f: Optional[Callable] = None
    dradial0: Optional[Callable] = None
    dradial1: Optional[Callable] = None
    dradial_f: Optional[Callable] = None
    wave_solutions: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("CauchyDataND needs n >= 2")
        if self.n > 3 and not self.wave_solutions:
            raise ValidationError(
                "n > 3 needs user-supplied wave solutions; the radial-derivative "
                "chain is too sensitive to differentiate numerically"
            )

    @property
    def support_radius(self) -> float:
        r = [0.0]
        for fn, R in ((self.phi0, self.R0), (self.phi1, self.R1), (self.f, self.Rf)):
            if fn is not None:
                r.append(R)
        return max(r)

    @property
    def is_radial(self) -> bool:
        pairs = ((self.phi0, self.radial0), (self.phi1, self.radial1), (self.f, self.radial_f))
        return all(fn is None or prof is not None for fn, prof in pairs)


def sphere_mean(phi, x, r, n=3, rule=None):
    """Mean of phi over the sphere of radius r about x (r scalar or array)."""
    rule = rule or SphereRule(n)
    pts, w = rule.nodes
    x = np.asarray(x, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValidationError("radius must be >= 0")
    y = x + r[..., None, None] * pts
    return phi(y) @ w


def ball_mean_weighted(phi, x, r, rule=None):
    """int_{|y|<1} phi(x + r y) / sqrt(1 - |y|^2) dy in the plane."""
    rule = rule or BallRule()
    pts, w = rule.nodes
    x = np.asarray(x, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValidationError("radius must be >= 0")
    y = x + r[..., None, None] * pts
    return phi(y) @ w


def _rule_for(n, rule):
    if rule is not None:
        return rule
    return SphereRule(3) if n == 3 else BallRule()


def v_phi(phi, x, r, n=3, grad=None, rule=None):
    """Flat wave solution with data (phi, 0) at time r, for scalar or array r.

    Uses the gradient under the integral sign when given; otherwise a
    central difference of r I(r) (odd and smooth in r) with step
    1e-4 (1 + r) and two Richardson levels.
    """
    if n not in (2, 3):
        raise ValidationError("v_phi is implemented for n = 2, 3")
    rule = _rule_for(n, rule)
    pts, w = rule.nodes
    x = np.asarray(x, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValidationError("radius must be >= 0")
    norm = 1.0 if n == 3 else 1.0 / (2 * np.pi)
    if grad is not None:
        y = x + r[..., None, None] * pts
        mean = phi(y) @ w
        dmean = np.einsum("...qk,qk,q->...", grad(y), pts, w)
        return norm * (mean + r * dmean)

    def rI(rr):
        rr = np.asarray(rr, dtype=float)
        y = x + rr[..., None, None] * pts
        return rr * (phi(y) @ w)

    h = 1e-4 * (1 + r)
    val, err = derivative(rI, r, h, "central", levels=2)
    if np.any(err > 1e-6 * (1 + np.abs(val))):
        raise DerivativeFailure("radial derivative of the spherical mean did not settle")
    return norm * val


def v_radial3(profile, dprofile, rho, r):
    """Exact n=3 wave solution for radial data g at distance rho from the origin.

    v = [(rho + r) g(rho + r) + (rho - r) g(|rho - r|)] / (2 rho), and
    g(r) + r g'(r) on the axis (rho below 1e-6).  A scalar rho gives an
    array shaped like r; an array rho gives shape r.shape + rho.shape.
    """
    r = np.asarray(r, dtype=float)
    rho = np.asarray(rho, dtype=float)
    if rho.ndim == 0:
        rho = float(rho)
        if rho < 1e-6:
            return profile(r) + r * dprofile(r)
        return ((rho + r) * profile(rho + r) + (rho - r) * profile(np.abs(rho - r))) / (2 * rho)
    rr = r[..., None]
    axis = rho < 1e-6
    safe = np.where(axis, 1.0, rho)
    off = ((safe + rr) * profile(safe + rr) + (safe - rr) * profile(np.abs(safe - rr))) / (2 * safe)
    if np.any(axis):
        on = profile(rr) + rr * dprofile(rr)
        off = np.where(axis, on, off)
    return off


class _WaveField:
    """v(x, r[, b]) for one datum, choosing the cheapest exact route."""

    def __init__(self, data: CauchyDataND, which: str, rule, radial_fast: bool):
        self.n = data.n
        self.fn = getattr(data, which)
        grads = {"phi0": data.grad0, "phi1": data.grad1, "f": data.gradf}
        radials = {"phi0": (data.radial0, data.dradial0), "phi1": (data.radial1, data.dradial1),
                   "f": (data.radial_f, data.dradial_f)}
        self.grad = grads[which]
        self.profile, self.dprofile = radials[which]
        self.user = data.wave_solutions.get(which)
        self.rule = _rule_for(self.n, rule)
        self.radial = self.n == 3 and self.profile is not None and self.dprofile is not None
        self.fast = radial_fast and self.radial

    def static(self, x, r):
        """v(x, r) for time-independent data; r is a 1-D array."""
        if self.user is not None:
            return np.asarray(self.user(x, r), dtype=float)
        if self.fast:
            return v_radial3(self.profile, self.dprofile, np.linalg.norm(x), r)
        out = np.empty(r.shape)
        for sl in _chunks(r.size):
            out[sl] = v_phi(self.fn, x, r[sl], self.n, self.grad, self.rule)
        return out

    def timed(self, x, r, b):
        """v(x, r; b) for the source f(., b) at matching arrays r and b."""
        if self.user is not None:
            return np.asarray(self.user(x, r, b), dtype=float)
        if self.fast:
            rho = np.linalg.norm(x)
            return v_radial3(lambda s: self.profile(s, b), lambda s: self.dprofile(s, b), rho, r)
        out = np.empty(r.shape)
        for sl in _chunks(r.size):
            bs = b[sl]
            fn = lambda y, bs=bs: self.fn(y, bs[:, None])
            gr = None if self.grad is None else (lambda y, bs=bs: self.grad(y, bs[:, None]))
            out[sl] = v_phi(fn, x, r[sl], self.n, gr, self.rule)
        return out

    def static_radial(self, rho, r):
        """v at distances rho (1-D) for radial data: shape (r.size, rho.size)."""
        return v_radial3(self.profile, self.dprofile, rho, r)

    def timed_radial(self, rho, r, b):
        bb = b[..., None]
        return v_radial3(lambda s: self.profile(s, bb), lambda s: self.dprofile(s, bb), rho, r)


def _chunks(n):
    return [slice(i, min(i + PAIR_CHUNK, n)) for i in range(0, n, PAIR_CHUNK)]


@dataclass
class SolutionND:
    """Evaluator u(x, t) for points x of shape (n,) or (m, n).

    For radial n=3 data ``radial(rho, t)`` evaluates u at many distances
    from the origin in one vectorized pass.
    """

    evaluator: Callable
    mass: CurvedMass
    data: CauchyDataND
    quad: QuadratureSpec
    kind: str
    radial_evaluator: Optional[Callable] = None

    def __call__(self, x, t):
        x = np.asarray(x, dtype=float)
        if x.ndim == 1:
            return float(self.evaluator(x, float(t)))
        return np.array([self.evaluator(xi, float(t)) for xi in x.reshape(-1, x.shape[-1])]).reshape(x.shape[:-1])

    def radial(self, rho, t):
        if self.radial_evaluator is None:
            raise ValidationError("radial evaluation needs n = 3 data with radial profiles")
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        if np.any(rho < 0):
            raise ValidationError("distances must be >= 0")
        return self.radial_evaluator(rho, float(t))


def _check_point(data, x):
    if x.shape != (data.n,):
        raise ValidationError(f"expected a point with {data.n} coordinates, got shape {x.shape}")


def _homogeneous_core(v0, v1, M, q, t, shape):
    """Time-t value from wave fields v0(r), v1(r) returning (r.size,) + shape."""
    p = -math.expm1(-t)
    u = np.zeros(shape)
    if v0 is not None:
        u = u + math.exp(0.5 * t) * v0(np.array([p]))[0]
    if v0 is None and v1 is None:
        return u
    ext = (1,) * len(shape)

    def integrand(s):
        r = p * s
        val = np.zeros((s.size,) + shape)
        if v0 is not None:
            val += v0(r) * K0_array(r, t, M).reshape((-1,) + ext)
        if v1 is not None:
            val += v1(r) * K1_array(r, t, M).reshape((-1,) + ext)
        return 2 * p * val

    split = 1.0 - EDGE_FRACTION
    bulk, _ = gauss_legendre_adaptive(integrand, 0.0, split, q)
    edge, _ = tanh_sinh(integrand, split, 1.0, QuadratureSpec("tanh-sinh", abs_tol=q.abs_tol, rel_tol=q.rel_tol))
    return u + bulk + edge


def _source_core(vf, M, q, t, source_times, shape):
    """Time-t source value from vf(r, b) returning r.shape + shape."""
    st = math.exp(-t)
    ext = (1,) * len(shape)

    def outer(b):
        w = np.exp(-b) - st

        def inner(uu):
            r = uu[:, None] * w[None, :]
            bb = np.broadcast_to(b[None, :], r.shape)
            E = kernel_E(r, t, bb, M)
            v = vf(r.ravel(), bb.ravel()).reshape(r.shape + shape)
            return v * E.reshape(E.shape + ext)

        val, _ = gauss_legendre_adaptive(inner, 0.0, 1.0, q)
        return 2 * val * w.reshape((-1,) + ext)

    lo, hi = source_times
    breaks = [bp for bp in (lo, hi) if 0.0 < bp < t]
    val, _ = gauss_legendre_adaptive(outer, 0.0, min(t, hi), q, breakpoints=breaks)
    return val


def _homogeneous_nd_at(data, M, q, fields, x, t):
    _check_point(data, x)
    if t < 0:
        raise ValidationError("t must be >= 0")
    if t == 0:
        return float(data.phi0(x)) if data.phi0 is not None else 0.0
    v0, v1 = fields
    f0 = None if v0 is None else (lambda r: v0.static(x, r))
    f1 = None if v1 is None else (lambda r: v1.static(x, r))
    return float(_homogeneous_core(f0, f1, M, q, t, ()))


def _homogeneous_radial_at(data, M, q, fields, rho, t):
    if t < 0:
        raise ValidationError("t must be >= 0")
    if t == 0:
        return data.radial0(rho) if data.radial0 is not None else np.zeros(rho.shape)
    v0, v1 = fields
    f0 = None if v0 is None else (lambda r: v0.static_radial(rho, r))
    f1 = None if v1 is None else (lambda r: v1.static_radial(rho, r))
    return _homogeneous_core(f0, f1, M, q, t, rho.shape)


def _source_nd_at(data, M, q, vf, x, t):
    _check_point(data, x)
    if t < 0:
        raise ValidationError("t must be >= 0")
    if t == 0 or vf is None:
        return 0.0
    return float(_source_core(lambda r, b: vf.timed(x, r, b), M, q, t, data.source_times, ()))


def _source_radial_at(data, M, q, vf, rho, t):
    if t < 0:
        raise ValidationError("t must be >= 0")
    if t == 0 or vf is None:
        return np.zeros(rho.shape)
    return _source_core(lambda r, b: vf.timed_radial(rho, r, b), M, q, t, data.source_times, rho.shape)


def solve_homogeneous_nd(data: CauchyDataND, mass: CurvedMass, q: QuadratureSpec = QuadratureSpec(),
                         rule=None, radial_fast: bool = False) -> SolutionND:
    """Source-free solution with data (phi0, phi1) in n = 2 or 3 dimensions.

    ``radial_fast`` replaces the sphere quadrature by the exact formula for
    radial data when n = 3 and profiles are available.
    """
    v0 = _WaveField(data, "phi0", rule, radial_fast) if data.phi0 is not None else None
    v1 = _WaveField(data, "phi1", rule, radial_fast) if data.phi1 is not None else None
    radial = None
    if data.n == 3 and all(v is None or v.radial for v in (v0, v1)):
        radial = lambda rho, t: _homogeneous_radial_at(data, mass.M, q, (v0, v1), rho, t)
    return SolutionND(lambda x, t: _homogeneous_nd_at(data, mass.M, q, (v0, v1), x, t),
                      mass, data, q, "homogeneous", radial)


def solve_source_nd(data: CauchyDataND, mass: CurvedMass, q: QuadratureSpec = QuadratureSpec(),
                    rule=None, radial_fast: bool = False) -> SolutionND:
    """Solution with source f and zero data in n = 2 or 3 dimensions."""
    vf = _WaveField(data, "f", rule, radial_fast) if data.f is not None else None
    radial = None
    if data.n == 3 and (vf is None or vf.radial):
        radial = lambda rho, t: _source_radial_at(data, mass.M, q, vf, rho, t)
    return SolutionND(lambda x, t: _source_nd_at(data, mass.M, q, vf, x, t), mass, data, q, "source", radial)
