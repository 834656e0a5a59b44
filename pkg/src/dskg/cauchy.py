"""One-dimensional Cauchy problem by quadrature of the closed-form solutions.

Homogeneous problem with data u(x,0) = phi0, u_t(x,0) = phi1:

    u = 1/2 e^(t/2) [phi0(x + p) + phi0(x - p)]
        + int_0^p [phi0(x-z) + phi0(x+z)] K0(z,t) dz
        + int_0^p [phi1(x-z) + phi1(x+z)] K1(z,t) dz,     p = 1 - e^-t.

Source problem with zero data:

    u = int_0^t db int_0^(e^-b - e^-t) [f(x+z,b) + f(x-z,b)] E(z,t;0,b) dz.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ValidationError
from .kernels import CurvedMass, K0_array, K1_array, kernel_E
from .quadrature import QuadratureSpec, gauss_legendre_adaptive, tanh_sinh

# fraction of the K0 interval handed to tanh-sinh at the cone edge
EDGE_FRACTION = 0.01
X_BLOCK = 128


@dataclass(frozen=True)
class CauchyData1D:
    """Initial data and source for the 1D problem.

    Callables must accept numpy arrays: ``phi0(x)``, ``phi1(x)`` and
    ``f(y, b)`` (broadcasting).  Support radii are declared, not inferred;
    ``Rf`` may be a number or a function of time.  ``source_times`` gives
    an interval outside which f vanishes in time.
    """

    phi0: Optional[Callable] = None
    phi1: Optional[Callable] = None
    f: Optional[Callable] = None
    R0: float = 0.0
    R1: float = 0.0
    Rf: float | Callable = 0.0
    source_times: tuple = (0.0, math.inf)
    smoothness: int = 2
    name: str = ""

    def __post_init__(self):
        if self.smoothness < 2:
            raise ValidationError("data must be at least C^2")
        if min(self.R0, self.R1) < 0:
            raise ValidationError("support radii must be >= 0")

    def source_radius(self, b) -> float:
        return float(self.Rf(b)) if callable(self.Rf) else float(self.Rf)

    @property
    def support_radius(self) -> float:
        """Largest declared support radius over all data."""
        r = [0.0]
        if self.phi0 is not None:
            r.append(self.R0)
        if self.phi1 is not None:
            r.append(self.R1)
        if self.f is not None:
            if callable(self.Rf):
                lo, hi = self.source_times
                bs = np.linspace(lo, min(hi, lo + 20.0), 201)
                r.append(max(self.source_radius(b) for b in bs))
            else:
                r.append(float(self.Rf))
        return max(r)

    def spot_check(self, n=64, seed=0) -> bool:
        """True if every callable vanishes at random points outside its support."""
        rng = np.random.default_rng(seed)
        ok = True
        for fn, R in ((self.phi0, self.R0), (self.phi1, self.R1)):
            if fn is not None:
                x = (R + rng.uniform(1e-9, 5.0, n)) * rng.choice([-1.0, 1.0], n)
                ok &= bool(np.all(np.asarray(fn(x)) == 0.0))
        if self.f is not None:
            lo, hi = self.source_times
            b = rng.uniform(lo, min(hi, lo + 5.0), n)
            R = np.array([self.source_radius(bi) for bi in b])
            y = (R + rng.uniform(1e-9, 5.0, n)) * rng.choice([-1.0, 1.0], n)
            ok &= bool(np.all(np.asarray(self.f(y, b)) == 0.0))
        return ok


@dataclass
class Solution1D:
    """Evaluator u(x, t) with the metadata it was built from."""

    evaluator: Callable
    mass: CurvedMass
    data: CauchyData1D
    quad: QuadratureSpec
    kind: str = "homogeneous"
    threads: int = 1

    def __call__(self, x, t):
        """u at time t (scalar) for scalar or array x."""
        x = np.asarray(x, dtype=float)
        out = np.concatenate([
            self.evaluator(blk, float(t)) for blk in np.array_split(x.ravel(), max(1, -(-x.size // X_BLOCK)))
        ]) if x.size else np.zeros(0)
        return out.reshape(x.shape)[()] if x.ndim == 0 else out.reshape(x.shape)

    def grid(self, xs, ts):
        """Array of shape (len(ts), len(xs)); times may be evaluated in parallel."""
        xs = np.asarray(xs, dtype=float)
        ts = [float(t) for t in ts]
        if self.threads > 1 and len(ts) > 1:
            with ThreadPoolExecutor(self.threads) as pool:
                rows = list(pool.map(lambda t: self(xs, t), ts))
        else:
            rows = [self(xs, t) for t in ts]
        return np.array(rows)


def dependence_domain(x, t):
    """Base at time 0 of the backward cone through (x, t): [x - p, x + p], p = 1 - e^-t."""
    if t < 0:
        raise ValidationError("t must be >= 0")
    p = -math.expm1(-t)
    return (x - p, x + p)


def _sym(fn, x, z):
    """fn(x - z) + fn(x + z) on the grid z[:, None], x[None, :]."""
    return fn(x[None, :] - z[:, None]) + fn(x[None, :] + z[:, None])


def _homogeneous_at(data, M, q, x, t):
    if t < 0:
        raise ValidationError("t must be >= 0")
    u = np.zeros_like(x)
    if t == 0:
        return u + data.phi0(x) if data.phi0 is not None else u
    p = -math.expm1(-t)
    if data.phi0 is not None:
        u = u + 0.5 * math.exp(0.5 * t) * (data.phi0(x + p) + data.phi0(x - p))

    def integrand(z):
        val = np.zeros((z.size, x.size))
        if data.phi0 is not None:
            val += _sym(data.phi0, x, z) * K0_array(z, t, M)[:, None]
        if data.phi1 is not None:
            val += _sym(data.phi1, x, z) * K1_array(z, t, M)[:, None]
        return val

    if data.phi0 is None and data.phi1 is None:
        return u
    split = (1.0 - EDGE_FRACTION) * p
    bulk, _ = gauss_legendre_adaptive(integrand, 0.0, split, q)
    edge_spec = QuadratureSpec("tanh-sinh", abs_tol=q.abs_tol, rel_tol=q.rel_tol)
    edge, _ = tanh_sinh(integrand, split, p, edge_spec)
    return u + bulk + edge


def _source_at(data, M, q, x, t):
    if t < 0:
        raise ValidationError("t must be >= 0")
    if t == 0 or data.f is None:
        return np.zeros_like(x)
    f = data.f
    st = math.exp(-t)

    def outer(b):
        w = np.exp(-b) - st  # cone half-width at each b

        def inner(uu):
            z = uu[:, None] * w[None, :]  # (nu, nb)
            E = kernel_E(z, t, b[None, :], M)
            bb = b[None, :, None]
            xx = x[None, None, :]
            zz = z[:, :, None]
            return (f(xx + zz, bb) + f(xx - zz, bb)) * E[:, :, None]

        val, _ = gauss_legendre_adaptive(inner, 0.0, 1.0, q)
        return val * w[:, None]

    lo, hi = data.source_times
    breaks = [bp for bp in (lo, hi) if 0.0 < bp < t]
    val, _ = gauss_legendre_adaptive(outer, 0.0, min(t, hi), q, breakpoints=breaks)
    return val


def solve_homogeneous_1d(data: CauchyData1D, mass: CurvedMass, q: QuadratureSpec = QuadratureSpec(),
                         threads: int = 1) -> Solution1D:
    """Solution of the source-free problem with data (phi0, phi1)."""
    return Solution1D(lambda x, t: _homogeneous_at(data, mass.M, q, x, t), mass, data, q,
                      "homogeneous", threads)


def solve_source_1d(data: CauchyData1D, mass: CurvedMass, q: QuadratureSpec = QuadratureSpec(),
                    threads: int = 1) -> Solution1D:
    """Solution with source f and vanishing initial data."""
    return Solution1D(lambda x, t: _source_at(data, mass.M, q, x, t), mass, data, q, "source", threads)


def solve_1d(data: CauchyData1D, mass: CurvedMass, q: QuadratureSpec = QuadratureSpec(),
             threads: int = 1) -> Solution1D:
    """Full solution: homogeneous part plus source part (by linearity)."""
    def ev(x, t):
        return _homogeneous_at(data, mass.M, q, x, t) + _source_at(data, mass.M, q, x, t)
    return Solution1D(ev, mass, data, q, "full", threads)
