"""Numerical verification of the identities satisfied by E and R.

* verify_kernel_identities: the nine closed-form identities of E (symmetry,
  translation, cone-edge values and derivatives, the b-derivative at b=0),
  checked by Richardson-extrapolated finite differences.
* riemann_condition_residuals: the two characteristic conditions and the
  normalization R(a,b;a,b) = 1 of the Riemann function.
* pde_residual_E: S E by the five-point (t, x) stencil, which is O(h^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import (CharCoords, CurvedMass, K0_array, K0_bracket_direct, KernelPoint,
                      evaluate_E, kernel_E, riemann_R)
from .numdiff import derivative

IDENTITIES = ("E0", "E1", "E2a", "E3a", "E4", "E5", "E6", "E7", "E8")


@dataclass(frozen=True)
class SampleSpec:
    """Random sampling of configurations: ``samples`` per identity."""

    samples: int = 50
    seed: int = 0
    h: float = 1e-5
    levels: int = 2
    threshold: float = 1e-6


@dataclass
class IdentityReport:
    """Largest residual |lhs - rhs| / max(1, |rhs|) seen for each identity."""

    M: float
    threshold: float
    samples: int
    residuals: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r <= self.threshold for r in self.residuals.values())

    def failures(self):
        return [k for k, r in self.residuals.items() if not r <= self.threshold]

    def to_dict(self):
        return {"M": self.M, "threshold": self.threshold, "samples": self.samples,
                "residuals": {k: float(v) for k, v in self.residuals.items()},
                "passed": self.passed}


def _residual(lhs, rhs):
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))))


def _E(d, t, b, M):
    return kernel_E(d, t, b, M)


def verify_kernel_identities(mass: CurvedMass, spec: SampleSpec = SampleSpec()) -> IdentityReport:
    """Check every identity of E at ``spec.samples`` random configurations."""
    M = mass.M
    rng = np.random.default_rng(spec.seed)
    n, h, lv = spec.samples, spec.h, spec.levels
    res = {}
    c16 = (1 + 4 * M * M) / 16

    # forward-cone samples with 0 < b < t, kept away from the cone edge
    t = rng.uniform(0.3, 3.0, n)
    b = t * rng.uniform(0.05, 0.9, n)
    w = np.exp(-b) - np.exp(-t)
    y = rng.uniform(-1.0, 1.0, n)
    x = y + w * rng.uniform(-0.95, 0.95, n)

    # E0: swapping the two points (the second is then in a backward cone)
    lhs = [evaluate_E(KernelPoint(xi, ti, yi, bi), mass).value for xi, ti, yi, bi in zip(x, t, y, b)]
    rhs = [evaluate_E(KernelPoint(yi, bi, xi, ti), mass).value for xi, ti, yi, bi in zip(x, t, y, b)]
    res["E0"] = _residual(lhs, rhs)

    # E1: translation to x0 = 0, and evenness in x
    shifted = [evaluate_E(KernelPoint(xi - yi, ti, 0.0, bi), mass).value for xi, ti, yi, bi in zip(x, t, y, b)]
    mirrored = [evaluate_E(KernelPoint(yi - xi, ti, 0.0, bi), mass).value for xi, ti, yi, bi in zip(x, t, y, b)]
    res["E1"] = max(_residual(lhs, shifted), _residual(mirrored, shifted))

    # E2a: value on the characteristic through the origin
    xs = rng.uniform(0.02, 2.0, n)
    s = np.exp(-t)
    bstar = -np.log(xs + s)
    res["E2a"] = _residual(_E(xs, t, bstar, M), 0.5 / (np.sqrt(s) * np.sqrt(xs + s)))

    # E3a, E4: derivatives along the cone edge d = e^-b - e^-t
    def edge(sign, weight):
        def g(bb):
            return weight(bb) * np.exp(-bb) * _E(sign * (np.exp(-bb) - np.exp(-t)), t, bb, M)
        return g

    d3, _ = derivative(edge(1, lambda bb: 1.0), b, h, "central", lv)
    res["E3a"] = _residual(d3, -0.25 * np.exp(0.5 * t) * np.exp(-0.5 * b))
    e4 = 0.25 * np.exp(0.5 * t) * np.exp(-0.5 * b) * (2 - b)
    d4p, _ = derivative(edge(1, lambda bb: bb), b, h, "central", lv)
    d4m, _ = derivative(edge(-1, lambda bb: bb), b, h, "central", lv)
    res["E4"] = max(_residual(d4p, e4), _residual(d4m, e4))

    # E5, E6: one-sided x-derivatives of E(x - y) at the two cone edges
    edge_slope = c16 * np.exp(0.5 * t) * np.exp(0.5 * b) * (np.exp(t) - np.exp(b))
    d5, _ = derivative(lambda dd: _E(dd, t, b, M), -w, h, "forward", lv)
    res["E5"] = _residual(d5, -edge_slope)
    d6, _ = derivative(lambda dd: _E(dd, t, b, M), w, h, "backward", lv)
    res["E6"] = _residual(d6, edge_slope)

    # E7: b-derivative at the characteristic b* = -ln(x + e^-t), from inside the cone
    d7, _ = derivative(lambda bb: _E(xs, t, bb, M), bstar, h, "backward", lv)
    ex = np.exp(t) * xs
    res["E7"] = _residual(d7, np.exp(t) * (4 + ex * (1 + 4 * M * M)) / (16 * np.sqrt(1 + ex)))

    # E8: b-derivative at b = 0 against the closed form (-K0), both arrangements
    p = -np.expm1(-t)
    z = p * rng.uniform(-0.95, 0.95, n)
    d8, _ = derivative(lambda bb: _E(z, t, bb, M), np.zeros(n), h, "central", lv)
    res["E8"] = max(_residual(d8, -K0_array(z, t, M)), _residual(d8, -K0_bracket_direct(z, t, M)))

    return IdentityReport(M, spec.threshold, n, res)


@dataclass(frozen=True)
class RiemannResiduals:
    """Residuals of the characteristic conditions at steps h and h/2."""

    cond_l: np.ndarray  # shape (samples, 2)
    cond_m: np.ndarray
    normalization: float

    @property
    def ratios_l(self):
        return self.cond_l[:, 0] / self.cond_l[:, 1]

    @property
    def ratios_m(self):
        return self.cond_m[:, 0] / self.cond_m[:, 1]


def _central(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def riemann_condition_residuals(mass: CurvedMass, samples: int = 20, h: float = 1e-2, seed: int = 0):
    """Residuals of R_l = R / (2(l - m)) on m = b and R_m = -R / (2(l - m)) on l = a.

    Each condition is measured with a plain central difference at steps h and
    h/2, so the residual is the O(h^2) truncation error and halving h should
    divide it by four.  Also returns max |R(a,b;a,b) - 1| over the samples.
    """
    rng = np.random.default_rng(seed)
    cond_l = np.empty((samples, 2))
    cond_m = np.empty((samples, 2))
    norm = 0.0
    for k in range(samples):
        x0 = rng.uniform(-1, 1)
        t0 = rng.uniform(-0.5, 1.5)
        c = CharCoords.from_point(KernelPoint(x0, t0, x0, t0))
        a, bb = c.a, c.b_
        width = a - bb
        l = a + rng.uniform(-0.5, 1.5) * width  # any l > b on m = b
        m = bb + rng.uniform(-1.5, 0.5) * width  # any m < a on l = a

        def R_l(ll):
            return riemann_R(CharCoords(ll, bb, a, bb), mass)

        def R_m(mm):
            return riemann_R(CharCoords(a, mm, a, bb), mass)

        for j, hh in enumerate((h, h / 2)):
            cond_l[k, j] = abs(_central(R_l, l, hh) - R_l(l) / (2 * (l - bb)))
            cond_m[k, j] = abs(_central(R_m, m, hh) + R_m(m) / (2 * (a - m)))
        norm = max(norm, abs(riemann_R(c, mass) - 1.0))
    return RiemannResiduals(cond_l, cond_m, norm)


def pde_residual_E(mass: CurvedMass, d, t, t0, h):
    """|E_tt - e^(-2t) E_xx + M^2 E| by central differences with step h."""
    M = mass.M

    def E(dd, tt):
        return kernel_E(dd, tt, t0, M)

    e0 = E(d, t)
    Ett = (E(d, t + h) - 2 * e0 + E(d, t - h)) / h**2
    Exx = (E(d + h, t) - 2 * e0 + E(d - h, t)) / h**2
    return np.abs(Ett - np.exp(-2 * np.asarray(t)) * Exx + M * M * e0)


def sample_cone_interior(n, seed=0, margin=0.25):
    """Random (d, t, t0) inside forward cones with |d| <= (1 - margin) of the half-width."""
    rng = np.random.default_rng(seed)
    t0 = rng.uniform(-0.5, 1.0, n)
    t = t0 + rng.uniform(0.3, 2.0, n)
    w = np.exp(-t0) - np.exp(-t)
    d = w * rng.uniform(-1, 1, n) * (1 - margin)
    return d, t, t0


def K0_point_check(z, t, mass: CurvedMass, h=1e-5):
    """Relative gap between K0 and the central difference -dE/db at b = 0."""
    fd = -(kernel_E(z, t, h, mass.M) - kernel_E(z, t, -h, mass.M)) / (2 * h)
    k0 = float(K0_array(np.array([z]), np.array([t]), mass.M)[0])
    return abs(k0 - fd) / max(1.0, abs(k0)), k0, float(fd)

