"""Kernels of the Klein-Gordon operator S = d_t^2 - e^(-2t) d_x^2 + M^2.

E(x,t;x0,t0) = (4 e^(-t0-t))^(iM) P^(-1/2-iM) F(g, g; 1; Q/P),  g = 1/2 + iM,

with P = (e^-t + e^-t0)^2 - (x-x0)^2 and Q = (e^-t0 - e^-t)^2 - (x-x0)^2.
Inside the light cones 0 <= Q/P < 1 and E is real; the imaginary part of
the complex formula is kept only as a diagnostic.

K1(z,t) = E(z,t;0,0) and K0(z,t) = -d/db E(z,t;0,b) at b=0 are the
Cauchy kernels of the one-dimensional problem.  K0 is evaluated in a
rearranged form without the 0/0 at the cone edge z = 1 - e^-t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OutsideCone, RealnessViolation, ValidationError
from .hypergeom import hyp2f1_array, hyp2f1_shifted_array

# hypergeometric arguments above this are treated as outside the cone
ZETA_MAX = 1.0 - 1e-14
# |Im E| above REALNESS_TOL * (1 + |Re E|) is reported as a failure
REALNESS_TOL = 1e-6
KERNEL_TOL = 1e-14
_LOG4 = math.log(4.0)


@dataclass(frozen=True)
class CurvedMass:
    """The curved mass M >= 0 (Hubble constant normalized to one)."""

    M: float

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M >= 0):
            raise ValidationError(f"curved mass must be finite and >= 0, got {self.M}")

    @property
    def gamma(self) -> complex:
        return complex(0.5, self.M)


@dataclass(frozen=True)
class KernelPoint:
    x: float
    t: float
    x0: float
    t0: float

    @property
    def cone_radius(self) -> float:
        """e^-t0 - e^-t: positive for the forward cone, negative for the backward one."""
        return math.exp(-self.t0) - math.exp(-self.t)

    @property
    def in_forward_cone(self) -> bool:
        return abs(self.x - self.x0) <= self.cone_radius

    @property
    def in_backward_cone(self) -> bool:
        return abs(self.x - self.x0) <= -self.cone_radius


@dataclass(frozen=True)
class CharCoords:
    """Characteristic coordinates l = x + e^-t, m = x - e^-t of two points."""

    l: float
    m: float
    a: float
    b_: float

    def __post_init__(self):
        if not self.l > self.m:
            raise DomainError("characteristic coordinates need l > m")

    @classmethod
    def from_point(cls, p: KernelPoint) -> "CharCoords":
        s, s0 = math.exp(-p.t), math.exp(-p.t0)
        return cls(p.x + s, p.x - s, p.x0 + s0, p.x0 - s0)


@dataclass(frozen=True)
class KernelValue:
    value: float
    imag_residual: float
    hypergeom_arg: float


def _cone_geometry(d, t, t0):
    """P, Q and zeta = Q/P, computed in factored form to avoid cancellation."""
    d = np.abs(np.asarray(d, dtype=float))
    t = np.asarray(t, dtype=float)
    t0 = np.asarray(t0, dtype=float)
    s = np.exp(-t)
    s0 = np.exp(-t0)
    w = np.abs(s0 * np.expm1(t0 - t))  # |e^-t0 - e^-t|
    P = (s + s0 + d) * (s + s0 - d)
    Q = (w - d) * (w + d)
    # a point on the cone edge may land a rounding error outside
    Q = np.where((Q < 0) & (Q > -1e-14 * np.abs(P)), 0.0, Q)
    with np.errstate(divide="ignore", invalid="ignore"):
        zeta = Q / P
    return s, s0, P, zeta


def _require_inside(P, zeta):
    bad = ~((P > 0) & (zeta >= 0) & (zeta <= ZETA_MAX))
    if np.any(bad):
        raise OutsideCone(f"{int(bad.sum())} point(s) outside the light cones")


def kernel_E_complex(d, t, t0, M, tol=KERNEL_TOL):
    """Complex value of the E formula at separation d = x - x0 (broadcasting).

    Returns (value, zeta).  Raises OutsideCone for any point with
    hypergeometric argument outside [0, 1 - 1e-14] or P <= 0.
    """
    s, s0, P, zeta = _cone_geometry(d, t, t0)
    _require_inside(P, zeta)
    g = complex(0.5, M)
    F, _, _ = hyp2f1_array(g, g, 1.0, zeta, tol)
    log_pref = 1j * M * (_LOG4 - np.asarray(t, float) - np.asarray(t0, float)) - g * np.log(P)
    return np.exp(log_pref) * F, zeta


def _real_part(value, what):
    re, im = value.real, value.imag
    bad = np.abs(im) > REALNESS_TOL * (1 + np.abs(re))
    if np.any(bad):
        worst = float(np.max(np.abs(im) / (1 + np.abs(re))))
        raise RealnessViolation(f"{what} has a large imaginary part (relative {worst:.3g})")
    return re


def kernel_E(d, t, t0, M, tol=KERNEL_TOL):
    """Real kernel E(d, t; 0, t0) on arrays (d is the spatial separation)."""
    value, _ = kernel_E_complex(d, t, t0, M, tol)
    return _real_part(value, "E")


def evaluate_E(p: KernelPoint, mass: CurvedMass, tol=KERNEL_TOL) -> KernelValue:
    """E(x,t;x0,t0) at a single point strictly inside one of the light cones.

    >>> round(evaluate_E(KernelPoint(0.0, 1.0, 0.0, 1.0), CurvedMass(1.0)).value, 6)
    1.359141
    """
    value, zeta = kernel_E_complex(p.x - p.x0, p.t, p.t0, mass.M, tol)
    value = complex(value)
    _real_part(np.array([value]), "E")
    return KernelValue(value.real, value.imag, float(zeta))


def _kernel_domain(z, t):
    z = np.abs(np.asarray(z, dtype=float))
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("the Cauchy kernels need t >= 0")
    if np.any(z > -np.expm1(-t)):
        raise OutsideCone("kernel requested beyond the cone edge z = 1 - e^-t")
    return z, t


def K1_array(z, t, M, tol=KERNEL_TOL):
    """K1(z, t) = E(z, t; 0, 0) on arrays."""
    z, t = _kernel_domain(z, t)
    return kernel_E(z, t, 0.0, M, tol)


def k0_ratio(s, z, M, tol=KERNEL_TOL, phi=None):
    """The bracket of -dE/db at b=0 divided by delta = (1-s)^2 - z^2.

    Here s plays the role of e^-t.  Writing the bracket as A F1 + B F2 with
    A + B = -delta/2 identically, and F_i = 1 + zeta G_i, gives

        bracket / delta = -1/2 + (A G1 + B G2) / D,   D = (1+s)^2 - z^2,

    which has no cancellation as delta -> 0.  ``phi`` may carry an accurate
    value of 1 - s.  Returns (ratio, D, zeta).
    """
    s = np.asarray(s, dtype=float)
    z = np.asarray(z, dtype=float)
    phi = 1.0 - s if phi is None else np.asarray(phi, dtype=float)
    delta = (phi - z) * (phi + z)
    delta = np.where((delta < 0) & (delta > -1e-14), 0.0, delta)
    D = delta + 4.0 * s
    zeta = delta / D
    g = complex(0.5, M)
    G1, _ = hyp2f1_shifted_array(g, g, 1.0, zeta, tol)
    G2, _ = hyp2f1_shifted_array(g - 1.0, g, 1.0, zeta, tol)
    A = (s - 1.0) - 1j * M * (s * s - 1.0 - z * z)
    B = (1.0 - s * s + z * z) * (0.5 - 1j * M)
    return -0.5 + (A * G1 + B * G2) / D, D, zeta


def K0_complex_array(z, t, M, tol=KERNEL_TOL):
    z, t = _kernel_domain(z, t)
    s = np.exp(-t)
    ratio, D, _ = k0_ratio(s, z, M, tol, phi=-np.expm1(-t))
    pref = np.exp(1j * M * (_LOG4 - t) - (0.5 + 1j * M) * np.log(D))
    return pref * ratio


def K0_array(z, t, M, tol=KERNEL_TOL):
    """K0(z, t) = -d/db E(z, t; 0, b) at b=0 on arrays, including the cone edge."""
    return _real_part(K0_complex_array(z, t, M, tol), "K0")


def K0_bracket_direct(z, t, M, tol=KERNEL_TOL):
    """K0 from the unrearranged closed form (loses accuracy near the cone edge).

    Kept as an independent cross-check of :func:`K0_array`.
    """
    z, t = _kernel_domain(z, t)
    s = np.exp(-t)
    delta = (1 - s) ** 2 - z**2
    D = (1 + s) ** 2 - z**2
    zeta = delta / D
    g = complex(0.5, M)
    F1, _, _ = hyp2f1_array(g, g, 1.0, zeta, tol)
    F2, _, _ = hyp2f1_array(g - 1, g, 1.0, zeta, tol)
    bracket = (s - 1 - 1j * M * (s * s - 1 - z * z)) * F1 + (1 - s * s + z * z) * (0.5 - 1j * M) * F2
    value = np.exp(1j * M * (_LOG4 - t)) * D ** (-1j * M) * bracket / (delta * np.sqrt(D))
    return _real_part(value, "K0")


def K0_edge_value(t, M):
    """K0 at z = 1 - e^-t: (e^(t/2)/2) (-1/2 - (1 - e^-t)(1 + 4M^2) e^t / 8)."""
    t = np.asarray(t, dtype=float)
    return 0.5 * np.exp(0.5 * t) * (-0.5 - np.expm1(t) * (1 + 4 * M * M) / 8)


def _as_kernel_value(value, zeta):
    value = complex(value)
    return KernelValue(value.real, value.imag, float(zeta))


def evaluate_K1(z, t, mass: CurvedMass, tol=KERNEL_TOL) -> KernelValue:
    if t < 0:
        raise DomainError("t must be >= 0")
    if abs(z) > -math.expm1(-t):
        raise OutsideCone("z beyond the cone edge 1 - e^-t")
    return evaluate_E(KernelPoint(float(z), float(t), 0.0, 0.0), mass, tol)


def evaluate_K0(z, t, mass: CurvedMass, tol=KERNEL_TOL) -> KernelValue:
    value = K0_complex_array(np.array([float(z)]), np.array([float(t)]), mass.M, tol)[0]
    _real_part(np.array([value]), "K0")
    s = math.exp(-t)
    phi = -math.expm1(-t)
    zeta = (phi - abs(z)) * (phi + abs(z)) / ((1 + s) ** 2 - z * z)
    return _as_kernel_value(value, max(zeta, 0.0))


def riemann_R(c: CharCoords, mass: CurvedMass, tol=KERNEL_TOL) -> complex:
    """Riemann function R(l,m;a,b) = (l - m) E in characteristic coordinates."""
    l, m, a, b = c.l, c.m, c.a, c.b_
    den = (l - b) * (m - a)
    if den == 0 or (a - b) <= 0 or (l - b) <= 0 or (a - m) <= 0:
        raise DomainError("Riemann function needs a > b, l > b and a > m")
    z = (l - a) * (m - b) / den
    if z == 0.0:
        z = 0.0  # normalize -0.0
    if not 0.0 <= z < 1.0:
        raise DomainError(f"Riemann function argument {z:g} outside [0, 1)")
    g = mass.gamma
    F, _, _ = hyp2f1_array(g, g, 1.0, np.array([z]), tol)
    M = mass.M
    log_val = (1j * M * math.log(a - b) + (1 + 1j * M) * math.log(l - m)
               - g * math.log(l - b) - g * math.log(a - m))
    return complex(np.exp(log_val) * F[0])
