"""Gauss hypergeometric function 2F1(a, b; c; z) for real z in [0, 1).

Complex a, b are allowed (the kernels need a = b = 1/2 + iM).  Four
regimes are used:

* z <= 0.5: the power series in z.
* z > 0.5 and c - a - b away from the integers: the transformation to
  series in 1 - z (both of which then converge at least like 2^-k).
* z > 0.5 and c - a - b exactly an integer (e.g. M=0): the logarithmic
  series in 1 - z.
* z > 0.5 and c - a - b near but not at an integer: the power series in z
  with a double-double (TwoSum) accumulator up to z = 0.9, and beyond that
  the hypergeometric ODE integrated in s = -ln(1 - z), where the solution
  grows at most linearly.

The array routines broadcast over z only; a, b, c are scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import digamma

from .errors import DomainError, IllConditioned, NonConvergent

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 20000
DIRECT_SERIES_LIMIT = 0.5
# distance of c - a - b from the integers below which the transformation
# to 1 - z is treated as ill-conditioned
NEAR_INTEGER_GAP = 0.05
# above this z the near-integer case continues the series value by the ODE
ODE_START = 0.9
ODE_RTOL = 1e-13

_EPS = np.finfo(float).eps

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class HypergeomParams:
    a: complex
    b: complex
    c: complex
    z: float

    def __post_init__(self):
        _check_c(self.c)
        _check_z(np.asarray(self.z, dtype=float))


@dataclass(frozen=True)
class HypergeomValue:
    value: complex
    abs_error_estimate: float
    terms_used: int


def _check_c(c):
    c = complex(c)
    if c.imag == 0.0 and c.real <= 0 and c.real == round(c.real):
        raise DomainError(f"c = {c.real:g} is a non-positive integer")


def _check_z(z):
    if z.size and not (np.all(np.isfinite(z)) and z.min() >= 0.0 and z.max() < 1.0):
        raise DomainError("hypergeometric argument must lie in [0, 1)")


def gamma_complex(z):
    """Gamma function for complex arguments (Lanczos, g=7, 9 terms).

    Uses the reflection formula for Re z < 1/2.  Relative accuracy is
    about 1e-14 away from the poles.
    """
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    left = z.real < 0.5
    if np.any(left):
        zl = z[left]
        out[left] = np.pi / (np.sin(np.pi * zl) * _gamma_right(1.0 - zl))
    if np.any(~left):
        out[~left] = _gamma_right(z[~left])
    return out[()] if out.ndim == 0 else out


def _gamma_right(z):
    z = z - 1.0
    x = np.full_like(z, _LANCZOS_COEF[0])
    for i, coef in enumerate(_LANCZOS_COEF[1:], start=1):
        x = x + coef / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * np.exp(-t) * x


def abs_gamma_half_plus_iM_sq(M):
    """|Gamma(1/2 + iM)|^2 = pi / cosh(pi M) (reflection formula)."""
    return np.pi / np.cosh(np.pi * np.asarray(M, dtype=float))


def _series(a, b, c, z, tol, max_terms, skip=0):
    """Sum_{k>=skip} (a)_k (b)_k / ((c)_k k!) z^(k-skip) with a TwoSum accumulator.

    Returns (value, abs_error_estimate, terms_used) as arrays over z.
    With skip=1 this is (F - 1) / z, free of cancellation near z = 0.
    """
    z = np.asarray(z, dtype=float)
    n = z.size
    a, b, c = complex(a), complex(b), complex(c)
    if n == 0:
        return np.zeros(0, complex), np.zeros(0), np.zeros(0, int)

    # leading term (a)_skip (b)_skip / ((c)_skip skip!)
    lead = 1.0 + 0.0j
    for k in range(skip):
        lead *= (a + k) * (b + k) / ((c + k) * (k + 1))
    term = np.full(n, lead, dtype=complex)
    hi = np.zeros(n, dtype=complex)
    lo = np.zeros(n, dtype=complex)
    abs_sum = np.zeros(n)
    err = np.full(n, np.inf)
    used = np.zeros(n, dtype=int)
    active = np.ones(n, dtype=bool)

    k = skip
    while True:
        # TwoSum, componentwise on real and imaginary parts
        s = hi + term
        bb = s - hi
        lo = lo + ((hi - (s - bb)) + (term - bb))
        hi = s
        abs_sum += np.abs(term)
        last = np.abs(term)
        coef = (a + k) * (b + k) / ((c + k) * (k + 1))
        term = term * (coef * z)
        k += 1

        total = np.abs(hi + lo)
        rho = z * max(abs(coef), 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.where(rho < 1.0, np.abs(term) / (1.0 - rho), np.inf)
        done = active & (tail <= tol * np.maximum(1.0, total))
        if np.any(done):
            err[done] = np.maximum(2.0 * last[done], tail[done]) + 4 * _EPS * abs_sum[done]
            used[done] = k - skip
            active &= ~done
        if not np.any(active):
            break
        if k - skip >= max_terms:
            raise NonConvergent(
                f"2F1 series did not reach tol={tol:g} within {max_terms} terms "
                f"(a={a}, b={b}, c={c}, max z={z[active].max():.6g})"
            )
    return hi + lo, err, used


def _near_integer(x):
    return abs(x - round(x.real)) < NEAR_INTEGER_GAP if x.imag == 0 else (
        abs(x.imag) < NEAR_INTEGER_GAP and abs(x.real - round(x.real)) < NEAR_INTEGER_GAP
    )


def _rgamma(x):
    """1 / Gamma(x), exactly zero at the poles."""
    return 0.0 if _is_pole(complex(x)) else 1.0 / complex(gamma_complex(x))


def _connection(a, b, c, z, tol, max_terms):
    """F(a,b;c;z) from two series in 1 - z (valid when c-a-b is not an integer)."""
    s = c - a - b
    gc, gs, gms = gamma_complex(np.array([c, s, -s]))
    A1 = gc * gs * _rgamma(c - a) * _rgamma(c - b)
    A2 = gc * gms * _rgamma(a) * _rgamma(b)
    w = 1.0 - z
    f1, e1, n1 = _series(a, b, 1.0 - s, w, tol, max_terms)
    f2, e2, n2 = _series(c - a, c - b, 1.0 + s, w, tol, max_terms)
    wpow = np.exp(s * np.log(w))
    t1 = A1 * f1
    t2 = A2 * wpow * f2
    value = t1 + t2
    # 1e-13 covers the Lanczos gamma error in the coefficients
    err = abs(A1) * e1 + np.abs(A2 * wpow) * e2 + 1e-13 * (np.abs(t1) + np.abs(t2))
    return value, err, n1 + n2


def _is_integer(x):
    return x.imag == 0.0 and x.real == round(x.real)


def _is_pole(x):
    return _is_integer(x) and x.real <= 0


def _log_connection(a, b, c, z, tol, max_terms):
    """F(a,b;c;z) for c = a + b + m with integer m >= 0, as series in 1 - z.

    F = G(m) G(c) / (G(a+m) G(b+m)) sum_{n<m} (a)_n (b)_n / (n! (1-m)_n) w^n
        - G(c) / (G(a) G(b)) (-w)^m sum_n T_n [ln w - psi(n+1) - psi(n+m+1)
                                               + psi(a+n+m) + psi(b+n+m)],
    with w = 1 - z and T_n = (a+m)_n (b+m)_n / (n! (n+m)!) w^n.
    """
    m = int(round((c - a - b).real))
    w = 1.0 - z
    n_pts = z.size
    logw = np.log(w)
    gc = gamma_complex(c)
    finite = np.zeros(n_pts, dtype=complex)
    if m > 0:
        pref = math.gamma(m) * gc / (gamma_complex(a + m) * gamma_complex(b + m))
        term = np.ones(n_pts, dtype=complex)
        for n in range(m):
            finite += term
            if n + 1 < m:
                term = term * ((a + n) * (b + n) / ((n + 1) * (1 - m + n))) * w
        finite *= pref
    pref_log = gc / (gamma_complex(a) * gamma_complex(b)) * (-1) ** m

    psi1 = complex(digamma(1.0))
    psi_m1 = complex(digamma(m + 1.0))
    psi_a = complex(digamma(a + m))
    psi_b = complex(digamma(b + m))
    term = np.full(n_pts, 1.0 / math.factorial(m), dtype=complex)
    total = np.zeros(n_pts, dtype=complex)
    abs_sum = np.zeros(n_pts)
    err = np.full(n_pts, np.inf)
    used = np.zeros(n_pts, dtype=int)
    active = np.ones(n_pts, dtype=bool)
    wm = w**m
    n = 0
    while True:
        piece = term * (logw - psi1 - psi_m1 + psi_a + psi_b)
        total += piece
        abs_sum += np.abs(piece)
        last = np.abs(piece)
        coef = (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1))
        psi1 += 1.0 / (n + 1)
        psi_m1 += 1.0 / (n + m + 1)
        psi_a += 1.0 / (a + m + n)
        psi_b += 1.0 / (b + m + n)
        term = term * coef * w
        n += 1
        rho = w * max(abs(coef), 1.0)
        bracket = np.abs(logw) + abs(psi1) + abs(psi_m1) + abs(psi_a) + abs(psi_b)
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.where(rho < 1.0, np.abs(term) * (bracket + 1.0) / (1.0 - rho), np.inf)
        scale = np.abs(pref_log) * wm
        value_est = np.abs(finite) + scale * np.abs(total)
        done = active & (scale * tail <= tol * np.maximum(1.0, value_est))
        if np.any(done):
            err[done] = scale[done] * (np.maximum(2.0 * last[done], tail[done]) + 4 * _EPS * abs_sum[done])
            used[done] = n + m
            active &= ~done
        if not np.any(active):
            break
        if n >= max_terms:
            raise NonConvergent(f"logarithmic 2F1 series did not converge within {max_terms} terms")
    value = finite - pref_log * wm * total
    # gamma and digamma values carry about 1e-13 relative error
    err = err + 1e-13 * (np.abs(finite) + np.abs(pref_log) * wm * np.abs(total))
    return value, err, used


def _ode_continuation(a, b, c, z, tol, max_terms):
    """F at z > ODE_START from its series value and slope at ODE_START.

    With z = 1 - e^-s the equation z(1-z)F'' + (c - (a+b+1)z)F' - abF = 0
    becomes F_ss = -(1 + (c - (a+b+1)z)/z) F_s + ab (1-z)/z F, whose
    solutions behave like e^(-(c-a-b)s) and constants for large s.  The
    error estimate compares runs at ODE_RTOL and 100 ODE_RTOL.
    """
    z0 = np.array([ODE_START])
    f0, e0, n0 = _series(a, b, c, z0, tol, max_terms)
    d0, ed, _ = _series(a + 1, b + 1, c + 1, z0, tol, max_terms)
    ab = a * b
    slope0 = ab / c * d0[0] * (1.0 - ODE_START)  # dF/ds = (1 - z) dF/dz
    order = np.argsort(z)
    s_eval = -np.log1p(-z[order])
    s0 = -math.log1p(-ODE_START)

    def rhs(s, y):
        zz = -math.expm1(-s)
        return [y[1], -(1.0 + (c - (a + b + 1) * zz) / zz) * y[1] + ab * (1.0 - zz) / zz * y[0]]

    def run(rtol):
        sol = solve_ivp(rhs, (s0, s_eval[-1]), [complex(f0[0]), complex(slope0)], method="DOP853",
                        t_eval=s_eval, rtol=rtol, atol=tol * 1e-3)
        if not sol.success:
            raise NonConvergent(f"2F1 continuation failed: {sol.message}")
        return sol.y[0]

    fine = run(ODE_RTOL)
    coarse = run(100 * ODE_RTOL)
    value = np.empty(z.size, dtype=complex)
    err = np.empty(z.size)
    value[order] = fine
    start_err = e0[0] + abs(ab / c) * ed[0]
    err[order] = np.abs(fine - coarse) + start_err * (1.0 + s_eval)
    return value, err, np.full(z.size, n0[0])


def _near_integer_high(a, b, c, z, tol, max_terms):
    value = np.empty(z.size, dtype=complex)
    err = np.empty(z.size)
    used = np.empty(z.size, dtype=int)
    low = z <= ODE_START
    if np.any(low):
        value[low], err[low], used[low] = _series(a, b, c, z[low], tol, max_terms)
    if np.any(~low):
        value[~low], err[~low], used[~low] = _ode_continuation(a, b, c, z[~low], tol, max_terms)
    return value, err, used


def _high_z(a, b, c, z, tol, max_terms):
    """Dispatch for z > 0.5 according to c - a - b."""
    s = c - a - b
    if _is_pole(a) or _is_pole(b):
        return _series(a, b, c, z, tol, max_terms)  # a polynomial
    if _is_pole(c - a) or _is_pole(c - b):
        # Euler: (1-z)^(c-a-b) times a polynomial
        v, e, n = _series(c - a, c - b, c, z, tol, max_terms)
        f = np.exp(s * np.log1p(-z))
        return f * v, np.abs(f) * e, n
    if _is_integer(s):
        if s.real >= 0:
            return _log_connection(a, b, c, z, tol, max_terms)
        # Euler: F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z)
        if _is_pole(c - a) or _is_pole(c - b):
            return _series(a, b, c, z, tol, max_terms)
        v, e, n = _log_connection(c - a, c - b, c, z, tol, max_terms)
        f = (1.0 - z) ** s.real
        return f * v, f * e, n
    if _near_integer(s):
        return _near_integer_high(a, b, c, z, tol, max_terms)
    return _connection(a, b, c, z, tol, max_terms)


def hyp2f1_array(a, b, c, z, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Vectorized 2F1 over an array of z in [0, 1).

    Returns (value, abs_error_estimate, terms_used), each shaped like z.
    """
    _check_c(c)
    z = np.asarray(z, dtype=float)
    shape = z.shape
    z = z.ravel()
    _check_z(z)
    value = np.empty(z.size, dtype=complex)
    err = np.empty(z.size)
    used = np.empty(z.size, dtype=int)

    low = z <= DIRECT_SERIES_LIMIT
    if np.any(low):
        value[low], err[low], used[low] = _series(a, b, c, z[low], tol, max_terms)
    high = ~low
    if np.any(high):
        value[high], err[high], used[high] = _high_z(
            complex(a), complex(b), complex(c), z[high], tol, max_terms)
    return value.reshape(shape), err.reshape(shape), used.reshape(shape)


def hyp2f1_shifted_array(a, b, c, z, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """(F(a,b;c;z) - 1) / z over an array of z, accurate as z -> 0.

    At z = 0 this returns the limit a*b/c.
    """
    _check_c(c)
    z = np.asarray(z, dtype=float)
    shape = z.shape
    z = z.ravel()
    _check_z(z)
    value = np.empty(z.size, dtype=complex)
    err = np.empty(z.size)
    low = z <= DIRECT_SERIES_LIMIT
    if np.any(low):
        value[low], err[low], _ = _series(a, b, c, z[low], tol, max_terms, skip=1)
    high = ~low
    if np.any(high):
        f, e, _ = hyp2f1_array(a, b, c, z[high], tol, max_terms)
        value[high] = (f - 1.0) / z[high]
        err[high] = e / z[high]
    return value.reshape(shape), err.reshape(shape)


def gauss_2f1(a, b, c, z, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Scalar 2F1(a, b; c; z) with an error estimate.

    >>> round(gauss_2f1(0.5, 0.5, 1.0, 0.0).value.real, 12)
    1.0
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    p = HypergeomParams(complex(a), complex(b), complex(c), float(z))
    v, e, n = hyp2f1_array(p.a, p.b, p.c, np.array([p.z]), tol, max_terms)
    return HypergeomValue(complex(v[0]), float(e[0]), int(n[0]))


def gauss_2f1_dz(a, b, c, z, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z)."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    p = HypergeomParams(complex(a), complex(b), complex(c), float(z))
    scale = p.a * p.b / p.c
    r = gauss_2f1(p.a + 1, p.b + 1, p.c + 1, p.z, tol, max_terms)
    return HypergeomValue(scale * r.value, abs(scale) * r.abs_error_estimate, r.terms_used)


def gauss_2f1_connection(a, b, c, z, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """2F1 at z in (0, 1) via the transformation to series in 1 - z.

    Raises IllConditioned when c - a - b lies within NEAR_INTEGER_GAP of an
    integer; the caller should then use :func:`gauss_2f1`.
    """
    a, b, c = complex(a), complex(b), complex(c)
    _check_c(c)
    if not 0.0 < z < 1.0:
        raise DomainError("connection formula needs z in (0, 1)")
    if _near_integer(c - a - b):
        raise IllConditioned(f"c - a - b = {c - a - b} is too close to an integer")
    v, e, n = _connection(a, b, c, np.array([float(z)]), tol, max_terms)
    return HypergeomValue(complex(v[0]), float(e[0]), int(n[0]))
