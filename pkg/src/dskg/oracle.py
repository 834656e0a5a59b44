"""Reference solvers that share no code with the closed-form kernels.

* spectral_solve_1d: periodic Fourier discretization; every mode obeys
  u_k'' + (c(t)^2 xi_k^2 + M^2) u_k = f_k(t) with c(t) = e^-t, integrated
  with an adaptive explicit Runge-Kutta method (DOP853).
* fd_solve_1d: second-order leapfrog finite differences.
* radial_reduce_3d: radial n=3 problems through w = r u, which satisfies
  the 1D equation with an odd extension in r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .cauchy import CauchyData1D
from .errors import CFLViolation, StiffnessFailure, ValidationError
from .kernels import CurvedMass


@dataclass(frozen=True)
class SpectralConfig:
    """Periodic box [-L, L) with N points; DOP853 tolerances rtol/atol.

    ``atol`` is relative to the largest initial Fourier amplitude.  With
    ``flat=True`` the propagation speed is 1 instead of e^-t.
    """

    L: float = 8.0
    N: int = 8192
    rtol: float = 1e-11
    atol: float = 1e-13
    method: str = "DOP853"
    flat: bool = False

    def __post_init__(self):
        if self.N < 8 or self.N & (self.N - 1):
            raise ValidationError("N must be a power of two >= 8")
        if self.L <= 0 or self.rtol <= 0 or self.atol <= 0:
            raise ValidationError("L, rtol and atol must be positive")

    @property
    def x(self):
        return -self.L + 2 * self.L * np.arange(self.N) / self.N

    @property
    def xi(self):
        return np.pi * np.arange(self.N // 2 + 1) / self.L


@dataclass(frozen=True)
class FDConfig:
    """Leapfrog grid on [-L, L] with spacing dx; dt = cfl * dx unless given."""

    dx: float = 1e-2
    cfl: float = 0.5
    L: float = 6.0
    dt: float | None = None

    MAX_CFL = 0.9

    def __post_init__(self):
        if self.dx <= 0 or self.L <= 0:
            raise ValidationError("dx and L must be positive")
        if self.cfl > self.MAX_CFL:
            raise CFLViolation(f"CFL factor {self.cfl} exceeds {self.MAX_CFL}")
        if self.dt is not None and self.dt > self.MAX_CFL * self.dx:
            raise CFLViolation(f"dt={self.dt:g} violates dt <= {self.MAX_CFL} dx (speed <= 1)")


@dataclass
class GridSolution1D:
    """Solution samples u[i, j] = u(x[j], t[i]).

    Spectral solutions also keep their Fourier coefficients, so they can be
    evaluated at any x (``at``) without interpolation.
    """

    x: np.ndarray
    t: np.ndarray
    u: np.ndarray
    ut: np.ndarray | None = None
    coef: np.ndarray | None = None
    coef_t: np.ndarray | None = None
    L: float | None = None

    def at(self, x, i):
        """u(x, t[i]) for arbitrary x (spectral solutions only)."""
        if self.coef is None:
            raise ValidationError("only spectral solutions can be evaluated off the grid")
        return fourier_eval(self.coef[i], np.asarray(x, dtype=float), self.L, self.x.size)

    def dx_at(self, x, i):
        """d/dx u(x, t[i]) from the Fourier series."""
        return fourier_eval(self.coef[i], np.asarray(x, dtype=float), self.L, self.x.size, deriv=1)

    def rows(self):
        """(x, t, u) triples, time-major, for CSV output."""
        for i, ti in enumerate(self.t):
            for xj, uj in zip(self.x, self.u[i]):
                yield (float(xj), float(ti), float(uj))


def fourier_eval(coef, x, L, N, deriv=0):
    """Evaluate the real trigonometric interpolant with rfft coefficients at x."""
    k = np.arange(coef.size)
    xi = np.pi * k / L
    c = coef * (1j * xi) ** deriv
    weight = np.full(coef.size, 2.0)
    weight[0] = 1.0
    if N % 2 == 0:
        weight[-1] = 1.0
    phase = np.exp(1j * np.outer(np.ravel(x) + L, xi))
    out = (phase @ (weight * c)).real / N
    return out.reshape(np.shape(x))


def _speed(t, flat):
    return 1.0 if flat else math.exp(-t)


def spectral_solve_1d(data: CauchyData1D, mass: CurvedMass, cfg: SpectralConfig, times):
    """Fourier-mode ODE solution of the 1D problem at the requested times."""
    times = np.asarray(sorted(float(t) for t in times))
    if times.size == 0 or times[0] < 0:
        raise ValidationError("need non-negative output times")
    margin = data.support_radius + (times[-1] if cfg.flat else -math.expm1(-times[-1]))
    if margin >= cfg.L:
        raise ValidationError(f"box half-length {cfg.L} too small for support plus horizon {margin:.3g}")
    x = cfg.x
    xi = cfg.xi
    nm = xi.size
    u0 = np.fft.rfft(data.phi0(x)) if data.phi0 is not None else np.zeros(nm, complex)
    v0 = np.fft.rfft(data.phi1(x)) if data.phi1 is not None else np.zeros(nm, complex)
    M2 = mass.M**2
    f = data.f
    lo, hi = data.source_times

    def rhs(t, y):
        u = y[: 2 * nm].view(complex)
        v = y[2 * nm:].view(complex)
        acc = -((_speed(t, cfg.flat) * xi) ** 2 + M2) * u
        if f is not None and lo <= t <= hi:
            acc = acc + np.fft.rfft(f(x, np.full(x.shape, t)))
        return np.concatenate([v.view(float), acc.view(float)])

    y0 = np.concatenate([u0.view(float), v0.view(float)])
    scale = max(np.abs(u0).max(initial=0.0), np.abs(v0).max(initial=0.0), 1.0)
    if f is not None:
        tt = np.linspace(lo, min(hi, times[-1]), 11)
        scale = max(scale, max(np.abs(np.fft.rfft(f(x, np.full(x.shape, ti)))).max() for ti in tt))
    coef = np.empty((times.size, nm), complex)
    coef_t = np.empty((times.size, nm), complex)
    if times[-1] == 0:
        sol_y = np.repeat(y0[:, None], times.size, axis=1)
    else:
        sol = solve_ivp(rhs, (0.0, times[-1]), y0, method=cfg.method, t_eval=times,
                        rtol=cfg.rtol, atol=cfg.atol * scale)
        if not sol.success:
            raise StiffnessFailure(f"mode integration failed: {sol.message}")
        sol_y = sol.y
    for i in range(times.size):
        coef[i] = sol_y[: 2 * nm, i].copy().view(complex)
        coef_t[i] = sol_y[2 * nm:, i].copy().view(complex)
    u = np.fft.irfft(coef, n=cfg.N, axis=1)
    ut = np.fft.irfft(coef_t, n=cfg.N, axis=1)
    return GridSolution1D(x, times, u, ut, coef, coef_t, cfg.L)


def energy(sol: GridSolution1D, mass: CurvedMass, flat=False):
    """int (u_t^2 + c(t)^2 u_x^2 + M^2 u^2) dx at each stored time (spectral solutions)."""
    N = sol.x.size
    dxv = 2 * sol.L / N
    out = []
    for i, t in enumerate(sol.t):
        ux = np.fft.irfft(sol.coef[i] * 1j * np.pi * np.arange(sol.coef.shape[1]) / sol.L, n=N)
        dens = sol.ut[i] ** 2 + _speed(t, flat) ** 2 * ux**2 + mass.M**2 * sol.u[i] ** 2
        out.append(dens.sum() * dxv)
    return np.array(out)


def fd_solve_1d(data: CauchyData1D, mass: CurvedMass, cfg: FDConfig, times):
    """Leapfrog solution (periodic ends) at the requested times.

    The step is reduced so that every output time is hit exactly; the first
    step uses the Taylor expansion u(dt) = u0 + dt u1 + dt^2/2 u_tt(0).
    """
    times = np.asarray(sorted(float(t) for t in times))
    if times.size == 0 or times[0] < 0:
        raise ValidationError("need non-negative output times")
    nx = int(round(2 * cfg.L / cfg.dx))
    dx = 2 * cfg.L / nx
    x = -cfg.L + dx * np.arange(nx)
    dt_max = cfg.dt if cfg.dt is not None else cfg.cfl * dx
    if dt_max > FDConfig.MAX_CFL * dx:
        raise CFLViolation("time step violates the CFL bound")
    T = times[-1]
    nsteps = max(1, math.ceil(T / dt_max - 1e-9)) if T > 0 else 0
    dt = T / nsteps if nsteps else dt_max
    out_steps = np.round(times / dt).astype(int) if nsteps else np.zeros(times.size, int)
    if nsteps and np.any(np.abs(out_steps * dt - times) > 1e-9 * max(1.0, T)):
        # refine until every output time lies on the step grid
        base = np.diff(np.concatenate([[0.0], times]))
        base = base[base > 0]
        unit = min(base)
        per = max(1, math.ceil(unit / dt_max - 1e-9))
        dt = unit / per
        out_steps = np.round(times / dt).astype(int)
        if np.any(np.abs(out_steps * dt - times) > 1e-9 * max(1.0, T)):
            raise ValidationError("output times must be multiples of a common spacing")
        nsteps = int(out_steps[-1])

    M2 = mass.M**2
    zero = np.zeros(nx)
    u0 = data.phi0(x) if data.phi0 is not None else zero
    u1 = data.phi1(x) if data.phi1 is not None else zero

    def force(t):
        if data.f is None:
            return zero
        return data.f(x, np.full(nx, t))

    def lap(u):
        return (np.roll(u, -1) - 2 * u + np.roll(u, 1)) / dx**2

    def accel(u, t):
        return math.exp(-2 * t) * lap(u) - M2 * u + force(t)

    result = np.empty((times.size, nx))
    prev = u0
    cur = u0 + dt * u1 + 0.5 * dt**2 * accel(u0, 0.0)
    for j in np.where(out_steps == 0)[0]:
        result[j] = u0
    for n in range(1, nsteps + 1):
        for j in np.where(out_steps == n)[0]:
            result[j] = cur
        if n == nsteps:
            break
        nxt = 2 * cur - prev + dt**2 * accel(cur, n * dt)
        prev, cur = cur, nxt
    return GridSolution1D(x, times, result)


@dataclass
class RadialSolution3D:
    """u(r, t) of a radial n=3 problem, recovered from w = r u."""

    w: GridSolution1D

    def at(self, r, i):
        r = np.abs(np.asarray(r, dtype=float))
        out = np.empty(r.shape)
        small = r < 1e-6
        big = ~small
        if np.any(big):
            out[big] = self.w.at(r[big], i) / r[big]
        if np.any(small):
            out[small] = self.w.dx_at(np.zeros(int(small.sum())), i)
        return out


def radial_reduce_3d(profile0, profile1, source, R, mass: CurvedMass, cfg: SpectralConfig, times,
                     source_times=(0.0, math.inf)):
    """Radial n=3 solution from profiles g0(r), g1(r) and F(r, t) (any may be None)."""
    def odd(g):
        return None if g is None else (lambda r: np.asarray(r) * g(np.abs(np.asarray(r))))

    f = None
    if source is not None:
        f = lambda r, t: np.asarray(r) * source(np.abs(np.asarray(r)), t)
    data = CauchyData1D(phi0=odd(profile0), phi1=odd(profile1), f=f, R0=R, R1=R, Rf=R,
                        source_times=source_times)
    return RadialSolution3D(spectral_solve_1d(data, mass, cfg, times))
