"""The eleven acceptance criteria, each at its stated tolerance and time limit.

Every test prints one PASS/FAIL line; the lines are repeated together at
the end of the pytest run.
"""

import json
import math
import time

import numpy as np
import pytest

from dskg.cauchy import solve_1d
from dskg.estimates import EstimateConfig, check_decay_1d, check_decay_nd, lemma_bound_checks
from dskg.hypergeom import gauss_2f1
from dskg.identities import (SampleSpec, riemann_condition_residuals, sample_cone_interior,
                             verify_kernel_identities)
from dskg.kernels import CurvedMass, kernel_E_complex
from dskg.numdiff import derivative
from dskg.oracle import SpectralConfig, radial_reduce_3d, spectral_solve_1d
from dskg.presets import PRESETS, preset_data
from dskg.quadrature import QuadratureSpec
from dskg.spherical import SphereRule, solve_homogeneous_nd, solve_source_nd, sphere_mean

from oracles import elliptic_2f1

pytestmark = pytest.mark.slow

MASSES = (0.0, 0.5, 1.0, 2.0, 5.0)
TIGHT = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)


def test_01_hypergeometric_vs_agm(acceptance_report):
    start = time.perf_counter()
    z = np.linspace(0.01, 0.97, 20)
    err = max(abs(gauss_2f1(0.5, 0.5, 1.0, zi).value.real / elliptic_2f1(zi) - 1) for zi in z)
    ok = acceptance_report(1, "2F1(1/2,1/2;1;z) vs AGM elliptic oracle", err <= 1e-11,
                           f"max relative error {err:.2e} (tol 1e-11, 20 points)", time.perf_counter() - start, 1)
    assert ok


def test_02_realness(acceptance_report):
    start = time.perf_counter()
    d, t, t0 = sample_cone_interior(1000, seed=2024)
    worst = 0.0
    for M in MASSES:
        v, _ = kernel_E_complex(d, t, t0, M)
        worst = max(worst, float(np.max(np.abs(v.imag) / (1 + np.abs(v.real)))))
    ok = acceptance_report(2, "realness of E", worst <= 1e-9,
                           f"max |Im E|/(1+|Re E|) = {worst:.2e} over 1000 points x {len(MASSES)} masses (tol 1e-9)",
                           time.perf_counter() - start, 5)
    assert ok


def test_03_identities(acceptance_report):
    start = time.perf_counter()
    worst, failures = 0.0, []
    for M in MASSES:
        rep = verify_kernel_identities(CurvedMass(M), SampleSpec(samples=50, seed=3))
        worst = max(worst, max(rep.residuals.values()))
        failures += [f"{k}@M={M:g}" for k in rep.failures()]
    ok = acceptance_report(3, "closed-form identities E0-E8", not failures,
                           f"max residual {worst:.2e} (tol 1e-6, 50 samples each, M in {list(MASSES)})"
                           + (f"; failing {failures}" if failures else ""), time.perf_counter() - start, 30)
    assert ok


def test_04_riemann_conditions(acceptance_report):
    start = time.perf_counter()
    lo, hi, norm = math.inf, -math.inf, 0.0
    for M in MASSES:
        res = riemann_condition_residuals(CurvedMass(M), samples=20, seed=4)
        r = np.concatenate([res.ratios_l, res.ratios_m])
        lo, hi, norm = min(lo, r.min()), max(hi, r.max()), max(norm, res.normalization)
    passed = 3.5 <= lo and hi <= 4.5 and norm <= 1e-12
    ok = acceptance_report(4, "Riemann function conditions", passed,
                           f"halving ratios in [{lo:.3f}, {hi:.3f}] (need [3.5, 4.5]); "
                           f"|R(a,b;a,b) - 1| = {norm:.1e} (tol 1e-12)", time.perf_counter() - start, 10)
    assert ok


def test_05_closed_form_vs_spectral(acceptance_report):
    start = time.perf_counter()
    ts = np.linspace(3 / 8, 3.0, 8)
    worst, where = 0.0, ""
    for name in ("bump-phi0", "bump-phi1", "source-pulse"):
        data = preset_data(name)
        xs = np.linspace(-data.support_radius - 1, data.support_radius + 1, 64)
        for M in (0.0, 0.5, 2.0):
            oracle = spectral_solve_1d(data, CurvedMass(M), SpectralConfig(), ts)
            ref = np.array([oracle.at(xs, i) for i in range(ts.size)])
            u = solve_1d(data, CurvedMass(M), QuadratureSpec(abs_tol=1e-10, rel_tol=1e-9)).grid(xs, ts)
            err = float(np.max(np.abs(u - ref)) / np.max(np.abs(ref)))
            if err > worst:
                worst, where = err, f"{name}, M={M:g}"
    ok = acceptance_report(5, "1D closed form vs spectral oracle", worst <= 1e-5,
                           f"max relative L-inf gap {worst:.2e} at {where} (tol 1e-5, 64x8 grid, t <= 3)",
                           time.perf_counter() - start, 300)
    assert ok


def test_06_initial_conditions(acceptance_report):
    start = time.perf_counter()
    xs = np.linspace(-3.5, 3.5, 141)
    pos, vel = 0.0, 0.0
    for name in ("bump-phi0", "bump-phi1", "mode-cos", "source-pulse"):
        data = preset_data(name)
        for M in (0.0, 2.0):
            sol = solve_1d(data, CurvedMass(M), TIGHT)
            phi0 = data.phi0(xs) if data.phi0 is not None else 0.0
            phi1 = data.phi1(xs) if data.phi1 is not None else 0.0
            pos = max(pos, float(np.max(np.abs(sol(xs, 0.0) - phi0))))
            ut, _ = derivative(lambda t: np.stack([sol(xs, ti) for ti in np.atleast_1d(t)]), np.array([0.0]),
                               1e-3, "forward", levels=2)
            vel = max(vel, float(np.max(np.abs(ut[0] - phi1))))
    ok = acceptance_report(6, "initial-condition recovery", pos <= 1e-10 and vel <= 1e-5,
                           f"|u(x,0) - phi0| = {pos:.1e} (tol 1e-10); one-sided u_t(x,0) vs phi1 = {vel:.1e} "
                           f"(tol 1e-5)", time.perf_counter() - start, 30)
    assert ok


def _sup(data, xs):
    vals = [0.0]
    for fn in (data.phi0, data.phi1):
        if fn is not None:
            vals.append(float(np.max(np.abs(fn(xs)))))
    if data.f is not None:
        vals.append(float(np.max(np.abs(data.f(xs, np.full(xs.shape, 0.5))))))
    return max(vals)


def test_07_finite_propagation(acceptance_report):
    start = time.perf_counter()
    worst = 0.0
    gaps = np.array([0.0, 0.05, 0.5, 2.0])
    for name in PRESETS:
        for t in (0.5, 1.0, 2.0, 3.0):
            p = -math.expm1(-t)
            if name == "shell-3d":
                data = preset_data(name, 3)
                edge = data.support_radius + p + 1e-3
                rho = edge + gaps
                u = solve_homogeneous_nd(data, CurvedMass(0.5), radial_fast=True).radial(rho, t)
                pts = np.zeros((2, 3))
                pts[:, 0], pts[:, 1] = edge, [0.0, 0.3]
                u = np.concatenate([u, solve_homogeneous_nd(data, CurvedMass(0.5))(pts, t)])
                scale = float(np.max(np.abs(data.radial1(np.linspace(0, 1, 2001)))))
            else:
                data = preset_data(name)
                edge = data.support_radius + p + 1e-3
                x = np.concatenate([edge + gaps, -edge - gaps])
                u = solve_1d(data, CurvedMass(0.5))(x, t)
                scale = _sup(data, np.linspace(-4, 4, 8001))
            worst = max(worst, float(np.max(np.abs(u))) / scale)
    ok = acceptance_report(7, "finite propagation beyond the horizon", worst <= 1e-8,
                           f"max |u|/|data| outside R + 1 - e^-t + 1e-3 = {worst:.1e} (tol 1e-8, all presets)",
                           time.perf_counter() - start, 60)
    assert ok


def test_08_three_dimensional_vs_radial_oracle(acceptance_report):
    start = time.perf_counter()
    ts = [0.5, 1.0, 2.0]
    rho = np.linspace(0.0, 1.5, 31)
    spots = [np.array([0.2, 0.1, 0.3]), np.array([0.0, 0.45, 0.2])]
    worst, where = 0.0, ""
    for name in ("bump-phi0", "bump-phi1", "shell-3d", "source-pulse"):
        data = preset_data(name, 3)
        for M in (0.0, 1.0):
            mass = CurvedMass(M)
            oracle = radial_reduce_3d(data.radial0, data.radial1, data.radial_f, data.support_radius, mass,
                                      SpectralConfig(), ts, data.source_times)
            if data.f is None:
                fast = solve_homogeneous_nd(data, mass, radial_fast=True)
                general = solve_homogeneous_nd(data, mass, rule=SphereRule(3, 128, 256))
                spot_times = [1]
            else:
                fast = solve_source_nd(data, mass, radial_fast=True)
                general = solve_source_nd(data, mass)
                spot_times = [1] if M == 0.0 else []
            for i, t in enumerate(ts):
                ref = oracle.at(rho, i)
                scale = np.max(np.abs(ref))
                err = float(np.max(np.abs(fast.radial(rho, t) - ref)) / scale)
                if i in spot_times:
                    for x in spots:
                        r = np.linalg.norm(x)
                        err = max(err, abs(general(x, t) - oracle.at(np.array([r]), i)[0]) / scale)
                if err > worst:
                    worst, where = err, f"{name}, M={M:g}, t={t:g}"
    ok = acceptance_report(8, "n=3 solvers vs radial-reduction oracle", worst <= 1e-4,
                           f"max relative gap {worst:.2e} at {where} (tol 1e-4, t <= 2)", time.perf_counter() - start,
                           600)
    assert ok


def test_09_huygens_violation(acceptance_report):
    start = time.perf_counter()
    data = preset_data("shell-3d", 3)
    quad = QuadratureSpec()
    tol = quad.abs_tol
    sol = solve_homogeneous_nd(data, CurvedMass(0.0), quad, radial_fast=True)
    general = solve_homogeneous_nd(data, CurvedMass(0.0), quad)
    x = np.array([0.05, 0.0, 0.0])
    rows = []
    for t in (2.0, 3.0):
        p = -math.expm1(-t)
        # the wave from the shell 0.4 < |y| < 0.6 has passed x once p > 0.65
        tail = min(abs(sol.radial(np.linalg.norm(x), t)[0]), abs(general(x, t)))
        # flat-space Kirchhoff solution t * mean of phi1 over |y - x| = t, at the same t and at t = p
        flat = max(abs(tt * float(sphere_mean(data.phi1, x, np.array([tt]))[0])) for tt in (t, p))
        rows.append((t, tail, flat))
    passed = all(tail >= 1e3 * tol and flat <= tol for _, tail, flat in rows)
    detail = "; ".join(f"t={t:g}: |u|={tail:.2e}, flat={flat:.1e}" for t, tail, flat in rows)
    ok = acceptance_report(9, "Huygens-principle violation in n=3", passed,
                           f"{detail} (need |u| >= {1e3 * tol:.0e}, flat <= {tol:.0e})", time.perf_counter() - start,
                           300)
    assert ok


def test_10_decay_envelopes(acceptance_report, tmp_path):
    start = time.perf_counter()
    cfg = EstimateConfig(p=2.0, q=2.0, s=0.0, rho=1.0, threads=4)
    mass = CurvedMass(0.0)
    reports = [
        check_decay_1d(preset_data("bump-phi1"), mass, cfg, "homogeneous"),
        check_decay_1d(preset_data("source-pulse"), mass, cfg, "source"),
        check_decay_nd(preset_data("bump-phi1", 3), mass, cfg, "homogeneous"),
    ]
    summary = {r.estimate: {"fitted_constant": r.fitted_constant, "band": r.band, "rising_tail": r.rising_tail}
               for r in reports}
    path = tmp_path / "decay_constants.json"
    path.write_text(json.dumps(summary, indent=2))
    assert json.loads(path.read_text()) == summary
    detail = "; ".join(f"{r.estimate}: C={r.fitted_constant:.4g}, band {r.band:.2f}"
                       f"{', rising tail' if r.rising_tail else ''}" for r in reports)
    ok = acceptance_report(10, "decay envelopes (p=q=2, s=0, M=0)", all(r.bounded for r in reports),
                           f"{detail} (band <= 5, 10 times in [0.5, 5]); JSON {json.dumps(summary)}",
                           time.perf_counter() - start, 600)
    assert ok


def test_11_lemma_sweeps(acceptance_report):
    start = time.perf_counter()
    sweeps = lemma_bound_checks(1.0, M=1.0, a=0.0) + lemma_bound_checks(1.5, M=1.0, a=0.0)
    # the a = 0 weighted sweeps do not depend on rho
    seen, unique = set(), []
    for s in sweeps:
        if s.name not in seen:
            seen.add(s.name)
            unique.append(s)
    worst = max(unique, key=lambda s: s.exceedance)
    detail = ", ".join(f"{s.name}: {100 * s.exceedance:.2f}%" for s in unique)
    ok = acceptance_report(11, "kernel integral bound sweeps", all(s.passed for s in unique),
                           f"exceedance over C fitted at z={unique[0].z[0]:g}: {detail} "
                           f"(tol 5%, worst {worst.name})", time.perf_counter() - start, 120)
    assert ok
