"""Command-line front end: kernel values, solutions, oracle runs, checks and sweeps.

Every command takes the same flags; a ``--config`` file of ``key = value``
lines supplies defaults that explicit flags override.  With ``--out DIR``
the command writes ``DIR/<command>.csv`` and a manifest
``DIR/<command>.json`` (tool version, config, config hash, file hashes).

Exit status: 0 on success, 2 when parameters fail validation, 3 when a
numerical procedure fails or a requested check does not pass.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io as dio
from .cauchy import CauchyData1D, solve_1d
from .errors import DSKGError, NumericalError, ValidationError
from .estimates import (DEFAULT_TIMES, EstimateConfig, check_decay_1d, check_decay_nd, default_z_grid,
                        lemma_bound_checks)
from .identities import SampleSpec, pde_residual_E, riemann_condition_residuals, sample_cone_interior, verify_kernel_identities
from .kernels import CurvedMass, KernelPoint, evaluate_E, kernel_E_complex
from .oracle import SpectralConfig, radial_reduce_3d, spectral_solve_1d
from .presets import PRESETS, preset_data
from .quadrature import QuadratureSpec
from .spherical import solve_homogeneous_nd, solve_source_nd

log = logging.getLogger("dskg")

COMMANDS = ("kernel", "solve1d", "solve-nd", "oracle", "verify", "decay", "lemmas")
SUITES = ("identities", "riemann", "realness", "pde")
# alternative names accepted for a suite
SUITE_ALIASES = {"prop42": "identities"}


def _floats(v):
    if isinstance(v, (list, tuple)):
        return [float(x) for x in v]
    return [float(x) for x in str(v).replace(",", " ").split()]


# name -> (converter, default); None means "chosen by the command"
PARAMS = {
    "M": (float, 0.0),
    "n": (int, None),
    "t": (_floats, None),
    "x": (_floats, None),
    "x0": (float, 0.0),
    "t0": (float, 0.0),
    "p": (float, 2.0),
    "q": (float, 2.0),
    "s": (float, 0.0),
    "rho": (float, 1.0),
    "tol": (float, None),
    "threads": (int, None),
    "preset": (str, None),
    "suite": (str, "identities"),
    "samples": (int, 50),
    "points": (int, 65),
    "grid_points": (int, 4097),
    "N": (int, 8192),
    "L": (float, 8.0),
    "z_min": (float, 2.0),
    "z_max": (float, 100.0),
    "z_points": (int, 25),
}

DEFAULT_PRESET = {"solve1d": "bump-phi0", "oracle": "bump-phi0", "solve-nd": "shell-3d", "decay": "bump-phi1"}


@dataclass
class RunConfig:
    """A validated command with its parameters, output directory and seed."""

    command: str
    params: dict = field(default_factory=dict)
    out: Path | None = None
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        unknown = set(self.params) - set(PARAMS)
        if unknown:
            raise ValidationError(f"unknown parameters: {', '.join(sorted(unknown))}")
        full = {}
        for key, (conv, default) in PARAMS.items():
            v = self.params.get(key, default)
            try:
                full[key] = None if v is None else conv(v)
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"bad value for {key}: {v!r}") from exc
        if full["preset"] is None:
            full["preset"] = DEFAULT_PRESET.get(self.command)
        if full["n"] is None:
            full["n"] = 3 if full["preset"] == "shell-3d" or self.command == "solve-nd" else 1
        if full["threads"] is None:
            full["threads"] = os.cpu_count() or 1
        self.params = full
        self.seed = int(self.seed)
        self._validate()

    def _validate(self):
        P = self.params
        if not (math.isfinite(P["M"]) and P["M"] >= 0):
            raise ValidationError("M must be finite and >= 0")
        if P["n"] not in (1, 2, 3):
            raise ValidationError("n must be 1, 2 or 3")
        if P["preset"] is not None and P["preset"] not in PRESETS:
            raise ValidationError(f"unknown preset {P['preset']!r}; choose from {', '.join(PRESETS)}")
        if P["t"] is not None and any(not math.isfinite(t) for t in P["t"]):
            raise ValidationError("times must be finite")
        if P["tol"] is not None and not P["tol"] > 0:
            raise ValidationError("tol must be > 0")
        if P["threads"] < 1:
            raise ValidationError("threads must be >= 1")
        P["suite"] = SUITE_ALIASES.get(P["suite"], P["suite"])
        if P["suite"] not in SUITES:
            raise ValidationError(f"unknown suite {P['suite']!r}; choose from {', '.join(SUITES)}")
        for key in ("samples", "points", "z_points"):
            if P[key] < 1:
                raise ValidationError(f"{key} must be >= 1")
        if self.command in ("solve1d", "oracle") and P["n"] not in (1, 3):
            raise ValidationError(f"{self.command} supports n = 1 (and n = 3 radial for oracle)")
        if self.command == "solve1d" and P["n"] != 1:
            raise ValidationError("solve1d needs n = 1; use solve-nd")
        if self.command == "solve-nd" and P["n"] == 1:
            raise ValidationError("solve-nd needs n = 2 or 3")
        if self.command in ("solve1d", "solve-nd", "oracle", "decay") and P["t"] is not None:
            if min(P["t"]) < 0:
                raise ValidationError("times must be >= 0")
        if self.command == "decay":
            self.estimate_config()
        if self.command == "lemmas":
            if not 1 < P["z_min"] < P["z_max"] <= 100:
                raise ValidationError("need 1 < z_min < z_max <= 100")
        if self.command == "oracle":
            SpectralConfig(L=P["L"], N=P["N"])

    def to_dict(self):
        """Everything that determines the output (not the output location or thread count)."""
        params = {k: v for k, v in self.params.items() if k != "threads"}
        return {"command": self.command, "params": params, "seed": self.seed}

    @property
    def hash(self) -> str:
        return dio.config_hash(self.to_dict())

    # helpers used by the commands
    @property
    def mass(self):
        return CurvedMass(self.params["M"])

    def quad(self, default=QuadratureSpec()):
        tol = self.params["tol"]
        if tol is None:
            return default
        return QuadratureSpec(abs_tol=tol, rel_tol=max(tol, 1e-14) * 100)

    def estimate_config(self):
        P = self.params
        return EstimateConfig(p=P["p"], q=P["q"], s=P["s"], rho=P["rho"],
                              times=tuple(P["t"]) if P["t"] else DEFAULT_TIMES,
                              grid_points=P["grid_points"], threads=P["threads"],
                              quad=self.quad(EstimateConfig().quad))


@dataclass
class RunResult:
    header: tuple = ()
    rows: list = field(default_factory=list)
    summary: dict | None = None
    passed: bool = True
    text: str | None = None


# -------------------------------------------------------------- commands

def _cmd_kernel(cfg: RunConfig) -> RunResult:
    P = cfg.params
    xs = P["x"] or [0.0]
    ts = P["t"] or [P["t0"]]
    tol = P["tol"] if P["tol"] is not None else 1e-14
    rows = []
    for t in ts:
        for x in xs:
            v = evaluate_E(KernelPoint(x, t, P["x0"], P["t0"]), cfg.mass, tol)
            rows.append((x, t, P["x0"], P["t0"], v.value))
    text = "\n".join(dio.format_value(r[-1]) for r in rows)
    return RunResult(("x", "t", "x0", "t0", "E"), rows, text=text)


def _x_grid(P, R, lo_zero=False):
    if P["x"]:
        return np.array(P["x"])
    half = R + 1.2
    return np.linspace(0.0 if lo_zero else -half, half, P["points"])


def _cmd_solve1d(cfg: RunConfig) -> RunResult:
    P = cfg.params
    data = preset_data(P["preset"], 1)
    sol = solve_1d(data, cfg.mass, cfg.quad(), threads=P["threads"])
    xs = _x_grid(P, data.support_radius)
    ts = P["t"] or [1.0]
    u = sol.grid(xs, ts)
    rows = [(float(x), float(t), float(v)) for t, row in zip(ts, u) for x, v in zip(xs, row)]
    return RunResult(("x", "t", "u"), rows)


def _cmd_solve_nd(cfg: RunConfig) -> RunResult:
    P = cfg.params
    n = P["n"]
    data = preset_data(P["preset"], n)
    if isinstance(data, CauchyData1D):
        raise ValidationError(f"preset {P['preset']} has no {n}-dimensional form")
    fast = n == 3 and data.is_radial
    parts = []
    if data.phi0 is not None or data.phi1 is not None:
        parts.append(solve_homogeneous_nd(data, cfg.mass, cfg.quad(), radial_fast=fast))
    if data.f is not None:
        parts.append(solve_source_nd(data, cfg.mass, cfg.quad(), radial_fast=fast))
    rs = _x_grid(P, data.support_radius, lo_zero=True)
    ts = P["t"] or [1.0]
    rows = []
    for t in ts:
        if fast:
            u = sum(s.radial(np.abs(rs), t) for s in parts)
        else:
            pts = np.zeros((rs.size, n))
            pts[:, 0] = rs
            u = sum(s(pts, t) for s in parts)
        rows.extend((float(r), float(t), float(v)) for r, v in zip(rs, u))
    return RunResult(("x1", "t", "u"), rows)


def _cmd_oracle(cfg: RunConfig) -> RunResult:
    P = cfg.params
    sc = SpectralConfig(L=P["L"], N=P["N"])
    ts = P["t"] or [1.0]
    if P["n"] == 1:
        data = preset_data(P["preset"], 1)
        sol = spectral_solve_1d(data, cfg.mass, sc, ts)
        xs = _x_grid(P, data.support_radius)
        evaluate = lambda i: sol.at(xs, i)
    else:
        data = preset_data(P["preset"], 3)
        if not data.is_radial:
            raise ValidationError("the n = 3 oracle needs radial data")
        sol = radial_reduce_3d(data.radial0, data.radial1, data.radial_f, data.support_radius, cfg.mass, sc, ts,
                               data.source_times)
        xs = _x_grid(P, data.support_radius, lo_zero=True)
        evaluate = lambda i: sol.at(xs, i)
    order = np.argsort(ts, kind="stable")
    rows = []
    for i, k in enumerate(order):
        rows.extend((float(x), float(ts[k]), float(v)) for x, v in zip(xs, evaluate(i)))
    return RunResult(("x", "t", "u"), rows)


def _suite_realness(cfg):
    # 20 cone points per requested sample: 1000 at the default
    d, t, t0 = sample_cone_interior(20 * cfg.params["samples"], cfg.seed)
    worst = 0.0
    for M in sorted({0.0, 0.5, 1.0, 2.0, 5.0, cfg.params["M"]}):
        v, _ = kernel_E_complex(d, t, t0, M)
        worst = max(worst, float(np.max(np.abs(v.imag) / (1 + np.abs(v.real)))))
    return {"suite": "realness", "max_relative_imag": worst, "threshold": 1e-9, "passed": worst <= 1e-9}


def _cmd_verify(cfg: RunConfig) -> RunResult:
    P = cfg.params
    suite = P["suite"]
    if suite == "identities":
        rep = verify_kernel_identities(cfg.mass, SampleSpec(samples=P["samples"], seed=cfg.seed))
        summary = {"suite": suite, **rep.to_dict()}
        rows = [(k, float(v)) for k, v in rep.residuals.items()]
        return RunResult(("identity", "residual"), rows, summary, rep.passed)
    if suite == "riemann":
        res = riemann_condition_residuals(cfg.mass, samples=min(P["samples"], 20), seed=cfg.seed)
        ratios = np.concatenate([res.ratios_l, res.ratios_m])
        passed = bool(np.all((ratios >= 3.5) & (ratios <= 4.5)) and res.normalization <= 1e-12)
        summary = {"suite": suite, "M": P["M"], "ratio_min": float(ratios.min()), "ratio_max": float(ratios.max()),
                   "normalization_error": res.normalization, "passed": passed}
        rows = [("l", float(a), float(b)) for a, b in res.cond_l] + [("m", float(a), float(b)) for a, b in res.cond_m]
        return RunResult(("condition", "residual_h", "residual_h2"), rows, summary, passed)
    if suite == "realness":
        summary = _suite_realness(cfg)
        return RunResult(("max_relative_imag",), [(summary["max_relative_imag"],)], summary, summary["passed"])
    # pde: the stencil residual must shrink four-fold when h halves
    d, t, t0 = sample_cone_interior(min(P["samples"], 50), cfg.seed)
    r1 = pde_residual_E(cfg.mass, d, t, t0, 1e-2)
    r2 = pde_residual_E(cfg.mass, d, t, t0, 5e-3)
    ratio = r1 / r2
    passed = bool(np.all((ratio >= 3.5) & (ratio <= 4.5)))
    summary = {"suite": suite, "M": P["M"], "ratio_min": float(ratio.min()), "ratio_max": float(ratio.max()),
               "passed": passed}
    rows = [(float(a), float(b)) for a, b in zip(r1, r2)]
    return RunResult(("residual_h", "residual_h2"), rows, summary, passed)


def _cmd_decay(cfg: RunConfig) -> RunResult:
    P = cfg.params
    ec = cfg.estimate_config()
    data = preset_data(P["preset"], P["n"])
    if P["n"] == 1:
        rep = check_decay_1d(data, cfg.mass, ec)
    else:
        rep = check_decay_nd(data, cfg.mass, ec)
    h = cfg.hash
    rows = [(rep.estimate, r.t, r.lhs_norm, r.envelope, r.ratio, h) for r in rep.records]
    return RunResult(("series", "t_or_z", "lhs", "envelope", "ratio", "config_hash"), rows, rep.to_dict(),
                     rep.bounded)


def _cmd_lemmas(cfg: RunConfig) -> RunResult:
    P = cfg.params
    a = 2 * P["s"] - max(P["n"], 1) * (1 / P["p"] - 1 / P["q"])
    z = default_z_grid(P["z_points"], P["z_min"], P["z_max"])
    sweeps = lemma_bound_checks(P["rho"], z, P["M"], a)
    h = cfg.hash
    rows = [(sw.name, float(zz), float(l), float(r), float(l / r), h)
            for sw in sweeps for zz, l, r in zip(sw.z, sw.lhs, sw.rhs)]
    summary = {"sweeps": [{k: v for k, v in sw.to_dict().items() if k not in ("z", "lhs", "rhs")} for sw in sweeps]}
    return RunResult(("series", "t_or_z", "lhs", "envelope", "ratio", "config_hash"), rows, summary,
                     all(sw.passed for sw in sweeps))


HANDLERS = {"kernel": _cmd_kernel, "solve1d": _cmd_solve1d, "solve-nd": _cmd_solve_nd, "oracle": _cmd_oracle,
            "verify": _cmd_verify, "decay": _cmd_decay, "lemmas": _cmd_lemmas}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute a configuration; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    t0 = time.perf_counter()
    try:
        res = HANDLERS[cfg.command](cfg)
    except ValidationError as exc:
        log.debug("validation failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        log.debug("numerical failure: %s", exc)
        print(f"numerical failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 3
    log.info("%s finished in %.2f s", cfg.command, time.perf_counter() - t0)

    if cfg.out is not None:
        out = Path(cfg.out)
        csv_path = dio.write_csv(out / f"{cfg.command}.csv", res.header, res.rows)
        dio.write_manifest(out / f"{cfg.command}.json", cfg.to_dict(), [csv_path], res.summary)
    if res.summary is not None:
        print(json.dumps(res.summary, indent=2, sort_keys=True, default=float), file=stdout)
    elif res.text is not None:
        print(res.text, file=stdout)
    elif cfg.out is None:
        stdout.write(dio.csv_text(res.header, res.rows))
    if not res.passed:
        print("check failed", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("parameters")
    g.add_argument("--M", type=float, help="curved mass (>= 0)")
    g.add_argument("--n", type=int, help="spatial dimension (1, 2 or 3)")
    g.add_argument("--t", type=float, nargs="+", help="time(s)")
    g.add_argument("--x", type=float, nargs="+", help="spatial point(s); distances along x1 for n > 1")
    g.add_argument("--x0", type=float, help="source point position (kernel)")
    g.add_argument("--t0", type=float, help="source point time (kernel)")
    g.add_argument("--p", type=float, help="data exponent")
    g.add_argument("--q", type=float, help="solution exponent")
    g.add_argument("--s", type=float, help="smoothing order (only 0 is measured)")
    g.add_argument("--rho", type=float, help="kernel integrability exponent in [1, 2)")
    g.add_argument("--tol", type=float, help="quadrature / kernel tolerance")
    g.add_argument("--threads", type=int, help="worker threads (default: all cores)")
    g.add_argument("--preset", choices=PRESETS, help="named data set")
    g.add_argument("--suite", choices=SUITES + tuple(SUITE_ALIASES), help="verification suite")
    g.add_argument("--samples", type=int, help="random samples per check")
    g.add_argument("--points", type=int, help="output grid points")
    g.add_argument("--seed", type=int, help="random seed")
    g.add_argument("--out", type=Path, help="output directory for CSV and manifest")
    g.add_argument("--config", type=Path, help="key=value file; flags override it")

    parser = argparse.ArgumentParser(prog="dskg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {"kernel": "evaluate the kernel E", "solve1d": "solve the 1D Cauchy problem",
             "solve-nd": "solve the 2D/3D Cauchy problem", "oracle": "run the spectral reference solver",
             "verify": "run an identity suite", "decay": "sweep a decay envelope",
             "lemmas": "sweep the kernel integral bounds"}
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values = {}
    if args.config is not None:
        values.update(dio.read_config_file(args.config))
    flags = {k: v for k, v in vars(args).items() if v is not None and k not in ("command", "config", "out")}
    values.update(flags)
    seed = values.pop("seed", 0)
    out = values.pop("out", None) if args.out is None else args.out
    return RunConfig(args.command, values, Path(out) if out is not None else None, seed)


def main(argv=None) -> int:
    level = getattr(logging, os.environ.get("DSKG_LOG", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DSKGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
