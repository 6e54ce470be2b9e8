"""Command-line interface.

Subcommands: ``analytic``, ``simulate``, ``compare``, ``sweep``, ``figure``
and ``linkbudget``.  Output is CSV (default) or JSON lines, written by a
single writer in a fixed order.  See the README for the column list.

Exit codes: 0 success, 2 invalid input, 3 no closed form for the request,
4 a simulated estimate had fewer than 20 outages.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from typing import List, Optional

import numpy as np

from . import linkbudget as lb
from .analytic import DEFAULT_OUTER, ScenarioSpec, analytic_outage
from .channel import SystemParams, db_to_linear
from .errors import (DomainError, FormulaInvalidError, IllConditionedError, NoClosedFormError,
                     NumericalError)
from .figures import figure_rows, inid_betas
from .montecarlo import SWEEP_AXES, McConfig, params_at, simulate_outage
from .records import make_row, render

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_CLOSED_FORM = 3
EXIT_BELOW_RESOLUTION = 4

_SI = {"J": 1.0, "mJ": 1e-3, "uJ": 1e-6, "nJ": 1e-9, "pJ": 1e-12}


class UsageError(Exception):
    """Invalid command-line or config input (exit code 2)."""


def parse_energy(text) -> float:
    """Parse an energy in joules.

    Accepts plain numbers (joules), SI-suffixed values (``10nJ``,
    ``1mJ``) and dB forms relative to one joule or one millijoule
    (``-30dBJ``, ``0dBmJ``).
    """
    s = str(text).strip()
    m = re.fullmatch(r"([-+0-9.eE]+)\s*(dBJ|dBmJ|J|mJ|uJ|nJ|pJ)?", s)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse energy {text!r}")
    try:
        v = float(m.group(1))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse energy {text!r}") from exc
    unit = m.group(2)
    if unit == "dBJ":
        return 10.0 ** (v / 10.0)
    if unit == "dBmJ":
        return 1e-3 * 10.0 ** (v / 10.0)
    return v * _SI.get(unit or "J")


def parse_list(text) -> List[float]:
    try:
        return [float(x) for x in str(text).replace(";", ",").split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse list {text!r}") from exc


def parse_corr(text) -> complex:
    try:
        v = complex(str(text).replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse correlation {text!r}") from exc
    return v.real if v.imag == 0 else v


def parse_grid(text) -> List[float]:
    """``a,b,c`` or ``lin:start:stop:num`` or ``log:start:stop:num`` (exponents)."""
    s = str(text)
    if s.startswith(("lin:", "log:")):
        kind, *nums = s.split(":")
        if len(nums) != 3:
            raise argparse.ArgumentTypeError(f"grid {text!r} needs start:stop:num")
        a, b, n = float(nums[0]), float(nums[1]), int(nums[2])
        pts = np.linspace(a, b, n)
        return list(10.0 ** pts if kind == "log" else pts)
    return parse_list(s)


def read_config(path) -> dict:
    """Flat ``key = value`` file; ``#`` starts a comment.  Keys are flag names."""
    out = {}
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key = value")
            k, v = (x.strip() for x in line.split("=", 1))
            out[k.lstrip("-").replace("-", "_")] = v
    return out


def _common(p: argparse.ArgumentParser):
    g = p.add_argument_group("system parameters")
    g.add_argument("--M", type=int, default=1, help="number of array antennas")
    g.add_argument("--Eu", type=parse_energy, default=1e-8, help="uplink pilot energy [J]")
    g.add_argument("--Ed", type=parse_energy, default=1e-3, help="fixed downlink energy [J]")
    g.add_argument("--Ep", type=parse_energy, default=1e-7, help="processing energy [J]")
    g.add_argument("--rho", type=parse_energy, default=None, help="adaptation constant [J], power=adapt only")
    g.add_argument("--eta", type=float, default=0.5, help="harvesting efficiency")
    g.add_argument("--N0", type=parse_energy, default=1e-20, help="noise energy [J]")
    g.add_argument("--beta-db", type=float, default=-50.0, help="path loss [dB], e.g. -50")
    g.add_argument("--K", type=float, default=0.0, help="Rician K factor")
    g.add_argument("--phi", type=float, default=math.pi / 3, help="angle of arrival [rad]")
    g.add_argument("--spacing", type=float, default=0.5, help="antenna spacing [wavelengths]")
    g.add_argument("--corr", type=parse_corr, default=0.0, help="exponential correlation coefficient r")
    g.add_argument("--alphas", type=parse_list, default=None, help="line-of-sight gains, comma separated")
    g.add_argument("--betas", type=parse_list, default=None, help="per-antenna path gains (linear) for inid")
    g.add_argument("--betas-spread-db", type=float, default=None,
                   help="inid gains evenly spaced over beta +/- this many dB")
    s = p.add_argument_group("scenario")
    s.add_argument("--csi", choices=("perfect", "ls", "mmse"), default="perfect")
    s.add_argument("--fading", choices=("rayleigh", "rician", "inid", "correlated"), default="rayleigh")
    s.add_argument("--power", choices=("fixed", "adapt"), default="fixed")
    m = p.add_argument_group("simulation and output")
    m.add_argument("--trials", type=int, default=1_000_000, help="protocol Monte Carlo trials")
    m.add_argument("--seed", type=int, default=1)
    m.add_argument("--batch", type=int, default=65_536, help="trials per batch (speed only)")
    m.add_argument("--workers", type=int, default=1, help="threads (speed only)")
    m.add_argument("--outer", type=int, default=DEFAULT_OUTER,
                   help="draws for the LS Rician expectations")
    m.add_argument("--out", default=None, help="output file (default stdout)")
    m.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    m.add_argument("--config", default=None, help="key = value file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wetoutage", description="Outage probability of wireless energy transfer.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, helptext in (("analytic", "evaluate the analytic outage"),
                           ("simulate", "protocol Monte Carlo"),
                           ("compare", "analytic and simulated side by side")):
        _common(sub.add_parser(name, help=helptext))
    sw = sub.add_parser("sweep", help="evaluate over a grid of one parameter")
    _common(sw)
    sw.add_argument("--axis", choices=SWEEP_AXES, required=True)
    sw.add_argument("--grid", type=parse_grid, required=True,
                    help="a,b,c or lin:start:stop:num or log:start:stop:num")
    sw.add_argument("--method", choices=("analytic", "simulate", "both"), default="simulate")
    fg = sub.add_parser("figure", help="data for a published figure")
    _common(fg)
    fg.add_argument("name", help="fig2 .. fig10 or an alias such as spatial-correlation")
    fg.add_argument("--grid", type=parse_grid, default=None, help="replace the default x-grid")
    fg.add_argument("--mc", action="store_true", help="add simulated series where available")
    lk = sub.add_parser("linkbudget", help="eta*beta estimate, range lookup, received power")
    _common(lk)
    lk.add_argument("--pdc", type=float, default=lb.RECTENNA_MEASUREMENT.P_dc, help="harvested DC power [W]")
    lk.add_argument("--pt", type=float, default=lb.RECTENNA_MEASUREMENT.P_t, help="transmit power [W]")
    lk.add_argument("--gt-db", type=float, default=9.0, help="transmit antenna gain [dBi]")
    lk.add_argument("--gr-db", type=float, default=0.0, help="receive antenna gain [dBi]")
    lk.add_argument("--duration", type=float, default=100e-6, help="downlink duration [s]")
    return ap


def _apply_config(ap: argparse.ArgumentParser, argv: List[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config is None:
        return ap.parse_args(argv)
    cfg = read_config(known.config)
    # route config values through the same type parsers as flags
    cmd = next((a for a in argv if not a.startswith("-")), None)
    sub = ap._subparsers._group_actions[0].choices.get(cmd) if cmd else None
    if sub is None:
        return ap.parse_args(argv)
    dests = {a.dest: a for a in sub._actions}
    defaults = {}
    for k, v in cfg.items():
        key = {"beta_db": "beta_db", "betas_spread_db": "betas_spread_db"}.get(k, k)
        if key not in dests:
            raise UsageError(f"config: unknown key {k!r}")
        act = dests[key]
        try:
            defaults[key] = act.type(v) if act.type else v
        except (argparse.ArgumentTypeError, ValueError) as exc:
            raise UsageError(f"config: bad value for {k}: {exc}") from exc
        if act.choices and defaults[key] not in act.choices:
            raise UsageError(f"config: {k} must be one of {list(act.choices)}")
    sub.set_defaults(**defaults)
    return ap.parse_args(argv)


def params_from_args(a) -> SystemParams:
    if a.power == "adapt" and a.rho is None:
        raise UsageError("--rho: required when --power adapt")
    if a.power == "fixed" and a.rho is not None:
        raise UsageError("--rho: only valid with --power adapt")
    if a.alphas is not None and len(a.alphas) != a.M:
        raise UsageError(f"--alphas: expected {a.M} values, got {len(a.alphas)}")
    # Rayleigh labels ignore K; record the value actually used
    K = 0.0 if a.fading in ("rayleigh", "inid") else a.K
    try:
        return SystemParams(M=a.M, E_u=a.Eu, E_d=a.Ed, E_p=a.Ep, eta=a.eta, N0=a.N0,
                            beta=float(db_to_linear(a.beta_db)), K=K,
                            rho=a.rho if a.power == "adapt" else None,
                            alphas=tuple(a.alphas) if a.alphas is not None else None,
                            phi=a.phi, d_over_lambda=a.spacing, r=a.corr)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def betas_from_args(a, params: SystemParams):
    if a.fading != "inid":
        return None
    if a.betas is not None:
        if len(a.betas) != params.M:
            raise UsageError(f"--betas: expected {params.M} values, got {len(a.betas)}")
        return tuple(a.betas)
    if a.betas_spread_db is not None:
        return inid_betas(params.M, params.beta, a.betas_spread_db)
    raise UsageError("--betas or --betas-spread-db: required for --fading inid")


def mc_from_args(a) -> McConfig:
    try:
        return McConfig(n_trials=a.trials, seed=a.seed, batch=a.batch, workers=a.workers)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _analytic_row(cmd, sc, params, betas, a):
    est = analytic_outage(sc, params, betas=betas, n_outer=a.outer, seed=a.seed)
    mc_like = est.method == "expectation_mc"
    return make_row(cmd, sc, params, est, betas=betas, seed=a.seed if mc_like else None,
                    n_outer=a.outer if mc_like else None)


def _simulate_row(cmd, sc, params, betas, mc):
    est = simulate_outage(sc, params, None, mc, betas)
    return make_row(cmd, sc, params, est, betas=betas, seed=mc.seed, n_trials=mc.n_trials)


def _no_closed_form_row(cmd, sc, params, betas, exc):
    return make_row(cmd, sc, params, None, betas=betas, status="no_closed_form",
                    note=f"{exc}".replace("\n", " "))


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        a = _apply_config(ap, argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID

    rows: List[dict] = []
    code = EXIT_OK
    try:
        params = params_from_args(a)
        sc = ScenarioSpec(a.csi, a.fading, a.power)
        if a.command == "linkbudget":
            text = _linkbudget_report(a, params)
            _emit(text, a.out, stdout)
            return EXIT_OK
        betas = betas_from_args(a, params)
        mc = mc_from_args(a)
        if a.command == "analytic":
            try:
                rows.append(_analytic_row("analytic", sc, params, betas, a))
            except (NoClosedFormError, FormulaInvalidError, IllConditionedError) as exc:
                print(f"no closed form: {exc}. Run `wetoutage simulate` with the same flags instead.",
                      file=stderr)
                rows.append(_no_closed_form_row("analytic", sc, params, betas, exc))
                code = EXIT_NO_CLOSED_FORM
        elif a.command == "simulate":
            rows.append(_simulate_row("simulate", sc, params, betas, mc))
        elif a.command == "compare":
            sim = _simulate_row("compare", sc, params, betas, mc)
            try:
                ana = _analytic_row("compare", sc, params, betas, a)
            except (NoClosedFormError, FormulaInvalidError, IllConditionedError) as exc:
                print(f"no closed form: {exc}", file=stderr)
                rows += [_no_closed_form_row("compare", sc, params, betas, exc), sim]
                code = EXIT_NO_CLOSED_FORM
            else:
                band = 3.0 * (sim["std_err"] + ana["std_err"])
                diff = sim["p"] - ana["p"]
                ok = abs(diff) <= band
                note = f"difference {diff:.3g}, 3-SE band {band:.3g}: {'agree' if ok else 'DISAGREE'}"
                ana["note"] = sim["note"] = note
                rows += [ana, sim]
        elif a.command == "sweep":
            for v in a.grid:
                try:
                    pv = params_at(params, a.axis, v)
                except DomainError as exc:
                    raise UsageError(f"--grid value {v}: {exc}") from exc
                bv = betas_from_args(a, pv) if a.fading == "inid" else None
                if a.method in ("analytic", "both"):
                    try:
                        r = _analytic_row("sweep", sc, pv, bv, a)
                    except (NoClosedFormError, FormulaInvalidError, IllConditionedError) as exc:
                        r = _no_closed_form_row("sweep", sc, pv, bv, exc)
                        code = max(code, EXIT_NO_CLOSED_FORM)
                    r.update(x_name=a.axis, x=v)
                    rows.append(r)
                if a.method in ("simulate", "both"):
                    r = _simulate_row("sweep", sc, pv, bv, mc)
                    r.update(x_name=a.axis, x=v)
                    rows.append(r)
        elif a.command == "figure":
            rows = figure_rows(a.name, base=params, grid=a.grid, mc=mc if a.mc else None,
                               n_outer=a.outer, seed=a.seed)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return EXIT_INVALID

    if code == EXIT_OK and any(r.get("status") == "below_resolution" for r in rows):
        print("warning: fewer than 20 outages in at least one simulation; increase --trials",
              file=stderr)
        code = EXIT_BELOW_RESOLUTION
    _emit(render(rows, a.format), a.out, stdout)
    return code


def _linkbudget_report(a, params: SystemParams) -> str:
    try:
        m = lb.MeasurementPoint(P_dc=a.pdc, P_t=a.pt, G_t=float(db_to_linear(a.gt_db)),
                                G_r=float(db_to_linear(a.gr_db)))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    eb = lb.eta_beta_estimate(m)
    rng = lb.pathloss_to_range(a.beta_db)
    diag = lb.received_power_diagnostic(params, a.duration)
    lines = [("quantity", "value", "unit", "flag"),
             ("eta_beta", "%.17g" % eb, "linear", ""),
             ("eta_beta_db", "%.17g" % lb.db(eb), "dB", ""),
             ("range", "%.17g" % rng.distance_m, "m", "extrapolated" if rng.extrapolated else ""),
             ("received_power", "%.17g" % diag.power_w, "W", "below_1mW" if diag.warning else "")]
    if a.format == "jsonl":
        import json
        return "".join(json.dumps(dict(zip(lines[0], r))) + "\n" for r in lines[1:])
    return "".join(",".join(r) + "\n" for r in lines)


def _emit(text: str, out, stdout):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
