"""Flat output records with full parameter provenance.

Every command emits rows with the same columns, in this order, so that any
row can be re-run on its own.  Floats are written with 17 significant
digits (``%.17g``), which round-trips IEEE doubles exactly.  Empty fields
mean "not applicable".
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, List, Optional, Sequence

from .analytic import OutageEstimate, ScenarioSpec
from .channel import SystemParams

COLUMNS = (
    "command", "figure", "series", "x_name", "x",
    "csi", "fading", "power",
    "M", "E_u", "E_d", "E_p", "eta", "N0", "beta", "beta_db", "K", "phi", "d_over_lambda", "r", "rho",
    "alphas", "betas",
    "seed", "n_trials", "n_outer",
    "method", "p", "std_err", "n_samples", "n_outages", "status", "note",
)


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return "%.17g" % v
    if isinstance(v, complex):
        return "%.17g%+.17gj" % (v.real, v.imag) if v.imag else "%.17g" % v.real
    if isinstance(v, (tuple, list)):
        return ";".join(fmt(float(x)) for x in v)
    return str(v)


def make_row(command: str, scenario: Optional[ScenarioSpec], params: SystemParams,
             est: Optional[OutageEstimate] = None, *, seed=None, n_trials=None, n_outer=None,
             betas: Optional[Sequence[float]] = None, figure: str = "", series: str = "",
             x_name: str = "", x=None, method: str = "", status: str = "", note: str = "") -> dict:
    """Assemble one output record (values still typed; see :func:`fmt`)."""
    row = dict.fromkeys(COLUMNS)
    row.update(command=command, figure=figure, series=series, x_name=x_name, x=x, note=note)
    if scenario is not None:
        row.update(csi=scenario.csi, fading=scenario.fading, power=scenario.power)
    row.update(M=params.M, E_u=params.E_u, E_d=None if params.rho is not None else params.E_d,
               E_p=params.E_p, eta=params.eta, N0=params.N0, beta=params.beta, beta_db=params.beta_db,
               K=params.K, phi=params.phi, d_over_lambda=params.d_over_lambda, r=params.r,
               rho=params.rho, alphas=params.alphas, betas=tuple(betas) if betas is not None else None,
               seed=seed, n_trials=n_trials, n_outer=n_outer)
    if est is not None:
        row.update(method=est.method, p=est.p, std_err=est.std_err,
                   n_samples=est.n_samples if est.n_samples else None,
                   n_outages=est.n_outages, status=est.status)
    else:
        row.update(method=method, status=status)
    return row


def to_csv(rows: Iterable[dict], header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(COLUMNS)
    for r in rows:
        w.writerow([fmt(r.get(c)) for c in COLUMNS])
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, complex):
        return fmt(v)
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, float) and not math.isfinite(v):
        return fmt(v)
    return v


def to_jsonl(rows: Iterable[dict]) -> str:
    """One JSON object per line, keys in column order, floats exact via repr."""
    return "".join(json.dumps({c: _json_value(r.get(c)) for c in COLUMNS}) + "\n" for r in rows)


def render(rows: List[dict], fmt_name: str = "csv") -> str:
    if fmt_name == "csv":
        return to_csv(rows)
    if fmt_name == "jsonl":
        return to_jsonl(rows)
    raise ValueError(f"unknown format {fmt_name!r}")
