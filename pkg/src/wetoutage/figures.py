"""Data series behind the published outage figures.

Each generator returns output records (see :mod:`wetoutage.records`) for
the figure's x-grid, one series per curve.  Analytic values are used
wherever a formula exists; correlated-channel figures are simulated.
Plotting is left to the caller.

Figure names follow the publication order; descriptive aliases are
accepted as well (see :data:`ALIASES`).
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .analytic import DEFAULT_OUTER, ScenarioSpec, analytic_outage
from .channel import SystemParams, db_to_linear
from .errors import DomainError
from .montecarlo import McConfig, simulate_outage
from .records import make_row

FIG7_RHO = 2.204e-7

ALIASES = {
    "path-loss": "fig2",
    "downlink-energy": "fig3",
    "rician-k": "fig4",
    "inid-processing": "fig5",
    "pilot-energy": "fig6",
    "power-control": "fig7",
    "estimation-error": "fig8",
    "spatial-correlation": "fig9",
    "correlated-estimation": "fig10",
}

M_GRID_LONG = [1] + list(range(5, 121, 5))
M_GRID_SHORT = list(range(1, 17))


def inid_betas(M: int, beta: float, spread_db: float = 3.0) -> tuple:
    """Per-antenna gains evenly spaced in dB over ``beta`` +/- ``spread_db``."""
    if M == 1:
        return (beta,)
    offs = np.linspace(-spread_db, spread_db, M)
    return tuple(float(beta * db_to_linear(o)) for o in offs)


class _Builder:
    def __init__(self, name, base: SystemParams, mc: Optional[McConfig], n_outer: int, seed: int):
        self.name = name
        self.base = base
        self.mc = mc
        self.n_outer = n_outer
        self.seed = seed
        self.rows: List[dict] = []

    def analytic(self, series, scenario, params, x_name, x, betas=None):
        est = analytic_outage(scenario, params, betas=betas, n_outer=self.n_outer, seed=self.seed)
        mc_like = est.method == "expectation_mc"
        self.rows.append(make_row("figure", scenario, params, est, figure=self.name, series=series,
                                  x_name=x_name, x=x, betas=betas,
                                  seed=self.seed if mc_like else None,
                                  n_outer=self.n_outer if mc_like else None))

    def simulate(self, series, scenario, params, x_name, x, betas=None):
        if self.mc is None:
            return
        est = simulate_outage(scenario, params, None, self.mc, betas)
        self.rows.append(make_row("figure", scenario, params, est, figure=self.name, series=series,
                                  x_name=x_name, x=x, betas=betas, seed=self.mc.seed,
                                  n_trials=self.mc.n_trials))


def _fig2(b: _Builder, grid):
    for bdb in (-45.0, -50.0, -55.0):
        for csi in ("perfect", "mmse"):
            sc = ScenarioSpec(csi, "rician", "fixed")
            for M in grid or M_GRID_LONG:
                p = b.base.replace(M=int(M), beta=float(db_to_linear(bdb)), K=2.0, alphas=None)
                b.analytic(f"{csi} beta={bdb:g}dB", sc, p, "M", int(M))


def _fig3(b: _Builder, grid):
    eds = grid or list(10.0 ** np.linspace(-4.0, -1.0, 31))
    for M in (10, 20, 30, 40):
        for csi in ("perfect", "mmse"):
            sc = ScenarioSpec(csi, "rician", "fixed")
            for ed in eds:
                p = b.base.replace(M=M, E_d=float(ed), K=2.0, alphas=None)
                b.analytic(f"{csi} M={M}", sc, p, "E_d", float(ed))


def _fig4(b: _Builder, grid):
    for K in (0.0, 2.0, 4.0):
        for csi in ("perfect", "mmse"):
            sc = ScenarioSpec(csi, "rician", "fixed")
            for M in grid or M_GRID_LONG:
                p = b.base.replace(M=int(M), K=K, alphas=None)
                b.analytic(f"{csi} K={K:g}", sc, p, "M", int(M))


def _fig5(b: _Builder, grid):
    for ep in (1e-7, 2e-7, 4e-7):
        for M in grid or list(range(1, 33)):
            p = b.base.replace(M=int(M), E_p=ep, K=0.0, alphas=None)
            betas = inid_betas(int(M), p.beta)
            b.analytic(f"perfect E_p={ep:g}", ScenarioSpec("perfect", "inid", "fixed"), p, "M", int(M), betas)
            for csi in ("mmse", "ls"):
                b.simulate(f"{csi} E_p={ep:g}", ScenarioSpec(csi, "inid", "fixed"), p, "M", int(M), betas)


def _fig6(b: _Builder, grid):
    eus = grid or list(10.0 ** np.linspace(-16.0, -6.0, 41))
    for M in (10, 30, 50):
        for csi in ("perfect", "ls"):
            sc = ScenarioSpec(csi, "rayleigh", "fixed")
            for eu in eus:
                p = b.base.replace(M=M, E_u=float(eu), K=0.0, alphas=None)
                label = "ls/mmse" if csi == "ls" else csi
                b.analytic(f"{label} M={M}", sc, p, "E_u", float(eu))


def _fig7(b: _Builder, grid):
    rho = b.base.rho if b.base.rho is not None else FIG7_RHO
    for K in (0.0, 2.0):
        for csi in ("perfect", "mmse", "ls"):
            for M in grid or M_GRID_SHORT:
                pa = b.base.replace(M=int(M), K=K, rho=rho, alphas=None)
                b.analytic(f"{csi} adapt K={K:g}", ScenarioSpec(csi, "rician", "adapt"), pa, "M", int(M))
        for M in grid or M_GRID_SHORT:
            pf = b.base.replace(M=int(M), K=K, rho=None, alphas=None)
            b.analytic(f"mmse fixed K={K:g}", ScenarioSpec("mmse", "rician", "fixed"), pf, "M", int(M))


def _fig8(b: _Builder, grid):
    for eu in (1e-14, 1e-15):
        for csi in ("perfect", "ls", "mmse"):
            sc = ScenarioSpec(csi, "rician", "fixed")
            for M in grid or [1, 2, 4, 8, 12, 16, 24, 32, 40]:
                p = b.base.replace(M=int(M), E_u=eu, K=2.0, alphas=None)
                b.analytic(f"{csi} E_u={eu:g}", sc, p, "M", int(M))


def _fig9(b: _Builder, grid):
    for r in (0.0, 0.5, 0.7, 0.9):
        for csi in ("perfect", "mmse", "ls"):
            sc = ScenarioSpec(csi, "correlated", "fixed")
            for M in grid or [1, 2, 4, 8, 16, 32, 64]:
                p = b.base.replace(M=int(M), K=0.0, r=r, alphas=None)
                b.simulate(f"{csi} r={r:g}", sc, p, "M", int(M))


def _fig10(b: _Builder, grid):
    r = b.base.r if b.base.r != 0 else 0.7
    for eu in (1e-14, 1e-15):
        for csi in ("perfect", "ls", "mmse"):
            sc = ScenarioSpec(csi, "correlated", "fixed")
            for M in grid or [1, 2, 4, 8, 16, 32]:
                p = b.base.replace(M=int(M), E_u=eu, K=0.0, r=r, alphas=None)
                b.simulate(f"{csi} E_u={eu:g}", sc, p, "M", int(M))


FIGURES: Dict[str, Callable] = {
    "fig2": _fig2, "fig3": _fig3, "fig4": _fig4, "fig5": _fig5, "fig6": _fig6,
    "fig7": _fig7, "fig8": _fig8, "fig9": _fig9, "fig10": _fig10,
}

# figures that need simulation for any output at all
SIMULATED = ("fig9", "fig10")


def resolve(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in FIGURES:
        raise DomainError(f"unknown figure {name!r}; choose from {sorted(FIGURES)} or {sorted(ALIASES)}")
    return key


def figure_rows(name: str, base: Optional[SystemParams] = None, grid: Optional[Sequence] = None,
                mc: Optional[McConfig] = None, n_outer: int = DEFAULT_OUTER, seed: int = 1) -> List[dict]:
    """Rows for figure ``name``.

    Parameters
    ----------
    base : SystemParams, optional
        Defaults to the nominal operating point; figure-specific values
        (the swept axis and the per-series parameters) override it.
    grid : sequence, optional
        Replaces the default x-grid.
    mc : McConfig, optional
        Enables simulated series; required for the correlated-channel
        figures.
    """
    key = resolve(name)
    if key in SIMULATED and mc is None:
        mc = McConfig(n_trials=100_000, seed=seed)
    b = _Builder(key, base or SystemParams(), mc, n_outer, seed)
    FIGURES[key](b, list(grid) if grid is not None else None)
    return b.rows
