"""Protocol-level Monte Carlo: channel, pilot, estimate, beamform, harvest.

Trial ``i`` draws its channel and its pilot noise from words
``[4 M i, 4 M (i+1))`` of one Philox stream (see :mod:`wetoutage.rng`),
so outage counts do not depend on batch size or on the number of worker
threads.  Batches are counted independently and the integer counts summed.
"""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .analytic import OutageEstimate, ScenarioSpec
from .channel import FadingSpec, SystemParams, channel_from_normals, db_to_linear, fading_spec
from .errors import DomainError
from .estimator import PilotObservation, ls_estimate, mmse_estimate, perfect_estimate
from .protocol import harvest
from .rng import complex_normal_from_uniforms, philox_key, trial_uniforms

MIN_OUTAGES = 20
SWEEP_AXES = ("M", "E_d", "E_u", "E_p", "K", "r", "beta", "beta_db", "rho")


@dataclass(frozen=True)
class McConfig:
    """Simulation size and seed.

    ``batch`` and ``workers`` only affect speed and memory, never results.
    """

    n_trials: int = 1_000_000
    seed: int = 1
    batch: int = 65_536
    workers: int = 1

    def __post_init__(self):
        if int(self.n_trials) != self.n_trials or self.n_trials < 1:
            raise DomainError(f"n_trials must be a positive integer, got {self.n_trials}")
        if self.batch < 1:
            raise DomainError("batch must be positive")
        if self.workers < 1:
            raise DomainError("workers must be positive")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise DomainError("seed must fit in 64 unsigned bits")


def _check(scenario: ScenarioSpec, params: SystemParams, spec: FadingSpec):
    if spec.M != params.M:
        raise DomainError(f"fading spec has M={spec.M}, parameters have M={params.M}")
    if scenario.power == "adapt" and params.rho is None:
        raise DomainError("power=adapt needs rho")
    if scenario.power == "fixed" and params.rho is not None:
        raise DomainError("rho given with power=fixed")


def count_outages(scenario: ScenarioSpec, params: SystemParams, spec: FadingSpec,
                  key, first_trial: int, n: int) -> int:
    """Number of outages among trials ``first_trial .. first_trial + n - 1``."""
    M = params.M
    u = trial_uniforms(key, first_trial, n, 4 * M)
    z = complex_normal_from_uniforms(u[:, :M], u[:, M:2 * M])
    h = channel_from_normals(spec, z)
    if scenario.csi == "perfect":
        est = perfect_estimate(h)
    else:
        w = complex_normal_from_uniforms(u[:, 2 * M:3 * M], u[:, 3 * M:])
        obs = PilotObservation(math.sqrt(params.E_u) * h + math.sqrt(params.N0) * w,
                               params.E_u, params.N0)
        est = ls_estimate(obs) if scenario.csi == "ls" else mmse_estimate(obs, spec)
    if scenario.power == "fixed":
        out = harvest(est, h, params.eta, params.E_u, params.E_p, E_d=params.E_d)
    else:
        out = harvest(est, h, params.eta, params.E_u, params.E_p, rho=params.rho)
    return int(np.count_nonzero(out.outage))


def simulate_outage(scenario: ScenarioSpec, params: SystemParams, spec: Optional[FadingSpec] = None,
                    mc: McConfig = McConfig(), betas: Optional[Sequence[float]] = None) -> OutageEstimate:
    """Estimate the outage probability by simulating the protocol.

    Parameters
    ----------
    scenario : ScenarioSpec
    params : SystemParams
    spec : FadingSpec, optional
        Channel law; built from ``scenario.fading`` (and ``betas``) if omitted.
    mc : McConfig

    Returns
    -------
    OutageEstimate
        ``method="protocol_mc"``; ``status="below_resolution"`` when fewer
        than 20 outages were observed.
    """
    if spec is None:
        spec = fading_spec(params, scenario.fading, betas)
    _check(scenario, params, spec)
    key = philox_key(mc.seed)
    starts = range(0, mc.n_trials, mc.batch)

    def job(i0):
        return count_outages(scenario, params, spec, key, i0, min(mc.batch, mc.n_trials - i0))

    if mc.workers == 1:
        counts = [job(i0) for i0 in starts]
    else:
        with ThreadPoolExecutor(max_workers=mc.workers) as pool:
            counts = list(pool.map(job, starts))
    k = sum(counts)
    n = mc.n_trials
    p = k / n
    return OutageEstimate(p, "protocol_mc", std_err=math.sqrt(p * (1.0 - p) / n), n_samples=n,
                          n_outages=k, status="ok" if k >= MIN_OUTAGES else "below_resolution")


def params_at(params: SystemParams, axis: str, value) -> SystemParams:
    """``params`` with the sweep ``axis`` set to ``value``."""
    if axis not in SWEEP_AXES:
        raise DomainError(f"axis must be one of {SWEEP_AXES}, got {axis!r}")
    if axis == "M":
        changes = {"M": int(value)}
        if params.alphas is not None:
            changes["alphas"] = None
        return params.replace(**changes)
    if axis == "beta_db":
        return params.replace(beta=float(db_to_linear(value)))
    return params.replace(**{axis: value})


def sweep(scenario: ScenarioSpec, params: SystemParams, axis: str, grid: Sequence, mc: McConfig,
          betas: Optional[Sequence[float]] = None) -> List[Tuple[object, OutageEstimate]]:
    """Simulate at each grid value of ``axis`` with the same seed.

    The fading spec is rebuilt for every point, since ``M``, ``K``, ``r``
    and ``beta`` all change it.
    """
    rows = []
    for v in grid:
        pv = params_at(params, axis, v)
        rows.append((v, simulate_outage(scenario, pv, None, mc, betas)))
    return rows
