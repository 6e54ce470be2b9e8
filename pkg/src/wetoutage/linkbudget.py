"""Measurement-anchored link budget.

* ``eta * beta`` from a rectenna measurement: harvested DC power over
  transmitted power times both antenna gains.
* Path loss to range through four tabulated corridor measurements,
  interpolated linearly in (dB loss, log10 distance).
* Received RF power for a beamformed downlink, with a warning below the
  1 mW level where rectifier efficiency drops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import SystemParams, db_to_linear
from .errors import DomainError

# (path loss in dB, separation in metres)
RANGE_TABLE = ((-60.0, 7.8), (-55.0, 4.1), (-50.0, 2.2), (-45.0, 1.1))
EFFICIENCY_KNEE_W = 1e-3


@dataclass(frozen=True)
class MeasurementPoint:
    """One rectenna measurement.  Powers in W, gains linear, distance in m."""

    P_dc: float
    P_t: float
    G_t: float
    G_r: float = 1.0
    distance: Optional[float] = None

    def __post_init__(self):
        for name in ("P_dc", "P_t", "G_t", "G_r"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be positive, got {v}")
        if self.distance is not None and not self.distance > 0:
            raise DomainError("distance must be positive")


# 0.5 mW DC at 4 W transmit through a 9 dBi antenna to a 0 dBi rectenna
RECTENNA_MEASUREMENT = MeasurementPoint(P_dc=0.5e-3, P_t=4.0, G_t=float(db_to_linear(9.0)), G_r=1.0)


def eta_beta_estimate(m: MeasurementPoint) -> float:
    """``eta * beta = P_dc / (P_t G_t G_r)``."""
    return m.P_dc / (m.P_t * m.G_t * m.G_r)


@dataclass(frozen=True)
class RangeLookup:
    distance_m: float
    extrapolated: bool


def pathloss_to_range(beta_db: float) -> RangeLookup:
    """Separation for a path loss ``beta_db`` (negative dB, e.g. -50).

    Interpolates ``log10(distance)`` linearly in dB between tabulated
    points; outside [-60, -45] dB the end segment is extended and the
    result flagged as extrapolated.
    """
    if not np.isfinite(beta_db):
        raise DomainError("beta_db must be finite")
    xs = np.array([p[0] for p in RANGE_TABLE])
    ys = np.log10([p[1] for p in RANGE_TABLE])
    order = np.argsort(xs)
    xs, ys = xs[order], ys[order]
    extrap = bool(beta_db < xs[0] or beta_db > xs[-1])
    for x0, d0 in RANGE_TABLE:
        if beta_db == x0:
            return RangeLookup(d0, False)
    if beta_db < xs[0]:
        i = 0
    elif beta_db > xs[-1]:
        i = len(xs) - 2
    else:
        i = int(np.searchsorted(xs, beta_db) - 1)
    t = (beta_db - xs[i]) / (xs[i + 1] - xs[i])
    return RangeLookup(float(10.0 ** (ys[i] + t * (ys[i + 1] - ys[i]))), extrap)


@dataclass(frozen=True)
class PowerDiagnostic:
    power_w: float
    warning: bool
    message: str


def received_power_diagnostic(params: SystemParams, duration_s: float) -> PowerDiagnostic:
    """Mean received RF power ``E_d E||h||^2 / T`` for a coherent downlink.

    ``E||h||^2 = beta (K S + M)/(K + 1)``, which is ``beta M`` for unit
    line-of-sight gains.  Warns below 1 mW.
    """
    if not duration_s > 0:
        raise DomainError("duration must be positive")
    K = params.K
    gain = params.beta * (K * params.alpha_sum + params.M) / (K + 1.0)
    pw = params.E_d * gain / duration_s
    low = pw < EFFICIENCY_KNEE_W
    msg = (f"received power {pw:.3g} W is below 1 mW; the harvesting efficiency "
           f"eta={params.eta} is likely optimistic") if low else "ok"
    return PowerDiagnostic(pw, low, msg)


def db(x: float) -> float:
    return 10.0 * math.log10(x)
