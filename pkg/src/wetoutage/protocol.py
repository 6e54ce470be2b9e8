"""Downlink beamforming, harvested energy and the outage predicate.

The array transmits ``sqrt(E_d) h_hat^H / ||h_hat||`` and the node harvests
``E_h = eta E_d |psi|^2`` with ``psi = h_hat^H h / ||h_hat||``.  Downlink
receiver noise is not counted towards ``E_h``.  With power adaptation the
array spends ``E_d = rho / ||h_hat||^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .estimator import ChannelEstimate


@dataclass(frozen=True)
class HarvestOutcome:
    E_h: np.ndarray
    E_d_used: np.ndarray
    outage: np.ndarray


def _h_hat(est):
    return est.h_hat if isinstance(est, ChannelEstimate) else np.asarray(est, dtype=complex)


def beamform_gain(h_hat, h) -> np.ndarray:
    """Effective scalar channel ``psi = h_hat^H h / ||h_hat||``.

    For a perfect estimate the exact value ``||h||`` is returned rather
    than the rounded quotient.
    """
    h = np.asarray(h, dtype=complex)
    if isinstance(h_hat, ChannelEstimate) and h_hat.kind == "perfect":
        return np.linalg.norm(h, axis=-1) + 0j
    v = _h_hat(h_hat)
    nrm = np.linalg.norm(v, axis=-1)
    if np.any(nrm == 0):
        raise DomainError("zero-norm channel estimate")
    return np.sum(v.conj() * h, axis=-1) / nrm


def harvested_energy(psi, E_d, eta) -> np.ndarray:
    """``E_h = eta E_d |psi|^2``."""
    if np.any(np.asarray(E_d) < 0):
        raise DomainError("E_d must be nonnegative")
    if not 0 < eta <= 1:
        raise DomainError("eta must lie in (0, 1]")
    return eta * E_d * np.abs(psi) ** 2


def adapt_downlink_energy(h_hat, rho) -> np.ndarray:
    """Channel-inverting downlink energy ``rho / ||h_hat||^2``."""
    if not rho > 0:
        raise DomainError("rho must be positive")
    nrm2 = np.sum(np.abs(_h_hat(h_hat)) ** 2, axis=-1)
    if np.any(nrm2 == 0):
        raise DomainError("zero-norm channel estimate")
    return rho / nrm2


def outage_event(E_h, E_u, E_p):
    """True where ``E_h <= E_u + E_p``; a tie counts as an outage."""
    return np.asarray(E_h) <= E_u + E_p


def harvest(estimate: ChannelEstimate, h, eta: float, E_u: float, E_p: float,
            E_d: Optional[float] = None, rho: Optional[float] = None) -> HarvestOutcome:
    """Run the downlink phase for fixed ``E_d`` or adaptive ``rho``.

    With a perfect estimate and adaptation the harvested energy is exactly
    ``eta rho`` (the beam gain equals the channel norm), so it is formed
    without the rounding of ``|psi|^2 / ||h||^2``.
    """
    if (E_d is None) == (rho is None):
        raise DomainError("give exactly one of E_d and rho")
    h = np.asarray(h, dtype=complex)
    if rho is None:
        psi = beamform_gain(estimate, h)
        E_used = np.broadcast_to(np.asarray(E_d, dtype=float), psi.shape)
        Eh = harvested_energy(psi, E_d, eta)
    else:
        E_used = adapt_downlink_energy(estimate, rho)
        if estimate.kind == "perfect":
            Eh = np.full(E_used.shape, eta * rho)
        else:
            psi = beamform_gain(estimate, h)
            nrm2 = np.sum(np.abs(estimate.h_hat) ** 2, axis=-1)
            Eh = eta * rho * (np.abs(psi) ** 2 / nrm2)
    return HarvestOutcome(Eh, E_used, outage_event(Eh, E_u, E_p))
