"""Pilot reception and channel estimation.

The node sends a pilot of energy ``E_u``; after matched filtering the array
observes ``y = sqrt(E_u) h + w`` with ``w ~ CN(0, N0 I)``.  From ``y`` the
array forms either the least-squares estimate ``y / sqrt(E_u)`` or the
Gaussian conditional mean ``E[h | y]``.

All functions accept a single vector of shape ``(M,)`` or a batch of shape
``(n, M)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import FadingSpec, SystemParams, matvec_rows, rician_spec
from .errors import DomainError, NumericalError
from .rng import standard_complex_normal

KINDS = ("perfect", "ls", "mmse")


@dataclass(frozen=True)
class PilotObservation:
    y: np.ndarray
    E_u: float
    N0: float

    def __post_init__(self):
        if not self.E_u > 0:
            raise DomainError("E_u must be positive")


@dataclass(frozen=True)
class ChannelEstimate:
    """Estimated channel with its estimator label and per-entry error variance."""

    kind: str
    h_hat: np.ndarray
    err_var: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown estimator kind {self.kind!r}")
        if (self.err_var == 0) != (self.kind == "perfect"):
            raise DomainError("err_var must be zero exactly for perfect CSI")


@dataclass(frozen=True)
class ConditionalStats:
    """Mean and variance of a complex Gaussian scalar."""

    mean: complex
    var: float


def observe_pilot(h, params: SystemParams, rng) -> PilotObservation:
    """Received pilot statistic ``y = sqrt(E_u) h + w``."""
    h = np.asarray(h, dtype=complex)
    w = math.sqrt(params.N0) * standard_complex_normal(rng, h.shape)
    return PilotObservation(math.sqrt(params.E_u) * h + w, params.E_u, params.N0)


def perfect_estimate(h) -> ChannelEstimate:
    return ChannelEstimate("perfect", np.asarray(h, dtype=complex), 0.0)


def ls_estimate(obs: PilotObservation) -> ChannelEstimate:
    """Least-squares (and maximum-likelihood) estimate ``y / sqrt(E_u)``."""
    return ChannelEstimate("ls", obs.y / math.sqrt(obs.E_u), obs.N0 / obs.E_u)


def mmse_gain(spec: FadingSpec, E_u: float, N0: float):
    """Gain ``G`` and error covariance for ``E[h|y] = mu + G (y - sqrt(E_u) mu)``.

    Returns a scalar gain when the prior covariance is a scaled identity,
    a diagonal vector for diagonal priors, else a full matrix.
    """
    cov = spec.cov
    su = math.sqrt(E_u)
    if spec.is_scaled_identity:
        s2 = cov[0, 0].real
        g = su * s2 / (E_u * s2 + N0)
        return g, s2 * N0 / (E_u * s2 + N0) * np.ones(spec.M)
    d = np.diag(cov).real
    if np.all(cov - np.diag(np.diag(cov)) == 0):
        den = E_u * d + N0
        if np.any(den == 0):
            raise NumericalError("singular observation covariance")
        return su * d / den, d * N0 / den
    Cyy = E_u * cov + N0 * np.eye(spec.M)
    try:
        sol = np.linalg.solve(Cyy, cov)          # Cyy^{-1} C
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular observation covariance") from exc
    G = su * sol.conj().T                        # sqrt(E_u) C Cyy^{-1}
    err = cov - E_u * cov @ sol
    return G, np.diag(err).real.copy()


def mmse_estimate(obs: PilotObservation, spec: FadingSpec) -> ChannelEstimate:
    """Conditional-mean estimate ``E[h | y]`` under the prior ``spec``.

    For a scaled-identity prior ``beta/(K+1) I`` this is
    ``mu + beta sqrt(E_u)/(beta E_u + (K+1) N0) (y - sqrt(E_u) mu)``; for
    correlated priors the full matrix form is used.
    """
    G, err = mmse_gain(spec, obs.E_u, obs.N0)
    centred = obs.y - math.sqrt(obs.E_u) * spec.mu
    if np.ndim(G) == 0 or np.ndim(G) == 1:
        h_hat = spec.mu + G * centred
    else:
        h_hat = spec.mu + matvec_rows(G, centred)
    return ChannelEstimate("mmse", h_hat, float(np.mean(err)))


def _norm(v):
    n = np.linalg.norm(v, axis=-1)
    if np.any(n == 0):
        raise DomainError("zero-norm channel estimate")
    return n


def residual_variance(params: SystemParams) -> float:
    """Conditional variance of the beamforming gain, ``beta N0/(beta E_u + (K+1) N0)``."""
    b = params.beta
    return b * params.N0 / (b * params.E_u + (params.K + 1.0) * params.N0)


def ls_conditional_stats(h_hat_ls, params: SystemParams, mu=None) -> ConditionalStats:
    """Law of ``psi = h_hat^H h / ||h_hat||`` given the LS estimate.

    The mean mixes the estimate norm with the projection of the
    line-of-sight mean onto the beam direction::

        c ||h_hat|| + (1 - c) h_hat^H mu / ||h_hat||,
        c = beta E_u / (beta E_u + (K+1) N0).
    """
    h_hat = np.asarray(h_hat_ls, dtype=complex)
    if mu is None:
        mu = rician_spec(params).mu
    nrm = _norm(h_hat)
    b, K, Eu, N0 = params.beta, params.K, params.E_u, params.N0
    den = b * Eu + (K + 1.0) * N0
    proj = np.sum(h_hat.conj() * mu, axis=-1) / nrm
    mean = (b * Eu / den) * nrm + ((K + 1.0) * N0 / den) * proj
    return ConditionalStats(mean, residual_variance(params))


def mmse_conditional_stats(h_hat_mmse, params: SystemParams) -> ConditionalStats:
    """Law of ``psi`` given the MMSE estimate: mean ``||h_hat||``."""
    h_hat = np.asarray(h_hat_mmse, dtype=complex)
    return ConditionalStats(_norm(h_hat) + 0j, residual_variance(params))


# names matching the operation list
lemma1_conditional_stats = ls_conditional_stats
lemma2_conditional_stats = mmse_conditional_stats
