"""Analytic outage probabilities.

Each function returns an :class:`OutageEstimate`.  Three evaluation
methods occur:

``closed_form``
    Finite expressions.  Those that involve heavy cancellation (the
    Laguerre sum for estimated Rayleigh channels, the adaptive-power sums
    and the i.n.i.d. partial fractions) are evaluated in decimal arithmetic
    at increasing precision until two precisions agree to 1e-13 relative.
``quadrature``
    One-dimensional integrals over the (scaled) estimate norm, integrated
    with adaptive Gauss-Kronrod in the CDF form ``int f(y) (1 - Q_1) dy``
    so that small outage probabilities are not lost to ``1 - (1 - p)``.
``expectation_mc``
    Expectations over the LS estimate, whose Gaussian law is known
    exactly; sampled, with a reported standard error.

Notation: ``thr = (E_u + E_p)/(eta beta E_d)`` is the outage threshold on
``||h||^2 / beta`` for fixed downlink energy, ``S = sum(alphas)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Callable, Optional, Sequence

import numpy as np

from . import specfun
from .channel import SystemParams, rician_spec
from .errors import (DomainError, FormulaInvalidError, IllConditionedError,
                     NoClosedFormError, NumericalError)
from .quadrature import integrate
from .rng import make_rng, standard_complex_normal

CSI_KINDS = ("perfect", "ls", "mmse")
FADINGS = ("rayleigh", "rician", "inid", "correlated")
POWERS = ("fixed", "adapt")
METHODS = ("closed_form", "quadrature", "expectation_mc", "protocol_mc")

DEFAULT_OUTER = 200_000
_OUTER_CHUNK = 50_000
INID_MIN_GAP = 1e-6


@dataclass(frozen=True)
class ScenarioSpec:
    """Which estimator, fading family and downlink power rule to evaluate."""

    csi: str = "perfect"
    fading: str = "rayleigh"
    power: str = "fixed"

    def __post_init__(self):
        if self.csi not in CSI_KINDS:
            raise DomainError(f"csi must be one of {CSI_KINDS}, got {self.csi!r}")
        if self.fading not in FADINGS:
            raise DomainError(f"fading must be one of {FADINGS}, got {self.fading!r}")
        if self.power not in POWERS:
            raise DomainError(f"power must be one of {POWERS}, got {self.power!r}")


@dataclass(frozen=True)
class OutageEstimate:
    """An outage probability with its provenance.

    ``std_err`` is zero for deterministic methods.  ``status`` is
    ``"below_resolution"`` for simulations with fewer than 20 outages.
    """

    p: float
    method: str
    std_err: float = 0.0
    n_samples: int = 0
    n_outages: Optional[int] = None
    status: str = "ok"

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}")
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"p out of [0, 1]: {self.p}")
        if self.method in ("closed_form", "quadrature") and self.std_err != 0:
            raise DomainError("deterministic methods carry no standard error")
        if self.std_err < 0:
            raise DomainError("std_err must be nonnegative")

    @property
    def deterministic(self) -> bool:
        return self.method in ("closed_form", "quadrature")


def _closed(p) -> OutageEstimate:
    return OutageEstimate(specfun.clamp_probability(p), "closed_form")


# -- decimal evaluation with certified precision ---------------------------

def certify(evaluate: Callable[[], Decimal], what: str, rtol: float = 1e-13,
            start: int = 40, max_prec: int = 6000) -> float:
    """Run ``evaluate`` at rising decimal precision until it stabilises.

    ``evaluate`` is called inside a decimal context of precision ``p`` and
    again at ``p + 20``; when both agree to ``rtol`` the second value is
    returned as a float.  Otherwise the precision doubles.

    Raises
    ------
    NumericalError
        When ``max_prec`` digits do not suffice.
    """
    prec = start
    while prec <= max_prec:
        with localcontext() as ctx:
            ctx.prec = prec
            lo = evaluate()
        with localcontext() as ctx:
            ctx.prec = prec + 20
            hi = evaluate()
        if lo == hi or abs(lo - hi) <= Decimal(rtol) * abs(hi):
            return float(hi)
        prec *= 2
    raise NumericalError(f"{what}: cannot certify 12 significant digits within {max_prec} digits")


def _dec(*values):
    return [Decimal(float(v)) for v in values]


# -- perfect CSI -------------------------------------------------------------

def outage_perfect_rician_fixed(params: SystemParams) -> OutageEstimate:
    """Perfect CSI, fixed ``E_d``: ``1 - Q_M(sqrt(2 K S), sqrt(2 (K+1) thr))``.

    For ``K = 0`` this is the regularized lower incomplete gamma function
    ``P(M, thr)``, which is what is evaluated in that case.
    """
    M, K = params.M, params.K
    thr = params.threshold / (params.eta * params.beta * params.E_d)
    if K == 0:
        return _closed(specfun.regularized_lower_gamma(M, thr))
    a = math.sqrt(2.0 * K * params.alpha_sum)
    b = math.sqrt(2.0 * (K + 1.0) * thr)
    return _closed(specfun.marcum_q_complement(M, a, b))


def outage_perfect_adapt(params: SystemParams) -> OutageEstimate:
    """Perfect CSI with channel inversion: ``E_h = eta rho`` deterministically.

    Returns 0 when ``rho >= (E_u + E_p)/eta`` and 1 otherwise, for any
    fading law.
    """
    if params.rho is None:
        raise DomainError("power adaptation needs rho")
    return _closed(0.0 if params.rho >= params.threshold / params.eta else 1.0)


def outage_inid_perfect_fixed(betas: Sequence[float], params: SystemParams) -> OutageEstimate:
    """Perfect CSI, fixed ``E_d``, independent Rayleigh with distinct gains.

    ``||h||^2`` is a sum of exponentials with means ``beta_j``; its CDF is
    the partial-fraction (hypoexponential) form
    ``sum_j beta_j^(M-1) (1 - exp(-t/beta_j)) / prod_{k!=j} (beta_j - beta_k)``
    with ``t = (E_u + E_p)/(eta E_d)``.

    Raises
    ------
    IllConditionedError
        If two gains are within a relative gap of 1e-6 of each other.
    """
    b = [float(x) for x in betas]
    if len(b) != params.M:
        raise DomainError(f"expected {params.M} betas, got {len(b)}")
    if any(not x > 0 for x in b):
        raise DomainError("betas must be positive")
    srt = sorted(b)
    for lo, hi in zip(srt, srt[1:]):
        if (hi - lo) <= INID_MIN_GAP * hi:
            raise IllConditionedError(
                f"betas {lo:.6g} and {hi:.6g} are too close for the partial-fraction form; "
                "perturb them or use simulation")
    t = params.threshold / (params.eta * params.E_d)

    def ev():
        bd = _dec(*b)
        (td,) = _dec(t)
        total = Decimal(0)
        for j, bj in enumerate(bd):
            den = Decimal(1)
            for k, bk in enumerate(bd):
                if k != j:
                    den *= bj - bk
            total += bj ** (len(bd) - 1) * (1 - (-td / bj).exp()) / den
        return total

    return _closed(certify(ev, "i.n.i.d. outage"))


# -- Rayleigh with estimated CSI -------------------------------------------

def outage_rayleigh_est_fixed(params: SystemParams) -> OutageEstimate:
    """LS or MMSE estimate, Rayleigh fading, fixed ``E_d`` (identical for both).

    ``1 - c exp(-thr) sum_{k<M} eps_k r^k L_k(x)`` with
    ``c = beta E_u/(beta E_u + N0)``, ``r = N0/(beta E_u + N0)``,
    ``x = -E_u (E_u + E_p)/(eta E_d N0)``, ``eps_k = 1`` except
    ``eps_{M-1} = 1 + N0/(beta E_u)``.  The scaled polynomials
    ``r^k L_k(x)`` follow the three-term recurrence.
    """
    M = params.M

    def ev():
        Eu, Ed, Ep, eta, N0, beta = _dec(params.E_u, params.E_d, params.E_p,
                                         params.eta, params.N0, params.beta)
        bE = beta * Eu
        r = N0 / (bE + N0)
        x = -(Eu * (Eu + Ep)) / (eta * Ed * N0)
        thr = (Eu + Ep) / (eta * beta * Ed)
        g_prev, g = Decimal(0), Decimal(1)
        s = Decimal(0)
        for k in range(M):
            s += g * (1 + N0 / bE) if k == M - 1 else g
            # r^{k+1} L_{k+1} = r ((2k+1-x) r^k L_k - k r r^{k-1} L_{k-1}) / (k+1)
            g_prev, g = g, r * ((2 * k + 1 - x) * g - k * r * g_prev) / (k + 1)
        return 1 - bE / (bE + N0) * (-thr).exp() * s

    return _closed(certify(ev, "estimated-CSI Rayleigh outage"))


def _chi_form(M: int, A: Decimal, B: Decimal, P: Decimal) -> Decimal:
    """``1 - 2 P^M/(M-1)! int y^(2M-1) exp(-P y^2) Q_1(a y, b y) dy``, ``b <= a``.

    Inputs are ``A = a^2``, ``B = b^2`` and ``P``.  Written with
    ``kappa = b/a``, ``mu = a b / P``, ``v2 = (2P + A + B)/(2ab)``,
    ``z2 = v2 - sqrt(v2^2 - 1)`` (formed as ``1/(v2 + sqrt(v2^2 - 1))``)
    and ``z1 = min(kappa, 1/kappa)``; the trailing
    ``z1 (kappa - z1)/(1 - z1^2)`` term vanishes for ``kappa <= 1``.
    """
    ab = (A * B).sqrt()
    kap = (B / A).sqrt()
    mu = ab / P
    v2 = (2 * P + A + B) / (2 * ab)
    z2 = 1 / (v2 + (v2 * v2 - 1).sqrt())
    z2sq = z2 * z2
    q = 1 - z2sq
    ratio = q / z2sq
    total = Decimal(0)
    for n in range(1, M + 1):
        inner = Decimal(0)
        rc = Decimal(1)
        for c in range(n):
            inner += math.comb(2 * n - c - 2, n - 1) * rc * (kap * math.comb(n - 1, c) - z2 * math.comb(n, c))
            rc *= ratio
        total += (2 / mu) ** (n - 1) * z2 ** (3 * n - 2) / q ** (2 * n - 1) * inner
    z1 = min(kap, 1 / kap)
    if z1 != kap and z1 != 1:
        total -= z1 * (kap - z1) / (1 - z1 * z1)
    return total


def ls_adapt_min_rho(params: SystemParams) -> float:
    """Smallest ``rho`` for which the LS Rayleigh adaptive closed form holds."""
    bE = params.beta * params.E_u
    return params.threshold / params.eta * ((bE + params.N0) / bE) ** 2


def outage_ls_rayleigh_adapt(params: SystemParams) -> OutageEstimate:
    """LS estimate, Rayleigh fading, ``E_d = rho/||h_hat||^2``.

    Valid only for ``rho >= (E_u+E_p)/eta ((beta E_u + N0)/(beta E_u))^2``.

    Raises
    ------
    FormulaInvalidError
        Below that bound; simulate the scenario instead.
    """
    if params.rho is None:
        raise DomainError("power adaptation needs rho")
    bound = ls_adapt_min_rho(params)
    if params.rho < bound:
        raise FormulaInvalidError(
            f"rho={params.rho:.6g} is below {bound:.6g}, where the LS adaptive closed form "
            "does not apply; use simulation")

    def ev():
        Eu, Ep, eta, N0, beta, rho = _dec(params.E_u, params.E_p, params.eta,
                                          params.N0, params.beta, params.rho)
        bE = beta * Eu
        A = 2 * Eu / N0 * bE / (bE + N0)
        B = 2 * (bE + N0) / N0 * (Eu + Ep) / (eta * beta * rho)
        P = Eu / (bE + N0)
        if B > A:                      # decimal rounding at the exact bound
            B = A
        return _chi_form(params.M, A, B, P)

    return _closed(certify(ev, "LS adaptive outage"))


def outage_mmse_rayleigh_adapt(params: SystemParams) -> OutageEstimate:
    """MMSE estimate, Rayleigh fading, ``E_d = rho/||h_hat||^2``.

    Valid for ``rho >= (E_u + E_p)/eta``.

    Raises
    ------
    FormulaInvalidError
        Below that bound; simulate the scenario instead.
    """
    if params.rho is None:
        raise DomainError("power adaptation needs rho")
    bound = params.threshold / params.eta
    if params.rho < bound:
        raise FormulaInvalidError(
            f"rho={params.rho:.6g} is below {bound:.6g}, where the MMSE adaptive closed form "
            "does not apply; use simulation")

    def ev():
        Eu, Ep, eta, N0, beta, rho = _dec(params.E_u, params.E_p, params.eta,
                                          params.N0, params.beta, params.rho)
        bE = beta * Eu
        A = 2 * (bE + N0) / (beta * N0)
        B = A * (Eu + Ep) / (eta * rho)
        P = (bE + N0) / (beta * bE)
        if B > A:
            B = A
        return _chi_form(params.M, A, B, P)

    return _closed(certify(ev, "MMSE adaptive outage"))


# -- Rician, MMSE: single integrals -----------------------------------------

def _lambdas(params: SystemParams):
    bE = params.beta * params.E_u
    kn = (params.K + 1.0) * params.N0
    return (bE + kn) / bE, 2.0 * (bE + kn) / params.N0


def mmse_norm_log_density(y, params: SystemParams):
    """Log density of ``Y = ||h_hat_MMSE|| / sqrt(beta)`` for ``K > 0``.

    ``Y`` is the norm of a complex Gaussian vector with mean norm
    ``sqrt(K S/(K+1))`` and per-entry variance ``1/((K+1) Lambda_1)``,
    ``Lambda_1 = (beta E_u + (K+1) N0)/(beta E_u)``.  The Bessel factor is
    used in its exponentially scaled form.
    """
    M, K, S = params.M, params.K, params.alpha_sum
    lam1, _ = _lambdas(params)
    y = np.asarray(y, dtype=float)
    ks = K * S
    z = 2.0 * lam1 * math.sqrt(ks * (K + 1.0)) * y
    with np.errstate(divide="ignore"):
        out = (math.log(2.0 * lam1) + 0.5 * (M + 1) * math.log1p(K) - 0.5 * (M - 1) * math.log(ks)
               + M * np.log(y) - lam1 * (math.sqrt(ks) - math.sqrt(K + 1.0) * y) ** 2
               + specfun.log_bessel_i_scaled(M - 1, z))
    return out


def _mmse_rician_integral(params: SystemParams, log_cdf, step=None, epsrel=1e-10) -> float:
    """``int_0^inf f_Y(y) F(y) dy`` with ``F`` given through ``log_cdf``.

    The support is located on a coarse grid as the region where the log
    integrand is within 60 nats of its maximum.  ``step`` optionally names
    a point ``(centre, width)`` where ``F`` drops sharply; breakpoints are
    placed around it.
    """
    M, K, S = params.M, params.K, params.alpha_sum
    lam1, _ = _lambdas(params)
    ymax = (math.sqrt(K * S) + (math.sqrt(2.0 * M) + 40.0) / math.sqrt(lam1)) / math.sqrt(K + 1.0)
    if step is not None:
        ymax = max(ymax, step[0] + 40.0 * step[1])

    def log_integrand(y):
        return mmse_norm_log_density(y, params) + log_cdf(y)

    grid = np.linspace(0.0, ymax, 4097)[1:]
    lg = log_integrand(grid)
    peak = np.max(lg)
    if not np.isfinite(peak):
        raise NumericalError("integrand vanishes on the search grid")
    keep = np.flatnonzero(lg > peak - 60.0)
    h = grid[1] - grid[0]
    lo = max(0.0, grid[keep[0]] - h)
    hi = min(ymax, grid[keep[-1]] + h)
    edges = list(np.linspace(lo, hi, 17))
    if step is not None:
        c, w = step
        for k in (-30.0, -8.0, -3.0, 0.0, 3.0, 8.0, 30.0):
            t = c + k * w
            if lo < t < hi:
                edges.append(t)
    edges.append(grid[np.argmax(lg)])
    edges = sorted(e for e in edges if lo <= e <= hi)

    def f(y):
        out = np.zeros_like(y)
        pos = y > 0
        out[pos] = np.exp(log_integrand(y[pos]))
        return out

    val, _ = integrate(f, edges, epsabs=1e-300, epsrel=epsrel)
    return val


def outage_mmse_rician_fixed(params: SystemParams) -> OutageEstimate:
    """MMSE estimate, Rician fading (``K > 0``), fixed ``E_d``.

    ``int f_Y(y) (1 - Q_1(sqrt(L2) y, sqrt(L2 thr))) dy`` with
    ``L2 = 2 (beta E_u + (K+1) N0)/N0``.  ``K = 0`` is routed to the
    Rayleigh closed form.
    """
    if params.K == 0:
        return outage_rayleigh_est_fixed(params)
    _, lam2 = _lambdas(params)
    thr = params.threshold / (params.eta * params.beta * params.E_d)
    sl = math.sqrt(lam2)
    b = sl * math.sqrt(thr)

    def log_cdf(y):
        return specfun.log_marcum_q_complement(1, sl * y, b)

    val = _mmse_rician_integral(params, log_cdf, step=(math.sqrt(thr), 1.0 / sl))
    return OutageEstimate(specfun.clamp_probability(val, tol=1e-8), "quadrature")


def outage_mmse_rician_adapt(params: SystemParams) -> OutageEstimate:
    """MMSE estimate, Rician fading (``K > 0``), ``E_d = rho/||h_hat||^2``.

    Both Marcum-Q arguments scale with ``y``:
    ``int f_Y(y) (1 - Q_1(sqrt(L2) y, kappa sqrt(L2) y)) dy`` with
    ``kappa^2 = (E_u + E_p)/(eta rho)``.  ``K = 0`` is routed to the
    Rayleigh closed form.
    """
    if params.rho is None:
        raise DomainError("power adaptation needs rho")
    if params.K == 0:
        return outage_mmse_rayleigh_adapt(params)
    _, lam2 = _lambdas(params)
    sl = math.sqrt(lam2)
    kap = math.sqrt(params.threshold / (params.eta * params.rho))

    def log_cdf(y):
        return specfun.log_marcum_q_complement(1, sl * y, kap * sl * y)

    val = _mmse_rician_integral(params, log_cdf)
    return OutageEstimate(specfun.clamp_probability(val, tol=1e-8), "quadrature")


# -- Rician, LS: expectations over the estimate ---------------------------

def ls_noncentrality(h_hat, params: SystemParams, mu=None):
    """Noncentrality of the normalized beam gain given the LS estimate.

    With ``D = beta E_u + (K+1) N0`` and ``g = h_hat^H mu``::

        2 (beta E_u ||h_hat||^2 + Re(g) (K+1) N0)^2 / (beta N0 D ||h_hat||^2)
        + 2 N0 (K+1)^2 / (beta D) (Im(g)/||h_hat||)^2
    """
    h_hat = np.asarray(h_hat, dtype=complex)
    if mu is None:
        mu = rician_spec(params).mu
    b, K, Eu, N0 = params.beta, params.K, params.E_u, params.N0
    D = b * Eu + (K + 1.0) * N0
    n2 = np.sum(h_hat.real ** 2 + h_hat.imag ** 2, axis=-1)
    g = np.sum(h_hat.conj() * mu, axis=-1)
    first = 2.0 * (b * Eu * n2 + g.real * (K + 1.0) * N0) ** 2 / (b * N0 * D * n2)
    second = 2.0 * N0 * (K + 1.0) ** 2 / (b * D) * g.imag ** 2 / n2
    return first + second


def _ls_expectation(params: SystemParams, n_outer: int, seed: int, b_of_norm) -> OutageEstimate:
    if n_outer < 2:
        raise DomainError("n_outer must be at least 2")
    spec = rician_spec(params)
    K, Eu, N0, beta = params.K, params.E_u, params.N0, params.beta
    sd = math.sqrt((beta * Eu + (K + 1.0) * N0) / (Eu * (K + 1.0)))
    rng = make_rng(seed)
    total = 0.0
    total2 = 0.0
    done = 0
    while done < n_outer:
        n = min(_OUTER_CHUNK, n_outer - done)
        h_hat = spec.mu + sd * standard_complex_normal(rng, (n, params.M))
        zeta = ls_noncentrality(h_hat, params, spec.mu)
        nrm = np.linalg.norm(h_hat, axis=-1)
        vals = np.exp(specfun.log_marcum_q_complement(1, np.sqrt(zeta), b_of_norm(nrm)))
        total += math.fsum(vals)
        total2 += math.fsum(vals * vals)
        done += n
    mean = total / n_outer
    var = max(total2 / n_outer - mean * mean, 0.0) * n_outer / (n_outer - 1)
    return OutageEstimate(specfun.clamp_probability(mean), "expectation_mc",
                          std_err=math.sqrt(var / n_outer), n_samples=n_outer)


def outage_ls_rician_fixed(params: SystemParams, n_outer: int = DEFAULT_OUTER, seed: int = 0) -> OutageEstimate:
    """LS estimate, Rician fading, fixed ``E_d``.

    ``E[1 - Q_1(sqrt(zeta(h_hat)), b)]`` over
    ``h_hat ~ CN(mu, (beta E_u + (K+1) N0)/(E_u (K+1)) I)`` with
    ``b^2 = 2 (E_u+E_p)(beta E_u + (K+1) N0)/(eta beta E_d N0)``.
    ``K = 0`` is routed to the Rayleigh closed form.
    """
    if params.K == 0:
        return outage_rayleigh_est_fixed(params)
    K = params.K
    b = math.sqrt(2.0 * params.threshold * (params.beta * params.E_u + (K + 1.0) * params.N0)
                  / (params.eta * params.beta * params.E_d * params.N0))
    return _ls_expectation(params, n_outer, seed, lambda nrm: np.full_like(nrm, b))


def outage_ls_rician_adapt(params: SystemParams, n_outer: int = DEFAULT_OUTER, seed: int = 0) -> OutageEstimate:
    """LS estimate, Rician fading, ``E_d = rho/||h_hat||^2``.

    As the fixed case with the threshold argument ``c ||h_hat||``,
    ``c^2 = 2 (E_u+E_p)(beta E_u + (K+1) N0)/(eta beta rho N0)``.
    ``K = 0`` is routed to the Rayleigh closed form.
    """
    if params.rho is None:
        raise DomainError("power adaptation needs rho")
    if params.K == 0:
        return outage_ls_rayleigh_adapt(params)
    K = params.K
    c = math.sqrt(2.0 * params.threshold * (params.beta * params.E_u + (K + 1.0) * params.N0)
                  / (params.eta * params.beta * params.rho * params.N0))
    return _ls_expectation(params, n_outer, seed, lambda nrm: c * nrm)


# -- dispatch -----------------------------------------------------------------

def analytic_outage(scenario: ScenarioSpec, params: SystemParams, betas=None,
                    n_outer: int = DEFAULT_OUTER, seed: int = 0) -> OutageEstimate:
    """Evaluate the analytic outage for ``scenario``.

    ``fading="rayleigh"`` forces ``K = 0``; ``"rician"`` with ``K = 0``
    uses the Rayleigh forms.

    Raises
    ------
    NoClosedFormError
        For correlated fading, and for i.n.i.d. fading other than perfect
        CSI.
    FormulaInvalidError
        For adaptive LS/MMSE Rayleigh requests below the validity bound.
    """
    if scenario.power == "adapt" and params.rho is None:
        raise DomainError("power=adapt needs rho")
    if scenario.power == "fixed" and params.rho is not None:
        raise DomainError("rho given with power=fixed")
    if scenario.fading == "correlated":
        raise NoClosedFormError("correlated fading has no closed form; use simulate")
    if scenario.fading == "inid":
        if scenario.csi == "perfect" and scenario.power == "adapt":
            return outage_perfect_adapt(params)
        if scenario.csi == "perfect":
            if betas is None:
                raise DomainError("i.n.i.d. fading needs per-antenna betas")
            return outage_inid_perfect_fixed(betas, params)
        raise NoClosedFormError("i.n.i.d. fading with estimated CSI has no closed form; use simulate")
    if scenario.fading == "rayleigh" and params.K != 0:
        params = params.replace(K=0.0)
    if scenario.csi == "perfect":
        if scenario.power == "adapt":
            return outage_perfect_adapt(params)
        return outage_perfect_rician_fixed(params)
    if scenario.power == "fixed":
        if params.K == 0:
            return outage_rayleigh_est_fixed(params)
        if scenario.csi == "ls":
            return outage_ls_rician_fixed(params, n_outer, seed)
        return outage_mmse_rician_fixed(params)
    if scenario.csi == "ls":
        return outage_ls_rician_adapt(params, n_outer, seed)
    return outage_mmse_rician_adapt(params)
