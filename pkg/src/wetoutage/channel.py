"""System parameters and channel models.

The channel from an M-antenna array to a single-antenna node is
``h ~ CN(mu, cov)``.  Supported families:

``iid_rayleigh``
    ``mu = 0``, ``cov = beta I``.
``inid_rayleigh``
    ``mu = 0``, ``cov = diag(betas)``.
``rician``
    ``mu = sqrt(beta K/(K+1)) h_d`` with ``h_d`` the ULA line-of-sight
    vector, ``cov = beta/(K+1) I``.  ``K = 0`` gives i.i.d. Rayleigh.
``correlated_rayleigh``
    ``mu = 0``, ``cov = beta R`` with the exponential correlation model.
``correlated_rician``
    Line-of-sight mean plus ``beta/(K+1) R``.  Simulation only.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError
from .rng import standard_complex_normal

FAMILIES = ("iid_rayleigh", "inid_rayleigh", "rician", "correlated_rayleigh", "correlated_rician")


def db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0) if np.ndim(db) else 10.0 ** (float(db) / 10.0)


def linear_to_db(x):
    return 10.0 * np.log10(x)


@dataclass(frozen=True)
class SystemParams:
    """Scalar link parameters.  Energies in joules, gains linear.

    Defaults are the nominal operating point used throughout: 10 nJ pilot,
    1 mJ downlink, 100 nJ processing energy, 50% harvesting efficiency,
    N0 = 1e-20 J, beta = -50 dB, broadside angle pi/3, half-wavelength
    spacing.

    ``alphas=None`` means all line-of-sight gains equal one, which keeps
    the parameters valid when ``M`` is changed with :meth:`replace`.
    """

    M: int = 1
    E_u: float = 1e-8
    E_d: float = 1e-3
    E_p: float = 1e-7
    eta: float = 0.5
    N0: float = 1e-20
    beta: float = 1e-5
    K: float = 0.0
    rho: Optional[float] = None
    alphas: Optional[tuple] = None
    phi: float = math.pi / 3
    d_over_lambda: float = 0.5
    r: complex = 0.0

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise DomainError(f"M must be a positive integer, got {self.M}")
        object.__setattr__(self, "M", int(self.M))
        for name in ("E_u", "E_d", "E_p", "N0", "beta"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be positive and finite, got {v}")
        if not (0 < self.eta <= 1):
            raise DomainError(f"eta must lie in (0, 1], got {self.eta}")
        if not (np.isfinite(self.K) and self.K >= 0):
            raise DomainError(f"K must be >= 0, got {self.K}")
        if self.rho is not None and not (np.isfinite(self.rho) and self.rho > 0):
            raise DomainError(f"rho must be positive, got {self.rho}")
        if abs(self.r) > 1:
            raise DomainError(f"|r| must not exceed 1, got {self.r}")
        if self.alphas is not None:
            al = tuple(float(a) for a in self.alphas)
            if len(al) != self.M:
                raise DomainError(f"len(alphas)={len(al)} does not match M={self.M}")
            if any(not (a > 0) for a in al):
                raise DomainError("alphas must be positive")
            object.__setattr__(self, "alphas", al)

    @property
    def alpha_array(self) -> np.ndarray:
        if self.alphas is None:
            return np.ones(self.M)
        return np.asarray(self.alphas, dtype=float)

    @property
    def alpha_sum(self) -> float:
        return float(self.M) if self.alphas is None else math.fsum(self.alphas)

    @property
    def beta_db(self) -> float:
        return 10.0 * math.log10(self.beta)

    @property
    def threshold(self) -> float:
        """Outage threshold ``E_u + E_p`` on the harvested energy."""
        return self.E_u + self.E_p

    def replace(self, **changes) -> "SystemParams":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class FadingSpec:
    """Statistical channel description ``h ~ CN(mu, cov)``."""

    family: str
    mu: np.ndarray
    cov: np.ndarray
    betas: Optional[tuple] = None
    _factor: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown fading family {self.family!r}")
        mu = np.asarray(self.mu, dtype=complex)
        cov = np.asarray(self.cov, dtype=complex)
        if cov.shape != (mu.size, mu.size):
            raise DomainError("cov must be M x M with M = len(mu)")
        if not np.allclose(cov, cov.conj().T, rtol=0, atol=1e-12 * max(1e-300, np.abs(cov).max(initial=0))):
            raise DomainError("cov must be Hermitian")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "cov", cov)

    @property
    def M(self) -> int:
        return self.mu.size

    @property
    def factor(self) -> np.ndarray:
        """Matrix ``A`` with ``A A^H = cov`` (cached)."""
        if self._factor is None:
            object.__setattr__(self, "_factor", covariance_factor(self.cov))
        return self._factor

    @property
    def is_scaled_identity(self) -> bool:
        d = np.diag(self.cov)
        off = self.cov - np.diag(d)
        return bool(np.all(off == 0) and np.all(d == d[0]))


def covariance_factor(cov) -> np.ndarray:
    """Factor a Hermitian PSD matrix as ``A A^H``.

    Cholesky is tried first; semi-definite inputs (for example a fully
    correlated array) fall back to an eigen-decomposition with tiny
    negative eigenvalues clipped to zero.

    Raises
    ------
    DomainError
        If ``cov`` has an eigenvalue below ``-1e-10 * max|eig|``.
    """
    cov = np.asarray(cov, dtype=complex)
    d = np.diag(cov).real
    if np.all(cov - np.diag(np.diag(cov)) == 0):
        if np.any(d < 0):
            raise DomainError("covariance has negative variances")
        return np.diag(np.sqrt(d)).astype(complex)
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        pass
    w, v = np.linalg.eigh(cov)
    scale = max(np.abs(w).max(), 1e-300)
    if w.min() < -1e-10 * scale:
        raise DomainError(f"covariance is not positive semi-definite (min eig {w.min():.3g})")
    return v * np.sqrt(np.clip(w, 0.0, None))[None, :]


def steering_vector(M: int, alphas: Optional[Sequence[float]] = None, phi: float = math.pi / 3,
                    d_over_lambda: float = 0.5) -> np.ndarray:
    """Line-of-sight vector ``[sqrt(a_0), sqrt(a_1) e^{j theta_1}, ...]``.

    ``theta_i = 2 pi d_over_lambda i cos(phi)``; the spacing is measured in
    wavelengths.
    """
    if M < 1:
        raise DomainError("M must be >= 1")
    al = np.ones(M) if alphas is None else np.asarray(alphas, dtype=float)
    if al.size != M:
        raise DomainError("len(alphas) must equal M")
    theta = 2.0 * np.pi * d_over_lambda * np.arange(M) * np.cos(phi)
    return np.sqrt(al) * np.exp(1j * theta)


def exp_correlation_matrix(M: int, r: complex) -> np.ndarray:
    """Exponential correlation matrix, ``R[i, j] = r^(j-i)`` for ``i <= j``.

    The lower triangle holds the conjugates, so ``R`` is Hermitian Toeplitz
    with unit diagonal.
    """
    if abs(r) > 1:
        raise DomainError(f"|r| must not exceed 1, got {r}")
    i = np.arange(M)
    diff = i[None, :] - i[:, None]
    rc = complex(r)
    with np.errstate(invalid="ignore"):
        upper = np.power(rc, np.abs(diff).astype(float))
    upper = np.where(np.abs(diff) == 0, 1.0 + 0j, upper)
    R = np.where(diff >= 0, upper, np.conj(upper))
    if rc.imag == 0:
        return R.real.astype(float)
    return R


def rician_spec(params: SystemParams) -> FadingSpec:
    """Rician channel: LoS mean with scattered part ``beta/(K+1) I``."""
    K = params.K
    M = params.M
    if K == 0:
        return FadingSpec("rician", np.zeros(M, complex), params.beta * np.eye(M))
    hd = steering_vector(M, params.alphas, params.phi, params.d_over_lambda)
    mu = math.sqrt(params.beta * K / (K + 1.0)) * hd
    return FadingSpec("rician", mu, params.beta / (K + 1.0) * np.eye(M))


def iid_rayleigh_spec(params: SystemParams) -> FadingSpec:
    return FadingSpec("iid_rayleigh", np.zeros(params.M, complex), params.beta * np.eye(params.M))


def inid_rayleigh_spec(betas: Sequence[float]) -> FadingSpec:
    b = np.asarray(betas, dtype=float)
    if np.any(b <= 0):
        raise DomainError("betas must be positive")
    return FadingSpec("inid_rayleigh", np.zeros(b.size, complex), np.diag(b), betas=tuple(b))


def correlated_spec(params: SystemParams) -> FadingSpec:
    """Exponentially correlated channel; Rician mean added when ``K > 0``."""
    R = exp_correlation_matrix(params.M, params.r)
    if params.K == 0:
        return FadingSpec("correlated_rayleigh", np.zeros(params.M, complex), params.beta * R)
    K = params.K
    hd = steering_vector(params.M, params.alphas, params.phi, params.d_over_lambda)
    mu = math.sqrt(params.beta * K / (K + 1.0)) * hd
    return FadingSpec("correlated_rician", mu, params.beta / (K + 1.0) * R)


def fading_spec(params: SystemParams, fading: str, betas: Optional[Sequence[float]] = None) -> FadingSpec:
    """Build the spec for a scenario fading label.

    ``fading`` is one of ``rayleigh``, ``rician``, ``inid`` or
    ``correlated``.
    """
    if fading == "rayleigh":
        return iid_rayleigh_spec(params)
    if fading == "rician":
        return rician_spec(params)
    if fading == "inid":
        if betas is None:
            raise DomainError("i.n.i.d. fading needs per-antenna betas")
        if len(betas) != params.M:
            raise DomainError("len(betas) must equal M")
        return inid_rayleigh_spec(betas)
    if fading == "correlated":
        return correlated_spec(params)
    raise DomainError(f"unknown fading {fading!r}")


def sample_channel(spec: FadingSpec, rng, n: Optional[int] = None) -> np.ndarray:
    """Draw ``h = mu + A z`` with ``A A^H = cov`` and ``z ~ CN(0, I)``.

    Returns shape ``(M,)`` when ``n`` is None, else ``(n, M)``.
    """
    shape = (spec.M,) if n is None else (n, spec.M)
    z = standard_complex_normal(rng, shape)
    return channel_from_normals(spec, z)


def channel_from_normals(spec: FadingSpec, z: np.ndarray) -> np.ndarray:
    """Apply the spec's mean and covariance factor to standard normals."""
    if spec.is_scaled_identity:
        return spec.mu + math.sqrt(spec.cov[0, 0].real) * z
    A = spec.factor
    if np.all(A - np.diag(np.diag(A)) == 0):
        return spec.mu + z * np.diag(A)
    return spec.mu + matvec_rows(A, z)


def matvec_rows(A, z) -> np.ndarray:
    """``A @ z_i`` for every row ``z_i`` of ``z``.

    Accumulates one column at a time in a fixed order, so each row's
    result is independent of how many rows are processed together (a
    BLAS product may block differently for different batch sizes).
    """
    z = np.asarray(z)
    out = np.zeros(z.shape[:-1] + (A.shape[0],), dtype=complex)
    for j in range(A.shape[1]):
        out += z[..., j:j + 1] * A[:, j]
    return out
