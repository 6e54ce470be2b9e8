"""Regenerate tests/data/oracles.json from the independent references.

Run from the repository root::

    python tests/make_oracle_data.py

Takes a few minutes (the estimated-CSI Rayleigh references are nested
mpmath quadratures).  Nothing here imports the package.
"""

import json
import math
import os
import sys

import mpmath as mp
import numpy as np
from scipy import integrate, stats

sys.path.insert(0, os.path.dirname(__file__))
import oracles as O  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "data", "oracles.json")
SEED = 20240601

# nominal link, matching the package defaults
BASE = dict(M=1, E_u=1e-8, E_d=1e-3, E_p=1e-7, eta=0.5, N0=1e-20, beta=1e-5)


def _f(x):
    return float(mp.mpf(x))


def marcum_points(rng, n=100):
    orders = [1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128]
    pts = []
    while len(pts) < n:
        m = orders[len(pts) % len(orders)]
        kind = rng.integers(4)
        a = [0.0, 10 ** rng.uniform(-2, 0), 10 ** rng.uniform(0, 1), 10 ** rng.uniform(1, 1.7)][kind]
        centre = a * a + 2 * m
        z = rng.uniform(-4, 9)
        b2 = centre + z * 2 * math.sqrt(a * a + m)
        if b2 <= 0:
            b2 = centre * 10 ** rng.uniform(-3, -0.5)
        b = math.sqrt(b2)
        q = O.marcum_q_series(m, a, b)
        qc = O.marcum_q_complement_series(m, a, b)
        if min(q, qc) < mp.mpf("1e-280"):
            continue
        # second, unrelated reference: density quadrature
        q2 = O.marcum_q_quad(m, a, b) if q < qc else None
        qc2 = O.marcum_q_complement_quad(m, a, b) if qc <= q else None
        if q2 is not None:
            assert abs(q2 - q) <= mp.mpf("1e-25") * q, (m, a, b)
        if qc2 is not None:
            assert abs(qc2 - qc) <= mp.mpf("1e-25") * qc, (m, a, b)
        pts.append(dict(m=m, a=a, b=b, q=_f(q), qc=_f(qc)))
    return pts


def gamma_points(rng, n=50):
    pts = []
    for i in range(n):
        m = int(round(10 ** (i / (n - 1) * math.log10(128))))
        x = m * 10 ** rng.uniform(-1.5, 0.6)
        lo = O.gamma_lower_series(m, x)
        up = O.gamma_upper_series(m, x)
        assert abs(lo + up - 1) < mp.mpf("1e-35")
        pts.append(dict(m=m, x=x, lower=_f(lo), upper=_f(up)))
    return pts


def bessel_points(rng, n=50):
    pts = []
    for i in range(n):
        order = int(round(i / (n - 1) * 128))
        while True:
            x = 10 ** rng.uniform(-2, 3.5)
            v = O.bessel_i_scaled_series(order, x)
            if v > mp.mpf("1e-280"):
                break
        with mp.workdps(40):
            alt = mp.besseli(order, x) * mp.exp(-x)
        assert abs(alt - v) <= mp.mpf("1e-30") * v
        pts.append(dict(n=order, x=x, value=_f(v)))
    return pts


def rayleigh_est_fixed_points():
    O.DPS = 20
    cases = [dict(M=20), dict(M=1, E_u=1e-14), dict(M=8, E_u=1e-16, E_d=3e-2),
             dict(M=4, E_u=1e-15, E_d=1e-2)]
    out = []
    for c in cases:
        p = {**BASE, **c}
        v = O.rayleigh_est_fixed_integral(p["M"], p["E_u"], p["E_d"], p["E_p"], p["eta"], p["N0"], p["beta"])
        out.append(dict(params=c, p=_f(v)))
    O.DPS = 40
    return out


def _quad(f, lo, hi, pts):
    v, _ = integrate.quad(f, lo, hi, points=pts, epsabs=0, epsrel=1e-12, limit=1000)
    return v


def _ncx2_cdf(x, df, nc):
    return stats.ncx2.cdf(x, df, nc) if nc > 0 else stats.chi2.cdf(x, df)


def adapt_rayleigh_reference(kind, M, E_u, E_p, eta, N0, beta, rho):
    """Adaptive downlink, i.i.d. Rayleigh, LS or MMSE: average over u = ||h_hat||^2.

    Given the estimate, psi ~ CN(c ||h_hat||, v) and outage is
    |psi|^2 <= t ||h_hat||^2 with t = (E_u + E_p)/(eta rho).
    """
    v = beta * N0 / (beta * E_u + N0)
    t = (E_u + E_p) / (eta * rho)
    if kind == "ls":
        s2, c = beta + N0 / E_u, beta * E_u / (beta * E_u + N0)
    else:
        s2, c = beta * beta * E_u / (beta * E_u + N0), 1.0
    # u = ||h_hat||^2 = s2 g, g ~ Gamma(M)
    f = lambda g: stats.gamma.pdf(g, M) * _ncx2_cdf(2 * t * s2 * g / v, 2, 2 * c * c * s2 * g / v)
    return _quad(f, 0, M + 60 * math.sqrt(M) + 60, [M / 4, M / 2, M, 2 * M])


def mmse_rician_reference(power, M, K, E_u, E_d, E_p, eta, N0, beta, rho=None):
    """MMSE estimate with a line-of-sight mean (unit gains), fixed or adaptive energy.

    h_hat ~ CN(mu, s2 I), s2 = beta^2 E_u / ((K+1)(beta E_u + (K+1) N0)),
    ||mu||^2 = beta K M/(K+1); psi ~ CN(||h_hat||, v).
    """
    v = beta * N0 / (beta * E_u + (K + 1) * N0)
    s2 = beta * beta * E_u / ((K + 1) * (beta * E_u + (K + 1) * N0))
    lam = 2 * beta * K * M / (K + 1) / s2
    # x = 2 ||h_hat||^2 / s2 ~ ncx2(2M, lam)
    if power == "fixed":
        t0 = (E_u + E_p) / (eta * E_d)
        g = lambda x: _ncx2_cdf(2 * t0 / v, 2, s2 * x / v)
    else:
        t = (E_u + E_p) / (eta * rho)
        g = lambda x: _ncx2_cdf(t * s2 * x / v, 2, s2 * x / v)
    f = lambda x: stats.ncx2.pdf(x, 2 * M, lam) * g(x) if lam > 0 else stats.chi2.pdf(x, 2 * M) * g(x)
    mean, sd = 2 * M + lam, math.sqrt(4 * M + 4 * lam)
    lo, hi = max(0.0, mean - 40 * sd), mean + 40 * sd
    pts = [p for p in (mean - 8 * sd, mean - 3 * sd, mean, mean + 3 * sd, mean + 8 * sd) if lo < p < hi]
    return _quad(f, lo, hi, pts)


def estimated_csi_points():
    out = []
    for kind in ("ls", "mmse"):
        for M, E_u, rho in [(1, 1e-8, 2.204e-7), (2, 1e-8, 2.204e-7), (4, 1e-8, 2.204e-7),
                            (8, 1e-8, 2.204e-7), (2, 1e-12, 3e-7), (4, 1e-11, 5e-7)]:
            p = {**BASE, "M": M, "E_u": E_u, "rho": rho}
            v = adapt_rayleigh_reference(kind, M, E_u, p["E_p"], p["eta"], p["N0"], p["beta"], rho)
            out.append(dict(cell=f"{kind}_rayleigh_adapt", params=dict(M=M, E_u=E_u, rho=rho), p=v))
    for M, K, E_u, E_d in [(4, 2.0, 1e-15, 1e-2), (8, 2.0, 1e-15, 1e-2), (20, 2.0, 1e-8, 1e-3),
                           (2, 4.0, 1e-14, 3e-3), (16, 1.0, 1e-8, 4e-4)]:
        p = {**BASE, "M": M, "K": K, "E_u": E_u, "E_d": E_d}
        v = mmse_rician_reference("fixed", M, K, E_u, E_d, p["E_p"], p["eta"], p["N0"], p["beta"])
        out.append(dict(cell="mmse_rician_fixed", params=dict(M=M, K=K, E_u=E_u, E_d=E_d), p=v))
    for M, K, E_u, rho in [(1, 2.0, 1e-8, 2.204e-7), (2, 2.0, 1e-8, 2.204e-7), (4, 2.0, 1e-8, 2.204e-7),
                           (2, 2.0, 1e-14, 4e-7)]:
        p = {**BASE, "M": M, "K": K, "E_u": E_u, "rho": rho}
        v = mmse_rician_reference("adapt", M, K, E_u, None, p["E_p"], p["eta"], p["N0"], p["beta"], rho)
        out.append(dict(cell="mmse_rician_adapt", params=dict(M=M, K=K, E_u=E_u, rho=rho), p=v))
    return out


def perfect_points():
    """Perfect CSI, fixed energy: Rician via the Marcum reference, i.n.i.d. via partial fractions."""
    out = []
    for M, K, E_d in [(1, 0.0, 1e-3), (20, 0.0, 1e-3), (4, 0.0, 1.1e-2), (20, 2.0, 1e-3),
                      (8, 2.0, 5e-3), (40, 4.0, 1e-3)]:
        p = {**BASE, "M": M, "K": K, "E_d": E_d}
        with mp.workdps(40):
            beta = mp.mpf(p["beta"])
            t = (mp.mpf(p["E_u"]) + mp.mpf(p["E_p"])) / (mp.mpf(p["eta"]) * mp.mpf(E_d))
            s = beta / (K + 1)
            if K == 0:
                v = mp.gammainc(M, 0, t / s, regularized=True)
            else:
                # ||h||^2 = (s/2) X with X ~ ncx2(2M, 2 ||mu||^2 / s), ||mu||^2 = beta K M/(K+1)
                a = mp.sqrt(2 * beta * K * M / (K + 1) / s)
                v = O.marcum_q_complement_series(M, a, mp.sqrt(2 * t / s))
        out.append(dict(cell="perfect_rician_fixed", params=dict(M=M, K=K, E_d=E_d), p=_f(v)))
    for M, E_d, spread in [(2, 1e-2, 3.0), (3, 1e-2, 3.0), (4, 1e-2, 3.0), (8, 4e-3, 3.0), (6, 5e-3, 6.0)]:
        p = {**BASE, "M": M, "E_d": E_d}
        betas = [p["beta"] * 10 ** (o / 10) for o in np.linspace(-spread, spread, M)]
        with mp.workdps(60):
            t = (mp.mpf(p["E_u"]) + mp.mpf(p["E_p"])) / (mp.mpf(p["eta"]) * mp.mpf(E_d))
            bs = [mp.mpf(b) for b in betas]
            v = mp.mpf(0)
            for i, bi in enumerate(bs):
                w = mp.mpf(1)
                for j, bj in enumerate(bs):
                    if j != i:
                        w *= bi / (bi - bj)
                v += w * -mp.expm1(-t / bi)
        out.append(dict(cell="inid_perfect_fixed", params=dict(M=M, E_d=E_d), betas=betas, p=_f(v)))
    return out


def main():
    rng = np.random.default_rng(SEED)
    data = dict(
        base=BASE,
        marcum=marcum_points(rng),
        gamma=gamma_points(rng),
        bessel=bessel_points(rng),
        perfect=perfect_points(),
        estimated=estimated_csi_points(),
        rayleigh_est_fixed=rayleigh_est_fixed_points(),
    )
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(data, fh, indent=1)
    print("wrote", OUT, {k: len(v) for k, v in data.items() if isinstance(v, list)})


if __name__ == "__main__":
    main()
