import math

import mpmath as mp
import numpy as np
import pytest
from scipy import special, stats

import oracles as O
from wetoutage import specfun as S
from wetoutage.errors import DomainError


def rel(a, b):
    return abs(a - b) / abs(b)


# -- frozen brute-force references -----------------------------------------

def test_marcum_matches_frozen_series(oracle_data):
    worst = 0.0
    for pt in oracle_data["marcum"]:
        q = S.marcum_q(pt["m"], pt["a"], pt["b"])
        qc = S.marcum_q_complement(pt["m"], pt["a"], pt["b"])
        worst = max(worst, rel(q, pt["q"]), rel(qc, pt["qc"]))
    assert worst < 1e-10


def test_marcum_vectorized_equals_scalar(oracle_data):
    pts = oracle_data["marcum"][:40]
    m = np.array([p["m"] for p in pts])
    a = np.array([p["a"] for p in pts])
    b = np.array([p["b"] for p in pts])
    vec = S.marcum_q(m, a, b)
    assert vec.shape == (40,)
    for v, mi, ai, bi in zip(vec, m, a, b):
        assert rel(v, S.marcum_q(int(mi), ai, bi)) < 1e-13


def test_gamma_matches_frozen_series(oracle_data):
    for pt in oracle_data["gamma"]:
        assert rel(S.regularized_lower_gamma(pt["m"], pt["x"]), pt["lower"]) < 1e-12
        assert rel(S.regularized_upper_gamma(pt["m"], pt["x"]), pt["upper"]) < 1e-12


def test_bessel_matches_frozen_series(oracle_data):
    for pt in oracle_data["bessel"]:
        assert rel(S.bessel_i_scaled(pt["n"], pt["x"]), pt["value"]) < 1e-12


# -- live spot checks against the mpmath references --------------------------

@pytest.mark.parametrize("m,a,b", [(1, 3.0, 2.5), (2, 0.5, 4.0), (7, 6.0, 8.5), (40, 12.0, 6.0)])
def test_marcum_live_oracle(m, a, b):
    assert rel(S.marcum_q(m, a, b), float(O.marcum_q_series(m, a, b))) < 1e-11
    assert rel(S.marcum_q_complement(m, a, b), float(O.marcum_q_complement_quad(m, a, b))) < 1e-11


@pytest.mark.parametrize("a,b", [(40.0, 38.0), (300.0, 310.0), (2000.0, 1990.0)])
def test_first_order_large_arguments(a, b):
    lc, lq = S.log_marcum_q(1, a, b)
    assert abs(lc - float(mp.log(O.rice_cdf(a, b)))) < 1e-10
    assert abs(lq - float(mp.log(O.rice_sf(a, b)))) < 1e-10


def test_marcum_tails_sum_to_one():
    rng = np.random.default_rng(3)
    m = rng.integers(1, 60, 200)
    a = rng.uniform(0, 20, 200)
    b = rng.uniform(0, 25, 200)
    tot = S.marcum_q(m, a, b) + S.marcum_q_complement(m, a, b)
    np.testing.assert_allclose(tot, 1.0, rtol=0, atol=2e-15)


def test_marcum_deep_tail_in_log_domain():
    # far beyond double range for Q itself
    lc, lq = S.log_marcum_q(4, 1.0, 60.0)
    assert abs(lc) < 1e-15
    ref = float(mp.log(O.marcum_q_series(4, 1.0, 60.0)))
    assert abs(lq - ref) < 1e-9 * abs(ref)


def test_log_marcum_complement_matches_pair():
    for m, a, b in [(1, 5.0, 3.0), (3, 2.0, 1.0), (1, 0.0, 2.0)]:
        assert S.log_marcum_q_complement(m, a, b) == pytest.approx(S.log_marcum_q(m, a, b)[0], rel=1e-14)


def test_marcum_boundary_values():
    assert S.marcum_q(5, 3.0, 0.0) == 1.0
    assert S.marcum_q_complement(5, 3.0, 0.0) == 0.0
    # a = 0 reduces to the upper gamma tail
    assert rel(S.marcum_q(3, 0.0, 2.0), math.exp(-2.0) * (1 + 2.0 + 2.0)) < 1e-14
    assert rel(S.marcum_q(1, 0.0, 1.0), math.exp(-0.5)) < 1e-14


def test_marcum_domain_errors():
    with pytest.raises(DomainError):
        S.marcum_q(0, 1.0, 1.0)
    with pytest.raises(DomainError):
        S.marcum_q(1.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        S.marcum_q(1, -1.0, 1.0)
    with pytest.raises(DomainError):
        S.marcum_q(1, 1.0, np.nan)


def test_noncentral_chi2_against_scipy():
    for dof, lam, x in [(2, 3.0, 4.0), (8, 10.0, 12.0), (20, 0.5, 30.0), (4, 0.0, 2.0)]:
        ref = stats.ncx2.cdf(x, dof, lam) if lam else stats.chi2.cdf(x, dof)
        assert S.noncentral_chi2_cdf(dof, lam, x) == pytest.approx(ref, rel=1e-9)
        assert S.noncentral_chi2_sf(dof, lam, x) == pytest.approx(1 - ref, rel=1e-8)
    with pytest.raises(DomainError):
        S.noncentral_chi2_cdf(3, 1.0, 1.0)


def test_poisson_log_pmf_against_mpmath():
    # scipy's logpmf loses ~1e-10 near k = lam = 1e6, so the reference is mpmath
    k = [0, 1, 5, 50, 1000, 10**6]
    for lam in (0.3, 7.0, 900.0, 1e6):
        got = S.log_poisson_pmf(np.array(k), lam)
        ref = [float(mp.log(O.poisson_pmf(kk, lam))) for kk in k]
        np.testing.assert_allclose(got, ref, rtol=1e-14)


def test_gamma_tails_complementary_without_cancellation():
    # lower tail far below double epsilon next to one
    lo = S.regularized_lower_gamma(50, 1.0)
    ref = float(O.gamma_lower_series(50, 1.0))
    assert rel(lo, ref) < 1e-12
    assert S.regularized_upper_gamma(50, 1.0) == 1.0
    assert S.regularized_lower_gamma(3, 0.0) == 0.0


def test_gamma_against_scipy():
    m = np.arange(1, 129)
    x = 0.9 * m
    np.testing.assert_allclose(S.regularized_lower_gamma(m, x), special.gammainc(m, x), rtol=1e-12)


def test_bessel_against_scipy_ive():
    n = np.array([0, 1, 2, 10, 64, 128])
    for x in (1e-3, 0.7, 25.0, 4000.0):
        np.testing.assert_allclose(S.bessel_i_scaled(n, x), special.ive(n, x), rtol=1e-12)
    assert S.bessel_i_scaled(0, 0.0) == 1.0
    assert S.bessel_i_scaled(3, 0.0) == 0.0
    with pytest.raises(DomainError):
        S.bessel_i_scaled(-1, 1.0)


def test_laguerre_against_scipy():
    for k in (0, 1, 2, 7, 30):
        for x in (-5.0, -0.3, 0.0, 2.5, 11.0):
            assert S.laguerre(k, x) == pytest.approx(special.eval_laguerre(k, x), rel=1e-11, abs=1e-12)


def test_laguerre_log_large_negative_argument():
    # L_k(-x) is positive and grows without bound; compare to mpmath
    sgn, lg = S.laguerre_log(200, -5000.0)
    with mp.workdps(50):
        ref = mp.log(mp.laguerre(200, 0, -5000))
    assert sgn == 1
    assert lg == pytest.approx(float(ref), rel=1e-12)


def test_laguerre_accepts_mpf():
    with mp.workdps(30):
        v = S.laguerre(3, mp.mpf(-2))
        assert isinstance(v, mp.mpf)
        assert v == mp.laguerre(3, 0, -2)


def test_clamp_probability():
    assert S.clamp_probability(1 + 1e-14) == 1.0
    assert S.clamp_probability(-1e-14) == 0.0
    with pytest.raises(DomainError):
        S.clamp_probability(1.1)
    with pytest.raises(DomainError):
        S.clamp_probability(float("nan"))
