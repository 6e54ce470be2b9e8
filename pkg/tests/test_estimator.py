import math

import numpy as np
import pytest

from wetoutage.channel import SystemParams, fading_spec, sample_channel
from wetoutage.errors import DomainError
from wetoutage.estimator import (ChannelEstimate, PilotObservation, residual_variance, ls_conditional_stats,
                                 ls_estimate, mmse_conditional_stats, mmse_estimate, mmse_gain,
                                 observe_pilot, perfect_estimate)
from wetoutage.protocol import beamform_gain
from wetoutage.rng import make_rng

# unit-scale link where estimation error is comparable to the channel
P = SystemParams(M=4, E_u=1.0, N0=0.7, beta=1.0, K=1.5)


def test_ls_estimate():
    y = np.array([2.0 + 1j, -4.0])
    est = ls_estimate(PilotObservation(y, 4.0, 0.2))
    np.testing.assert_allclose(est.h_hat, y / 2.0)
    assert est.kind == "ls" and est.err_var == pytest.approx(0.05)


def test_mmse_scalar_gain_closed_form():
    spec = fading_spec(P, "rician")
    y = np.array([0.3 + 0.2j, 1.0, -0.5j, 2.0])
    est = mmse_estimate(PilotObservation(y, P.E_u, P.N0), spec)
    g = P.beta * math.sqrt(P.E_u) / (P.beta * P.E_u + (P.K + 1) * P.N0)
    np.testing.assert_allclose(est.h_hat, spec.mu + g * (y - math.sqrt(P.E_u) * spec.mu))
    s2 = P.beta / (P.K + 1)
    assert est.err_var == pytest.approx(s2 * P.N0 / (P.E_u * s2 + P.N0))


def test_mmse_matrix_gain_matches_textbook_formula():
    p = P.replace(r=0.6 * np.exp(0.7j), K=0.0)
    spec = fading_spec(p, "correlated")
    G, err = mmse_gain(spec, p.E_u, p.N0)
    C = spec.cov
    Cyy = p.E_u * C + p.N0 * np.eye(p.M)
    np.testing.assert_allclose(G, math.sqrt(p.E_u) * C @ np.linalg.inv(Cyy), atol=1e-12)
    np.testing.assert_allclose(err, np.diag(C - p.E_u * C @ np.linalg.inv(Cyy) @ C).real, atol=1e-12)


def test_mmse_inid_diagonal_gain():
    spec = fading_spec(P, "inid", [0.5, 1.0, 2.0, 4.0])
    G, err = mmse_gain(spec, P.E_u, P.N0)
    d = np.array([0.5, 1.0, 2.0, 4.0])
    np.testing.assert_allclose(G, d / (d + P.N0))
    np.testing.assert_allclose(err, d * P.N0 / (d + P.N0))


@pytest.mark.parametrize("fading,kw", [("rician", {}), ("correlated", dict(r=0.7, K=0.0))])
def test_mmse_error_orthogonal_to_estimate(fading, kw):
    p = P.replace(**kw)
    spec = fading_spec(p, fading)
    rng = make_rng(5)
    h = sample_channel(spec, rng, 200_000)
    est = mmse_estimate(observe_pilot(h, p, rng), spec)
    e = h - est.h_hat
    cross = e.T @ (est.h_hat - spec.mu).conj() / len(h)
    np.testing.assert_allclose(cross, 0, atol=0.01)
    assert np.mean(np.abs(e) ** 2) == pytest.approx(est.err_var, rel=0.02)


def test_residual_variance_formula():
    assert residual_variance(P) == pytest.approx(P.beta * P.N0 / (P.beta * P.E_u + (P.K + 1) * P.N0))


@pytest.mark.parametrize("kind", ["ls", "mmse"])
def test_beam_gain_residual_has_residual_law(kind):
    # psi - E[psi | h_hat] must be zero-mean with variance residual_variance
    spec = fading_spec(P, "rician")
    rng = make_rng(9)
    h = sample_channel(spec, rng, 200_000)
    obs = observe_pilot(h, P, rng)
    if kind == "ls":
        est = ls_estimate(obs)
        st = ls_conditional_stats(est.h_hat, P)
    else:
        est = mmse_estimate(obs, spec)
        st = mmse_conditional_stats(est.h_hat, P)
    res = beamform_gain(est, h) - st.mean
    v = residual_variance(P)
    assert abs(res.mean()) < 4 * math.sqrt(v / len(res))
    assert np.mean(np.abs(res) ** 2) == pytest.approx(v, rel=0.015)
    # circular: real and imaginary parts share the variance
    assert np.var(res.real) == pytest.approx(v / 2, rel=0.02)


def test_estimate_validation():
    with pytest.raises(DomainError):
        ChannelEstimate("zf", np.ones(2), 0.1)
    with pytest.raises(DomainError):
        ChannelEstimate("ls", np.ones(2), 0.0)
    with pytest.raises(DomainError):
        PilotObservation(np.ones(2), 0.0, 1.0)
    assert perfect_estimate([1.0, 2.0]).err_var == 0.0
    with pytest.raises(DomainError):
        mmse_conditional_stats(np.zeros(3), P)
