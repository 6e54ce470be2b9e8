import numpy as np
import pytest

from wetoutage.errors import DomainError
from wetoutage.estimator import ChannelEstimate, perfect_estimate
from wetoutage.protocol import adapt_downlink_energy, beamform_gain, harvest, harvested_energy, outage_event


def test_beamform_gain_projection():
    h = np.array([1.0 + 1j, 2.0])
    est = ChannelEstimate("ls", np.array([1.0, 0.0]), 0.1)
    assert beamform_gain(est, h) == pytest.approx(1.0 + 1j)
    assert beamform_gain(perfect_estimate(h), h) == pytest.approx(np.sqrt(6.0))
    with pytest.raises(DomainError):
        beamform_gain(ChannelEstimate("ls", np.zeros(2), 0.1), h)


def test_beam_gain_bounded_by_channel_norm():
    rng = np.random.default_rng(2)
    h = rng.normal(size=(1000, 6)) + 1j * rng.normal(size=(1000, 6))
    hh = h + 0.5 * (rng.normal(size=h.shape) + 1j * rng.normal(size=h.shape))
    psi = beamform_gain(ChannelEstimate("ls", hh, 0.25), h)
    assert np.all(np.abs(psi) <= np.linalg.norm(h, axis=1) * (1 + 1e-12))


def test_harvested_energy_and_errors():
    assert harvested_energy(2.0, 1e-3, 0.5) == pytest.approx(2e-3)
    with pytest.raises(DomainError):
        harvested_energy(1.0, -1.0, 0.5)
    with pytest.raises(DomainError):
        harvested_energy(1.0, 1.0, 0.0)


def test_adapt_energy_inverts_estimate_norm():
    est = ChannelEstimate("mmse", np.array([[3.0, 4.0]]), 0.1)
    np.testing.assert_allclose(adapt_downlink_energy(est, 50.0), [2.0])
    with pytest.raises(DomainError):
        adapt_downlink_energy(est, 0.0)


def test_perfect_adaptation_harvests_exactly_eta_rho():
    rng = np.random.default_rng(4)
    h = rng.normal(size=(500, 8)) * 1e-3 + 0j
    out = harvest(perfect_estimate(h), h, 0.5, 1e-8, 1e-7, rho=2.204e-7)
    assert np.all(out.E_h == 0.5 * 2.204e-7)
    assert not out.outage.any()


def test_tie_counts_as_outage():
    assert outage_event(1e-8 + 1e-7, 1e-8, 1e-7)
    assert not outage_event(np.nextafter(1e-8 + 1e-7, 1.0), 1e-8, 1e-7)


def test_harvest_needs_exactly_one_power_rule():
    h = np.ones(2) + 0j
    with pytest.raises(DomainError):
        harvest(perfect_estimate(h), h, 0.5, 1e-8, 1e-7)
    with pytest.raises(DomainError):
        harvest(perfect_estimate(h), h, 0.5, 1e-8, 1e-7, E_d=1.0, rho=1.0)


def test_fixed_energy_harvest():
    h = np.array([[3.0, 4.0]]) + 0j
    out = harvest(perfect_estimate(h), h, 0.5, 0.5, 0.5, E_d=0.1)
    np.testing.assert_allclose(out.E_h, [1.25])
    assert not out.outage[0]
    np.testing.assert_allclose(out.E_d_used, [0.1])
