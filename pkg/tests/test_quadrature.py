import math

import numpy as np
import pytest

from wetoutage.errors import NumericalError
from wetoutage.quadrature import NODES, W_GAUSS, W_KRONROD, integrate


def test_rule_weights_are_exact_for_polynomials():
    # Kronrod rule: degree 31, embedded Gauss rule: degree 19 on [-1, 1]
    for d in range(32):
        exact = 0.0 if d % 2 else 2.0 / (d + 1)
        assert W_KRONROD @ NODES ** d == pytest.approx(exact, abs=1e-14)
        if d < 20:
            assert W_GAUSS @ NODES ** d == pytest.approx(exact, abs=1e-14)


def test_smooth_integral():
    v, err = integrate(np.exp, [0.0, 1.0])
    assert v == pytest.approx(math.e - 1, rel=1e-14)
    assert err < 1e-10


def test_kink_and_peak_refined():
    v, _ = integrate(lambda x: np.abs(x - 0.3), [0.0, 1.0], epsrel=1e-12)
    assert v == pytest.approx(0.5 * (0.09 + 0.49), rel=1e-11)
    v, _ = integrate(lambda x: np.exp(-0.5 * (x / 1e-3) ** 2), [-1.0, 0.0, 1.0], epsrel=1e-12)
    assert v == pytest.approx(1e-3 * math.sqrt(2 * math.pi), rel=1e-11)


def test_breakpoints_deduplicated_and_degenerate():
    assert integrate(np.sin, [1.0, 1.0]) == (0.0, 0.0)
    v, _ = integrate(np.cos, [0.0, 0.5, 0.5, 1.0])
    assert v == pytest.approx(math.sin(1.0), rel=1e-14)


def test_failure_modes():
    with pytest.raises(NumericalError), np.errstate(divide="ignore", over="ignore"):
        integrate(lambda x: 1.0 / x, [0.0, 1.0])
    with pytest.raises(NumericalError):
        integrate(lambda x: np.sin(1.0 / (x + 1e-9)), [0.0, 1.0], epsrel=1e-14, max_intervals=50)
