"""Counter-based random streams with a fixed per-trial word budget.

Every Monte Carlo trial ``i`` owns a contiguous slice of a single Philox4x64
stream keyed by the seed: ``words_per_trial`` 64-bit words starting at word
``i * words_per_trial``.  A batch starting at trial ``i0`` therefore only
needs to jump the Philox counter ahead by ``i0 * words_per_trial / 4``
blocks (each block yields four words).  Because the mapping from trial to
random words never depends on how trials are grouped, results are
bit-identical for any batch size or worker count.

Uniform doubles are produced by numpy's ``Generator.random`` (53-bit,
one word per double).  Complex normals use the polar Box-Muller map
``z = sqrt(-log(1 - u1)) exp(2 pi j u2)``, which is exactly CN(0, 1):
``|z|^2`` is unit exponential and the phase is uniform.
"""

from __future__ import annotations

import numpy as np
from numpy.random import Generator, Philox, SeedSequence


def philox_key(seed: int) -> np.ndarray:
    """Derive the 128-bit Philox key for ``seed`` through ``SeedSequence``."""
    return SeedSequence(int(seed)).generate_state(2, dtype=np.uint64)


def trial_uniforms(key, first_trial: int, n_trials: int, words_per_trial: int) -> np.ndarray:
    """Uniforms in [0, 1) for trials ``first_trial .. first_trial + n_trials - 1``.

    Returns
    -------
    ndarray, shape (n_trials, words_per_trial)
    """
    if words_per_trial % 4:
        raise ValueError("words_per_trial must be a multiple of 4")
    bg = Philox(key=key)
    if first_trial:
        bg.advance(first_trial * (words_per_trial // 4))
    return Generator(bg).random((n_trials, words_per_trial))


def complex_normal_from_uniforms(u1, u2):
    """Map two uniform arrays to standard circular complex normals."""
    radius = np.sqrt(-np.log1p(-u1))
    return radius * np.exp(2j * np.pi * u2)


def standard_complex_normal(rng: Generator, shape) -> np.ndarray:
    """Draw CN(0, 1) samples from ``rng`` using the same Box-Muller map."""
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    u = rng.random((2,) + shape)
    return complex_normal_from_uniforms(u[0], u[1])


def make_rng(seed: int) -> Generator:
    """A Philox-backed generator for ad hoc sampling (tests, estimators)."""
    return Generator(Philox(key=philox_key(seed)))
