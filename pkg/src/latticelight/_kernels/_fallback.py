"""Pure-numpy implementations of the inner loops.

The accumulation order must stay aligned with ``_core.pyx``: the loop over
distribution entries / mixture components is the outer loop, so every output
element receives its contributions in the same order in both backends.
"""

import numpy as np


def convolve_shift(dist, offsets, probs, out):
    """Accumulate ``out[i + offsets[j]] += dist[i] * probs[j]``.

    ``out`` must be zero-initialised with length >= len(dist) + max(offsets).
    """
    n = dist.shape[0]
    for off, p in zip(offsets, probs):
        out[off:off + n] += dist * p


def lorentzian_mixture(x, centers, weights, kappa, eta_sq, out):
    """Add ``eta_sq * w_q / ((x - c_q)^2 + kappa^2)`` for every component q."""
    k2 = kappa * kappa
    for c, w in zip(centers, weights):
        t = x - c
        out += (w * eta_sq) / (t * t + k2)
