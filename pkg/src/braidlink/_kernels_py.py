"""NumPy implementations of the hot numerical kernels.

`braidlink._kernels` (the compiled extension) provides the same three
functions with identical semantics; `braidlink.kernels` picks whichever is
available at import time.  All paths are closed polylines passed as arrays of
length M+1 whose last entry repeats the first.

Angles are measured in turns (full revolutions).  Branch tracking relies on
the caller guaranteeing that no segment subtends half a turn or more about a
pole, so the principal value of ``arg(w_next * conj(w_prev))`` is the true
continuous increment.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi

# Segments are processed in blocks to bound the size of (segments x nodes)
# temporaries; accumulation order stays fixed for reproducibility.
_BLOCK = 1 << 14


def turn_fractions(gamma: np.ndarray, pole: complex) -> np.ndarray:
    """Per-segment principal winding increments about ``pole``, in turns."""
    w = gamma - pole
    return np.angle(w[1:] * np.conj(w[:-1])) / TWO_PI


def gl_turn_sweep(gamma: np.ndarray, pole: complex,
                  nodes: np.ndarray, weights: np.ndarray) -> float:
    """Gauss-Legendre quadrature of the winding form about ``pole``.

    Integrates Im(dz / (z - pole)) / 2pi over the closed polyline; for a valid
    path this approximates the integer winding number, independently of the
    exact per-segment log increments used elsewhere.
    """
    total = 0.0
    m = gamma.shape[0] - 1
    for s in range(0, m, _BLOCK):
        e = min(s + _BLOCK, m)
        u = gamma[s:e] - pole
        d = gamma[s + 1:e + 1] - gamma[s:e]
        z = u[:, None] + nodes[None, :] * d[:, None]
        f = (d[:, None] * np.conj(z)).imag / (z.real ** 2 + z.imag ** 2)
        total += float(np.sum(f @ weights))
    return total / TWO_PI


def gl_pair_sweep(gamma: np.ndarray, lam0: np.ndarray, lam1: np.ndarray,
                  nodes: np.ndarray, weights: np.ndarray) -> tuple[float, float]:
    """The two mixed winding integrals along a closed polyline.

    Returns ``(A, B)`` with A = integral of lam0 d(turn about 1) and
    B = integral of lam1 d(turn about 0).  ``lam0``/``lam1`` hold the winding
    angles (turns, about 0 and 1) at segment start points; values at interior
    Gauss-Legendre nodes are reconstructed by the principal-branch increment
    from the segment start, which is exact under the branch-density condition.
    """
    a_total = 0.0
    b_total = 0.0
    m = gamma.shape[0] - 1
    for s in range(0, m, _BLOCK):
        e = min(s + _BLOCK, m)
        g = gamma[s:e]
        d = gamma[s + 1:e + 1] - g
        z0 = g[:, None] + nodes[None, :] * d[:, None]
        z1 = z0 - 1.0
        u0 = g[:, None]
        u1 = u0 - 1.0
        l0 = lam0[s:e, None] + np.angle(z0 * np.conj(u0)) / TWO_PI
        l1 = lam1[s:e, None] + np.angle(z1 * np.conj(u1)) / TWO_PI
        f1 = (d[:, None] * np.conj(z1)).imag / (z1.real ** 2 + z1.imag ** 2)
        f0 = (d[:, None] * np.conj(z0)).imag / (z0.real ** 2 + z0.imag ** 2)
        a_total += float(np.sum((l0 * f1) @ weights))
        b_total += float(np.sum((l1 * f0) @ weights))
    return a_total / TWO_PI, b_total / TWO_PI
