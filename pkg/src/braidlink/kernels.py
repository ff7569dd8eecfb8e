"""Kernel dispatch: the compiled extension when built, NumPy otherwise.

The two backends implement identical contracts (see ``_kernels_py``); tests
assert their numerical agreement and ``benchmarks/bench_kernels.py`` compares
their speed.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py

BACKEND = "compiled" if _compiled is not None else "python"


def available_backends() -> dict[str, object]:
    """Name -> module for every importable backend."""
    out: dict[str, object] = {"python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


@lru_cache(maxsize=None)
def gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, 1]."""
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    x, w = np.polynomial.legendre.leggauss(order)
    nodes = np.ascontiguousarray(0.5 * (x + 1.0))
    weights = np.ascontiguousarray(0.5 * w)
    return nodes, weights


def _as_closed(gamma: np.ndarray) -> np.ndarray:
    g = np.ascontiguousarray(gamma, dtype=np.complex128)
    if g.ndim != 1 or g.shape[0] < 2 or g[0] != g[-1]:
        raise ValueError("expected a closed path array (last sample repeats the first)")
    return g


def turn_fractions(gamma: np.ndarray, pole: complex) -> np.ndarray:
    return _impl.turn_fractions(_as_closed(gamma), complex(pole))


def gl_turn_sweep(gamma: np.ndarray, pole: complex, order: int) -> float:
    nodes, weights = gauss_nodes(order)
    return _impl.gl_turn_sweep(_as_closed(gamma), complex(pole), nodes, weights)


def gl_pair_sweep(gamma: np.ndarray, lam0: np.ndarray, lam1: np.ndarray,
                  order: int) -> tuple[float, float]:
    nodes, weights = gauss_nodes(order)
    g = _as_closed(gamma)
    l0 = np.ascontiguousarray(lam0, dtype=np.float64)
    l1 = np.ascontiguousarray(lam1, dtype=np.float64)
    if l0.shape[0] != g.shape[0] - 1 or l1.shape[0] != g.shape[0] - 1:
        raise ValueError("profile arrays must hold one value per segment start")
    return _impl.gl_pair_sweep(g, l0, l1, nodes, weights)
