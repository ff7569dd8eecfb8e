"""Backend parity: the compiled kernels and the NumPy fallback must agree."""

from __future__ import annotations

import numpy as np
import pytest

from braidlink import kernels
from braidlink.kernels import available_backends, gauss_nodes

compiled_missing = "compiled" not in available_backends()


def _sample_paths():
    rng = np.random.default_rng(42)
    n = 400
    theta = 2.0 * np.pi * np.arange(n) / n
    wobble = 0.1 * rng.standard_normal(n) + 0.1j * rng.standard_normal(n)
    gamma = 2.0 + 0.6 * np.exp(1j * theta) + wobble
    closed = np.concatenate([gamma, gamma[:1]])
    lam0 = np.cumsum(rng.uniform(-0.05, 0.05, n))
    lam1 = np.cumsum(rng.uniform(-0.05, 0.05, n))
    return closed, lam0, lam1


def test_gauss_nodes_integrate_polynomials_exactly():
    nodes, weights = gauss_nodes(4)
    for degree in range(8):  # exact through degree 2*order - 1
        approx = float(np.sum(weights * nodes ** degree))
        assert approx == pytest.approx(1.0 / (degree + 1), abs=1e-14)


def test_gauss_nodes_rejects_tiny_order():
    with pytest.raises(ValueError):
        gauss_nodes(1)


def test_open_path_rejected():
    with pytest.raises(ValueError):
        kernels.turn_fractions(np.array([1.0 + 0j, 2.0 + 0j]), 0.0)


@pytest.mark.skipif(compiled_missing, reason="compiled extension not built")
class TestBackendParity:
    def test_turn_fractions(self):
        closed, _, _ = _sample_paths()
        py = available_backends()["python"]
        cy = available_backends()["compiled"]
        for pole in (0.0, 1.0):
            a = py.turn_fractions(closed, pole)
            b = cy.turn_fractions(closed, pole)
            assert np.max(np.abs(a - b)) < 1e-13

    def test_gl_turn_sweep(self):
        closed, _, _ = _sample_paths()
        nodes, weights = gauss_nodes(8)
        py = available_backends()["python"]
        cy = available_backends()["compiled"]
        for pole in (0.0, 1.0):
            a = py.gl_turn_sweep(closed, pole, nodes, weights)
            b = cy.gl_turn_sweep(closed, pole, nodes, weights)
            assert abs(a - b) < 1e-12

    def test_gl_pair_sweep(self):
        closed, lam0, lam1 = _sample_paths()
        nodes, weights = gauss_nodes(8)
        py = available_backends()["python"]
        cy = available_backends()["compiled"]
        a0, b0 = py.gl_pair_sweep(closed, lam0, lam1, nodes, weights)
        a1, b1 = cy.gl_pair_sweep(closed, lam0, lam1, nodes, weights)
        assert abs(a0 - a1) < 1e-12
        assert abs(b0 - b1) < 1e-12


def test_dispatcher_reports_backend():
    assert kernels.BACKEND in ("compiled", "python")
    assert "python" in available_backends()
