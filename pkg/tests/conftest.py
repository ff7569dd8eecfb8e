from __future__ import annotations

import numpy as np
import pytest

from braidlink import normalize, parse_loop, realize_loop
from braidlink.braid import INFINITY, RiemannPoint, SphericalBraid


@pytest.fixture(scope="session")
def borromean():
    return realize_loop(parse_loop("[x,y]"), 128)


@pytest.fixture(scope="session")
def borromean_path(borromean):
    return normalize(borromean)


@pytest.fixture()
def constant_braid():
    points = [RiemannPoint.finite(0), RiemannPoint.finite(1), INFINITY,
              RiemannPoint.finite(2)]
    return SphericalBraid.constant(points, samples=16)


@pytest.fixture()
def circle_braid():
    """Strands 1-3 at the anchors, strand 4 a ccw circle of radius 1/2 about 0."""
    n = 64
    theta = 2.0 * np.pi * np.arange(n) / n
    circle = 0.5 * np.exp(1j * theta)
    return SphericalBraid.from_complex([
        [0j] * n, [1 + 0j] * n, [None] * n, list(circle),
    ])
