from __future__ import annotations

import random

import numpy as np
import pytest

from braidlink import (
    QuadratureSettings,
    hopf_byparts,
    hopf_quadrature,
    lambda_profile,
    normalize,
    parse_loop,
    realize_loop,
    winding_discrete,
    winding_quadrature,
)
from braidlink.errors import GateError
from braidlink.mobius import MAX_TURN, NormalizedPath

from _oracles import winding_scalar


def _circle(radius=0.5, center=0.0, n=64, ccw=True):
    theta = 2.0 * np.pi * np.arange(n) / n
    if not ccw:
        theta = -theta
    return NormalizedPath.from_samples(center + radius * np.exp(1j * theta))


def _constant_path(value=2.0, n=16):
    return NormalizedPath.from_samples(np.full(n, value, dtype=complex))


class TestQuadratureSettings:
    def test_defaults(self):
        q = QuadratureSettings()
        assert q.order == 8 and q.tol == 1e-4

    @pytest.mark.parametrize("kwargs", [
        dict(order=1), dict(tol=0.0), dict(tol=-1e-5), dict(refine_factor=1),
    ])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            QuadratureSettings(**kwargs)


class TestWindingDiscrete:
    def test_ccw_circle_about_its_center(self):
        assert winding_discrete(_circle(), 0) == 1
        assert winding_discrete(_circle(ccw=False), 0) == -1

    def test_constant_path(self):
        assert winding_discrete(_constant_path(), 1) == 0

    def test_borromean_windings_vanish(self, borromean_path):
        assert winding_discrete(borromean_path, 0) == 0
        assert winding_discrete(borromean_path, 1) == 0

    def test_matches_scalar_oracle(self, borromean_path):
        for pole in (0.0, 1.0):
            oracle = winding_scalar(list(borromean_path.gamma), pole)
            assert winding_discrete(borromean_path, int(pole)) == round(oracle)
            assert abs(oracle - round(oracle)) < 1e-9

    def test_quadrature_route_agrees(self):
        for path in (_circle(), _circle(ccw=False), _constant_path()):
            for pole in (0, 1):
                quad = winding_quadrature(path, pole)
                assert abs(quad - winding_discrete(path, pole)) < 1e-9


class TestLambdaProfile:
    def test_constant_path_stays_at_start(self):
        profile = lambda_profile(_constant_path(), 0, start=0.25)
        assert np.all(profile.values == 0.25)

    def test_circle_profile_is_monotone(self):
        profile = lambda_profile(_circle(n=32), 0)
        assert profile.values[0] == 0.0
        assert profile.values[-1] == pytest.approx(1.0, abs=1e-12)
        assert np.all(np.diff(profile.values) > 0)

    def test_circle_about_other_pole_closes_at_zero(self):
        profile = lambda_profile(_circle(n=32), 1)
        assert profile.winding == 0

    def test_start_offset_shifts_uniformly(self, borromean_path):
        base = lambda_profile(borromean_path, 0, start=0.0)
        shifted = lambda_profile(borromean_path, 0, start=-1.5)
        assert np.allclose(shifted.values - base.values, -1.5)

    def test_branch_increments_stay_small(self, borromean_path):
        for pole in (0, 1):
            profile = lambda_profile(borromean_path, pole)
            assert np.max(np.abs(np.diff(profile.values))) < MAX_TURN

    def test_holonomy_is_integral(self):
        rng = random.Random(17)
        from braidlink.words import random_balanced_loop_word
        for _ in range(10):
            word = random_balanced_loop_word(rng, rng.randint(0, 8))
            path = normalize(realize_loop(word, 32))
            for pole in (0, 1):
                profile = lambda_profile(path, pole)
                total = float(profile.values[-1] - profile.values[0])
                assert abs(total - round(total)) < 1e-9


class TestHopfQuadrature:
    def test_constant_path_is_zero(self):
        path = _constant_path()
        h = hopf_quadrature(path, lambda_profile(path, 0), lambda_profile(path, 1))
        assert h == pytest.approx(0.0, abs=1e-15)

    def test_borromean_value(self, borromean_path):
        l0 = lambda_profile(borromean_path, 0)
        l1 = lambda_profile(borromean_path, 1)
        assert hopf_quadrature(borromean_path, l0, l1) == pytest.approx(1.0, abs=1e-4)

    def test_reversed_commutator_negates(self):
        path = normalize(realize_loop(parse_loop("[x,y]^-1"), 64))
        l0, l1 = lambda_profile(path, 0), lambda_profile(path, 1)
        assert hopf_quadrature(path, l0, l1) == pytest.approx(-1.0, abs=1e-4)

    def test_start_shift_invariance_on_null_windings(self, borromean_path):
        base = hopf_quadrature(borromean_path,
                               lambda_profile(borromean_path, 0),
                               lambda_profile(borromean_path, 1))
        for c in (-3.0, 0.7, 10.0):
            shifted = hopf_quadrature(borromean_path,
                                      lambda_profile(borromean_path, 0, start=c),
                                      lambda_profile(borromean_path, 1, start=c))
            assert abs(shifted - base) < 1e-9

    def test_resolution_stability(self):
        word = parse_loop("[x,y] [y,x]^2")
        values = []
        for spl in (64, 128):
            path = normalize(realize_loop(word, spl))
            values.append(hopf_quadrature(path, lambda_profile(path, 0),
                                          lambda_profile(path, 1)))
        assert abs(values[0] - values[1]) < 1e-4

    def test_reparametrized_polyline_gives_same_value(self, borromean_path):
        rng = np.random.default_rng(3)
        gamma = borromean_path.gamma
        pieces = []
        for k in range(gamma.shape[0]):
            nxt = gamma[(k + 1) % gamma.shape[0]]
            pieces.append(gamma[k])
            for t in sorted(rng.uniform(0.1, 0.9, rng.integers(0, 3))):
                pieces.append((1 - t) * gamma[k] + t * nxt)
        resampled = NormalizedPath.from_samples(np.array(pieces))
        h0 = hopf_quadrature(borromean_path, lambda_profile(borromean_path, 0),
                             lambda_profile(borromean_path, 1))
        h1 = hopf_quadrature(resampled, lambda_profile(resampled, 0),
                             lambda_profile(resampled, 1))
        assert abs(h0 - h1) < 1e-4

    def test_profile_path_mismatch_rejected(self, borromean_path):
        other = _constant_path()
        with pytest.raises(ValueError):
            hopf_quadrature(borromean_path, lambda_profile(other, 0),
                            lambda_profile(other, 1))


class TestHopfByparts:
    def test_constant_path(self):
        path = _constant_path()
        a, mb = hopf_byparts(path, lambda_profile(path, 0), lambda_profile(path, 1))
        assert a == pytest.approx(0.0, abs=1e-15)
        assert mb == pytest.approx(0.0, abs=1e-15)

    def test_borromean_pair(self, borromean_path):
        l0 = lambda_profile(borromean_path, 0)
        l1 = lambda_profile(borromean_path, 1)
        a, mb = hopf_byparts(borromean_path, l0, l1)
        assert a == pytest.approx(1.0, abs=2e-4)
        assert mb == pytest.approx(1.0, abs=2e-4)

    def test_gate_rejects_nonzero_winding(self):
        path = _circle()
        with pytest.raises(GateError):
            hopf_byparts(path, lambda_profile(path, 0), lambda_profile(path, 1))

    def test_null_braid_pair_vanishes(self, borromean):
        from braidlink import compose, inverse
        path = normalize(compose(borromean, inverse(borromean)))
        a, mb = hopf_byparts(path, lambda_profile(path, 0), lambda_profile(path, 1))
        assert a == pytest.approx(0.0, abs=2e-4)
        assert mb == pytest.approx(0.0, abs=2e-4)
