from __future__ import annotations

import random

import pytest

from braidlink import (
    act,
    compose,
    hopf,
    inverse,
    is_brunn,
    lk,
    normalize,
    parse_loop,
    realize_artin,
    realize_loop,
    tilde,
    total_lk,
    transform_table,
    winding_discrete,
)
from braidlink.permutations import KLEIN_FOUR, Permutation
from braidlink.words import random_balanced_loop_word, random_pure_artin_word

from _oracles import hopf_of_word


class TestLk:
    def test_constant_braid(self, constant_braid):
        assert lk(constant_braid) == 0

    def test_circle_strand(self, circle_braid):
        assert lk(circle_braid) == 1

    def test_exponent_sum(self):
        assert lk(realize_loop(parse_loop("x^3 y^-2"), 64)) == 3

    def test_tilde_reads_other_pole(self):
        # lk of the relabeled braid equals the winding about 1 of the original
        rng = random.Random(23)
        for _ in range(5):
            braid = realize_artin(random_pure_artin_word(rng, 2), 32)
            path = normalize(braid)
            assert lk(tilde(braid)) == winding_discrete(path, 1)


class TestTotalLk:
    def test_circle_strand_pair(self, circle_braid):
        assert total_lk(circle_braid) == (1, 0)

    def test_commutator_vanishes(self, borromean):
        assert total_lk(borromean) == (0, 0)

    def test_additivity(self):
        rng = random.Random(31)
        for _ in range(5):
            a = realize_artin(random_pure_artin_word(rng, 2), 32)
            b = realize_artin(random_pure_artin_word(rng, 2), 32)
            ta, tb = total_lk(a), total_lk(b)
            tc = total_lk(compose(a, b))
            assert tc == (ta.lk + tb.lk, ta.lk_tilde + tb.lk_tilde)


class TestBrunnGate:
    def test_cases(self, borromean, constant_braid):
        assert is_brunn(borromean)
        assert is_brunn(constant_braid)
        assert not is_brunn(realize_loop(parse_loop("x"), 32))


class TestHopf:
    def test_commutator(self, borromean):
        report = hopf(borromean)
        assert report.brunn and report.hopf == 1
        assert report.hopf_raw == pytest.approx(1.0, abs=1e-3)

    def test_triple_commutator(self):
        assert hopf(realize_loop(parse_loop("[x,y]^3"), 64)).hopf == 3

    def test_constant(self, constant_braid):
        report = hopf(constant_braid)
        assert report.brunn and report.hopf == 0

    def test_gate_blocks_hopf(self):
        report = hopf(realize_loop(parse_loop("x"), 32))
        assert not report.brunn
        assert report.hopf is None and report.hopf_raw is None

    def test_matches_series_oracle(self):
        rng = random.Random(101)
        for _ in range(15):
            word = random_balanced_loop_word(rng, rng.randint(0, 8))
            expected = hopf_of_word(word)
            assert hopf(realize_loop(word, 64)).hopf == expected

    def test_sign_under_inversion(self):
        word = random_balanced_loop_word(random.Random(5), 6)
        braid = realize_loop(word, 64)
        assert hopf(inverse(braid)).hopf == -hopf(braid).hopf

    def test_additivity_under_composition(self):
        rng = random.Random(77)
        a = realize_loop(random_balanced_loop_word(rng, 4), 64)
        b = realize_loop(random_balanced_loop_word(rng, 6), 64)
        assert hopf(compose(a, b)).hopf == hopf(a).hopf + hopf(b).hopf

    def test_doubled_commutator(self, borromean):
        assert hopf(compose(borromean, borromean)).hopf == 2

    def test_invariance_under_klein_four(self, borromean):
        for sigma in KLEIN_FOUR:
            assert hopf(act(sigma, borromean)).hopf == 1

    def test_skew_under_partition_preserving_odd(self, borromean):
        # (1 3) preserves the pair partition but is odd: the value negates.
        assert hopf(act(Permutation.transposition(1, 3), borromean)).hopf == -1
        assert hopf(act(Permutation.transposition(2, 4), borromean)).hopf == -1

    def test_transforms_by_permutation_sign(self, borromean):
        # Relabeling preserves zero total linking, so the value stays defined;
        # the observed transformation over all 24 permutations is the sign.
        from braidlink.permutations import all_permutations
        for sigma in all_permutations():
            report = hopf(act(sigma, borromean))
            assert report.brunn
            assert report.hopf == sigma.sign

    def test_start_parameter_is_immaterial_on_brunn(self, borromean):
        base = hopf(borromean).hopf_raw
        for c in (-3.0, 0.7, 10.0):
            assert abs(hopf(borromean, start=c).hopf_raw - base) < 1e-6


@pytest.fixture(scope="module")
def table():
    return transform_table(sample_count=5, seed=1)


class TestTransformTable:
    def test_identity_row(self, table):
        assert table.row(Permutation.identity()) == (1, 0)

    def test_swap_row_reads_tilde(self, table):
        assert table.row(Permutation.transposition(1, 2)) == (0, 1)

    def test_klein_four_rows_fix_lk(self, table):
        for sigma in KLEIN_FOUR:
            assert table.row(sigma) == (1, 0)

    def test_integer_fit_everywhere(self, table):
        assert table.consistent

    def test_multiplicative(self, table):
        assert table.is_multiplicative()

    def test_matrices_are_invertible(self, table):
        import numpy as np
        for sigma in table.matrices:
            det = round(float(np.linalg.det(table.matrix(sigma))))
            assert det in (-1, 1)

    def test_rejects_small_samples(self):
        with pytest.raises(ValueError):
            transform_table(sample_count=3, seed=0)
