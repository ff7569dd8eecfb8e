"""Permutations of the four strand labels and the partition/sign characters.

A :class:`Permutation` is stored by its image tuple: ``image[i-1]`` is where
label ``i`` (1-based) is sent.  Composition follows function notation,
``(s * t)(i) == s(t(i))``, which matches the braid action law
``act(s, act(t, f)) == act(s * t, f)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

LABELS = (1, 2, 3, 4)

# The unordered partition of the labels into opposite pairs whose stabilizer
# governs how the first-order linking number transforms under relabeling.
PAIR_PARTITION = (frozenset({1, 3}), frozenset({2, 4}))


@dataclass(frozen=True)
class Permutation:
    """A bijection of the strand labels {1, 2, 3, 4}."""

    image: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.image) != list(LABELS):
            raise ValueError(f"not a permutation of {LABELS}: {self.image}")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self(other(i)) for i in LABELS))

    def inverse(self) -> "Permutation":
        img = [0, 0, 0, 0]
        for i in LABELS:
            img[self(i) - 1] = i
        return Permutation(tuple(img))

    @property
    def sign(self) -> int:
        """+1 for even permutations, -1 for odd."""
        inversions = sum(
            1
            for a, b in itertools.combinations(LABELS, 2)
            if self(a) > self(b)
        )
        return -1 if inversions % 2 else 1

    @property
    def is_even(self) -> bool:
        return self.sign == 1

    @property
    def is_identity(self) -> bool:
        return self.image == LABELS

    @property
    def in_klein_four(self) -> bool:
        """True for the identity and the three double transpositions."""
        return self.is_even and all(self(self(i)) == i for i in LABELS)

    def preserves_block_partition(self, blocks=PAIR_PARTITION) -> bool:
        """Whether the permutation maps the given set partition to itself setwise."""
        block_set = set(blocks)
        return all(
            frozenset(self(i) for i in block) in block_set for block in blocks
        )

    def cycle_string(self) -> str:
        seen: set[int] = set()
        parts = []
        for start in LABELS:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                parts.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(parts) or "e"

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}]"

    @staticmethod
    def identity() -> "Permutation":
        return Permutation(LABELS)

    @staticmethod
    def transposition(a: int, b: int) -> "Permutation":
        img = list(LABELS)
        img[a - 1], img[b - 1] = b, a
        return Permutation(tuple(img))


def all_permutations() -> Iterator[Permutation]:
    """All 24 permutations in lexicographic image order."""
    for image in itertools.permutations(LABELS):
        yield Permutation(image)


SWAP_FIRST_TWO = Permutation.transposition(1, 2)

KLEIN_FOUR = tuple(p for p in all_permutations() if p.in_klein_four)


class ThetaValue(NamedTuple):
    """Pair of +/-1 characters: partition preservation and permutation sign."""

    theta1: int
    theta2: int


def theta(sigma: Permutation) -> ThetaValue:
    """Characters governing (skew-)invariance of the linking invariants.

    ``theta1`` is +1 exactly when ``sigma`` maps the pair partition
    {{1,3},{2,4}} to itself setwise; ``theta2`` is the sign of ``sigma``.
    """
    t1 = 1 if sigma.preserves_block_partition() else -1
    return ThetaValue(t1, sigma.sign)
