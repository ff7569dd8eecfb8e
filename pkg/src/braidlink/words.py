"""Symbolic braid descriptions and their geometric realizations.

Two input languages are supported:

* loop words over ``x, y`` (and inverses ``X, Y``), describing the homotopy
  class of the normalized strand-4 curve in the twice-punctured plane;
  grammar: ``word := factor*``, ``factor := atom ('^' int)?``,
  ``atom := 'x' | 'y' | 'X' | 'Y' | '[' word ',' word ']' | '(' word ')'``,
  whitespace ignored, ``[a,b]`` expanding to ``a b a^-1 b^-1``;
* Artin words over ``s1, s2, s3`` with optional ``^k`` exponents, restricted
  to pure words (identity strand permutation).

Realizations are piecewise-linear strand curves: loop words pin strands 1-3 at
0, 1, infinity and trace strand 4 around the punctures; Artin words place the
strands on a circle and realize each generator as a half-twist of two of them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .braid import SphericalBraid
from .errors import NonPureWordError, WordSyntaxError
from .permutations import Permutation

#: Realized loop words never expand beyond this many letters.
MAX_LETTERS = 1_000_000

#: Loop geometry constants: base point, main loop radii, detour radius.
BASE_POINT = 2.0 + 0.0j
RADIUS_ABOUT_0 = 0.5
RADIUS_ABOUT_1 = 0.25
DETOUR_RADIUS = 0.1

#: Coarsest admissible arc step (radians); keeps realized paths branch-dense.
MAX_ARC_STEP = 0.6

MIN_SAMPLES_PER_LETTER = 32
MIN_SAMPLES_PER_GENERATOR = 8

#: Artin realization: strand base points, equally spaced on the unit circle.
ARTIN_LANES = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


@dataclass(frozen=True)
class LoopWord:
    """A word in the free group on the two puncture loops.

    Letters are pairs ``(generator, sign)`` with generator in ``{"x", "y"}``.
    """

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for gen, sign in self.letters:
            if gen not in ("x", "y") or sign not in (1, -1):
                raise ValueError(f"bad letter {(gen, sign)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "LoopWord") -> "LoopWord":
        return LoopWord(self.letters + other.letters)

    def inverse(self) -> "LoopWord":
        return LoopWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "LoopWord":
        base = self if n >= 0 else self.inverse()
        return LoopWord(base.letters * abs(n))

    def exponent_sums(self) -> tuple[int, int]:
        """Net signed counts of x- and y-letters."""
        ex = sum(s for g, s in self.letters if g == "x")
        ey = sum(s for g, s in self.letters if g == "y")
        return ex, ey

    @property
    def is_balanced(self) -> bool:
        return self.exponent_sums() == (0, 0)

    def render(self) -> str:
        """Canonical text form: one character per letter."""
        table = {("x", 1): "x", ("x", -1): "X", ("y", 1): "y", ("y", -1): "Y"}
        return "".join(table[letter] for letter in self.letters)

    def __repr__(self) -> str:
        return f"LoopWord({self.render()!r})"


@dataclass(frozen=True)
class BraidWord:
    """A pure word in the Artin generators, stored as unit letters (i, +/-1)."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for i, s in self.letters:
            if i not in (1, 2, 3) or s not in (1, -1):
                raise ValueError(f"bad generator letter {(i, s)}")
        perm = self.permutation()
        if not perm.is_identity:
            raise NonPureWordError(
                f"word is not pure: permutation {perm.cycle_string()}", perm
            )

    def permutation(self) -> Permutation:
        perm = Permutation.identity()
        for i, _ in self.letters:
            perm = perm * Permutation.transposition(i, i + 1)
        return perm

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def render(self) -> str:
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({self.render()!r})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise WordSyntaxError("unexpected end of input", self.pos)
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise WordSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])


def parse_loop(text: str) -> LoopWord:
    """Parse a loop word; raises :class:`WordSyntaxError` with the offset."""
    sc = _Scanner(text)
    word = _parse_loop_word(sc, top=True)
    if sc.peek() is not None:
        raise WordSyntaxError(f"unexpected character {sc.peek()!r}", sc.pos)
    return word


def _parse_loop_word(sc: _Scanner, top: bool) -> LoopWord:
    out = LoopWord()
    while True:
        ch = sc.peek()
        if ch is None or ch in ",])":
            if ch is None and not top:
                raise WordSyntaxError("unbalanced bracket", sc.pos)
            return out
        out = out + _parse_loop_factor(sc)
        if len(out) > MAX_LETTERS:
            raise WordSyntaxError("word expands beyond the letter limit", sc.pos)


def _parse_loop_factor(sc: _Scanner) -> LoopWord:
    atom = _parse_loop_atom(sc)
    if sc.peek() == "^":
        sc.take()
        n = sc.integer()
        if abs(n) * max(1, len(atom)) > MAX_LETTERS:
            raise WordSyntaxError("exponent overflow", sc.pos)
        return atom ** n
    return atom


def _parse_loop_atom(sc: _Scanner) -> LoopWord:
    start = sc.pos
    ch = sc.take()
    if ch == "x":
        return LoopWord((("x", 1),))
    if ch == "X":
        return LoopWord((("x", -1),))
    if ch == "y":
        return LoopWord((("y", 1),))
    if ch == "Y":
        return LoopWord((("y", -1),))
    if ch == "(":
        inner = _parse_loop_word(sc, top=False)
        if sc.peek() != ")":
            raise WordSyntaxError("expected ')'", sc.pos)
        sc.take()
        return inner
    if ch == "[":
        a = _parse_loop_word(sc, top=False)
        if sc.peek() != ",":
            raise WordSyntaxError("expected ',' in commutator", sc.pos)
        sc.take()
        b = _parse_loop_word(sc, top=False)
        if sc.peek() != "]":
            raise WordSyntaxError("expected ']'", sc.pos)
        sc.take()
        return a + b + a.inverse() + b.inverse()
    raise WordSyntaxError(f"unexpected character {ch!r}", start)


def parse_artin(text: str) -> BraidWord:
    """Parse an Artin word; rejects words with a non-identity permutation."""
    sc = _Scanner(text)
    letters: list[tuple[int, int]] = []
    while True:
        ch = sc.peek()
        if ch is None:
            break
        start = sc.pos
        if ch != "s":
            raise WordSyntaxError(f"expected generator, found {ch!r}", start)
        sc.take()
        idx_ch = sc.take()
        if idx_ch not in "123":
            raise WordSyntaxError(f"generator index must be 1..3, found {idx_ch!r}",
                                  sc.pos - 1)
        i = int(idx_ch)
        exp = 1
        if sc.peek() == "^":
            sc.take()
            exp = sc.integer()
        if abs(exp) + len(letters) > MAX_LETTERS:
            raise WordSyntaxError("exponent overflow", sc.pos)
        letters.extend([(i, 1 if exp > 0 else -1)] * abs(exp))
    return BraidWord(tuple(letters))


def _arc(center: complex, radius: float, theta0: float, theta1: float,
         count: int) -> np.ndarray:
    angles = theta0 + (theta1 - theta0) * np.arange(count) / count
    return center + radius * np.exp(1j * angles)


def _seg(a: complex, b: complex, count: int) -> np.ndarray:
    return a + (b - a) * np.arange(count) / count


def _allocate(budget: int, lengths: list[float], minima: list[int]) -> list[int]:
    """Split a sample budget across legs, proportionally to length but never
    below each leg's minimum."""
    floor_total = sum(minima)
    if budget < floor_total:
        raise ValueError(f"budget {budget} below the {floor_total} samples needed")
    total = sum(lengths)
    counts = [max(m, round(budget * length / total))
              for length, m in zip(lengths, minima)]
    order = sorted(range(len(lengths)), key=lambda i: -lengths[i])
    i = 0
    while sum(counts) > budget:
        j = order[i % len(order)]
        if counts[j] > minima[j]:
            counts[j] -= 1
        i += 1
    i = 0
    while sum(counts) < budget:
        counts[order[i % len(order)]] += 1
        i += 1
    return counts


def _letter_loop(gen: str, sign: int, budget: int) -> np.ndarray:
    """One closed letter loop from the base point, sampled half-open.

    The x-loop runs along the real axis with a small semicircular detour above
    the puncture at 1 (the straight approach would cross it), circles the
    origin, and retraces; the y-loop reaches its circle directly.
    """
    rd = DETOUR_RADIUS
    if gen == "x":
        r = RADIUS_ABOUT_0
        legs = [
            ("seg", (BASE_POINT, 1 + rd), abs(BASE_POINT - (1 + rd)), 1),
            ("arc", (1.0, rd, 0.0, math.pi), math.pi * rd,
             math.ceil(math.pi / MAX_ARC_STEP)),
            ("seg", (1 - rd, r), abs((1 - rd) - r), 1),
            ("arc", (0.0, r, 0.0, sign * 2 * math.pi), 2 * math.pi * r,
             math.ceil(2 * math.pi / MAX_ARC_STEP)),
            ("seg", (r, 1 - rd), abs(r - (1 - rd)), 1),
            ("arc", (1.0, rd, math.pi, 0.0), math.pi * rd,
             math.ceil(math.pi / MAX_ARC_STEP)),
            ("seg", (1 + rd, BASE_POINT), abs((1 + rd) - BASE_POINT), 1),
        ]
    else:
        r = RADIUS_ABOUT_1
        legs = [
            ("seg", (BASE_POINT, 1 + r), abs(BASE_POINT - (1 + r)), 1),
            ("arc", (1.0, r, 0.0, sign * 2 * math.pi), 2 * math.pi * r,
             math.ceil(2 * math.pi / MAX_ARC_STEP)),
            ("seg", (1 + r, BASE_POINT), abs((1 + r) - BASE_POINT), 1),
        ]
    counts = _allocate(budget, [leg[2] for leg in legs], [leg[3] for leg in legs])
    pieces = []
    for (kind, params, _, _), count in zip(legs, counts):
        if kind == "seg":
            a, b = params
            pieces.append(_seg(complex(a), complex(b), count))
        else:
            c, radius, t0, t1 = params
            pieces.append(_arc(complex(c), radius, t0, t1, count))
    return np.concatenate(pieces)


def realize_loop(word: LoopWord, samples_per_letter: int = 512) -> SphericalBraid:
    """Realize a loop word: strands 1-3 constant at 0, 1, inf; strand 4
    traces one closed loop per letter from the base point 2.

    Total sample count is ``max(8, len(word)) * samples_per_letter``; each
    letter's loop closes back at the base point, so winding contributions are
    additive letter by letter.
    """
    if samples_per_letter < MIN_SAMPLES_PER_LETTER:
        raise ValueError(
            f"samples_per_letter must be at least {MIN_SAMPLES_PER_LETTER}"
        )
    n_letters = len(word)
    total = max(8, n_letters) * samples_per_letter
    if n_letters == 0:
        strand4 = np.full(total, BASE_POINT, dtype=np.complex128)
    else:
        base = total // n_letters
        rem = total % n_letters
        chunks = [
            _letter_loop(gen, sign, base + (1 if i < rem else 0))
            for i, (gen, sign) in enumerate(word.letters)
        ]
        strand4 = np.concatenate(chunks)
    n = strand4.shape[0]
    return SphericalBraid.from_complex([
        [0j] * n,
        [1 + 0j] * n,
        [None] * n,
        list(strand4),
    ])


def realize_artin(word: BraidWord, samples_per_generator: int = 512) -> SphericalBraid:
    """Realize a pure Artin word as strand curves on the unit circle.

    Each unit letter occupies one time slot in which the strands at lanes
    ``i`` and ``i+1`` swap by a half-twist (counterclockwise for positive
    letters) around the lane midpoint; all other strands hold still.
    """
    if samples_per_generator < MIN_SAMPLES_PER_GENERATOR:
        raise ValueError(
            f"samples_per_generator must be at least {MIN_SAMPLES_PER_GENERATOR}"
        )
    n_letters = len(word)
    if n_letters == 0:
        return SphericalBraid.from_complex([[lane] * 8 for lane in ARTIN_LANES])
    spg = samples_per_generator
    n = n_letters * spg
    strands = np.empty((4, n), dtype=np.complex128)
    occupant = [0, 1, 2, 3]  # occupant[lane] = strand index
    tau = np.arange(spg) / spg
    for slot, (i, sign) in enumerate(word.letters):
        lo, hi = i - 1, i
        sl = slice(slot * spg, (slot + 1) * spg)
        for lane in range(4):
            if lane not in (lo, hi):
                strands[occupant[lane], sl] = ARTIN_LANES[lane]
        mid = 0.5 * (ARTIN_LANES[lo] + ARTIN_LANES[hi])
        rot = np.exp(1j * sign * math.pi * tau)
        strands[occupant[lo], sl] = mid + (ARTIN_LANES[lo] - mid) * rot
        strands[occupant[hi], sl] = mid + (ARTIN_LANES[hi] - mid) * rot
        occupant[lo], occupant[hi] = occupant[hi], occupant[lo]
    assert occupant == [0, 1, 2, 3], "pure word must restore the lane occupancy"
    return SphericalBraid.from_complex([list(s) for s in strands])


def random_balanced_loop_word(rng: random.Random, core_length: int = 6) -> LoopWord:
    """A random loop word with zero exponent sums (a Brunn-class word)."""
    gens = [("x", 1), ("x", -1), ("y", 1), ("y", -1)]
    letters = [rng.choice(gens) for _ in range(core_length)]
    word = LoopWord(tuple(letters))
    ex, ey = word.exponent_sums()
    tail = [("x", -1)] * max(ex, 0) + [("x", 1)] * max(-ex, 0)
    tail += [("y", -1)] * max(ey, 0) + [("y", 1)] * max(-ey, 0)
    return LoopWord(word.letters + tuple(tail))


def random_pure_artin_word(rng: random.Random, syllables: int = 3) -> BraidWord:
    """A random pure Artin word: a product of conjugated generator squares."""
    letters: list[tuple[int, int]] = []
    for _ in range(syllables):
        conj = [(rng.randint(1, 3), rng.choice((1, -1)))
                for _ in range(rng.randint(0, 2))]
        core = (rng.randint(1, 3), rng.choice((1, -1)))
        letters.extend(conj)
        letters.extend([core, core])
        letters.extend((i, -s) for i, s in reversed(conj))
    return BraidWord(tuple(letters))
