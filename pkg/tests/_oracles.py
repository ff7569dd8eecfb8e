"""Independent test oracles.

These deliberately avoid the library's numerical kernels: the depth-2 series
oracle is exact integer arithmetic on words, and the scalar winding tracker is
a plain Python loop.  Quadrature results are checked against them.
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

from braidlink.words import LoopWord


class Depth2(NamedTuple):
    """Truncated series coefficients of a loop word.

    ``ex``/``ey`` are the exponent sums (first-order winding numbers about the
    punctures 0 and 1); ``xy``/``yx`` are the two depth-2 coefficients.  For a
    balanced word the second-order invariant equals ``xy`` (and ``-yx``).
    """

    ex: int
    ey: int
    xy: int
    yx: int


_LETTER = {
    ("x", 1): Depth2(1, 0, 0, 0),
    ("x", -1): Depth2(-1, 0, 0, 0),
    ("y", 1): Depth2(0, 1, 0, 0),
    ("y", -1): Depth2(0, -1, 0, 0),
}


def depth2(word: LoopWord) -> Depth2:
    ex = ey = xy = yx = 0
    for letter in word.letters:
        d = _LETTER[letter]
        xy += ex * d.ey
        yx += ey * d.ex
        ex += d.ex
        ey += d.ey
    return Depth2(ex, ey, xy, yx)


def hopf_of_word(word: LoopWord) -> int:
    """Exact second-order invariant of a balanced loop word."""
    d = depth2(word)
    assert d.ex == 0 and d.ey == 0, "oracle only applies to balanced words"
    assert d.xy == -d.yx
    return d.xy


def winding_scalar(gamma, pole: complex) -> float:
    """Plain-Python continuous winding of a closed polyline, in turns."""
    total = 0.0
    n = len(gamma)
    for k in range(n):
        u = gamma[k] - pole
        v = gamma[(k + 1) % n] - pole
        total += cmath.phase(v / u)
    return total / (2.0 * cmath.pi)
