"""Mobius normalization: pin strands 1, 2, 3 at 0, 1, infinity.

Per time sample the unique fractional-linear map sending the first three
strand points to (0, 1, inf) is applied to the fourth; the resulting closed
plane curve (the normalized path) avoids 0 and 1 and is the sole input to the
winding and Hopf integrals.  All projective arithmetic is homogeneous, so the
point at infinity needs no special casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .braid import (
    EPS_SEP,
    RiemannPoint,
    SphericalBraid,
    chordal_distance,
    insert_midpoints,
    require_valid,
)
from .errors import NormalizationError, ValidationError

#: Reject normalized samples closer than this to the punctures 0 and 1.
DELTA_POLE = 1e-4

#: Reject normalized samples of larger magnitude (the curve ran off to infinity).
R_MAX = 1e6

#: Branch-density limit per segment, in turns, as seen from either pole.
#: 1/8 turn keeps every principal-branch increment strictly below pi/4.
MAX_TURN = 0.125

#: Densification must not grow the sample count beyond this factor.
MAX_GROWTH = 64


@dataclass(frozen=True)
class MobiusMap:
    """Fractional-linear map z -> (a z + b) / (c z + d), applied projectively."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        if scale == 0.0 or not math.isfinite(scale):
            raise ValidationError("degenerate Mobius coefficients")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) / scale)
        if abs(self.a * self.d - self.b * self.c) < 1e-12:
            raise ValidationError("Mobius map is numerically singular")

    def apply(self, p: RiemannPoint) -> RiemannPoint:
        u, v = p.homogeneous()
        nu = self.a * u + self.b * v
        nv = self.c * u + self.d * v
        if nv == 0:
            return RiemannPoint.infinity()
        return RiemannPoint.finite(nu / nv)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply_hom(self, hom: np.ndarray) -> np.ndarray:
        """Apply to an (..., 2) homogeneous array, renormalizing rows."""
        out = np.empty_like(hom)
        out[..., 0] = self.a * hom[..., 0] + self.b * hom[..., 1]
        out[..., 1] = self.c * hom[..., 0] + self.d * hom[..., 1]
        norms = np.sqrt(np.abs(out[..., 0]) ** 2 + np.abs(out[..., 1]) ** 2)
        return out / norms[..., None]


def cross_ratio_map(z1: RiemannPoint, z2: RiemannPoint, z3: RiemannPoint,
                    eps_sep: float = EPS_SEP) -> MobiusMap:
    """The unique Mobius map sending z1, z2, z3 to 0, 1, infinity.

    Built from homogeneous coordinates, so any of the three anchors may be the
    point at infinity; the coefficients are the projective limit of the
    cross-ratio formula.
    """
    for p, q, names in ((z1, z2, "z1,z2"), (z1, z3, "z1,z3"), (z2, z3, "z2,z3")):
        if chordal_distance(p, q) < eps_sep:
            raise ValidationError(f"anchor points {names} nearly coincide")
    u1, v1 = z1.homogeneous()
    u2, v2 = z2.homogeneous()
    u3, v3 = z3.homogeneous()
    s = u2 * v3 - u3 * v2
    t = u2 * v1 - u1 * v2
    return MobiusMap(v1 * s, -u1 * s, v3 * t, -u3 * t)


def apply(m: MobiusMap, p: RiemannPoint) -> RiemannPoint:
    """Projective evaluation of a Mobius map at a sphere point."""
    return m.apply(p)


@dataclass(frozen=True, eq=False)
class NormalizedPath:
    """The strand-4 curve of a normalized braid: a closed polyline in C - {0, 1}.

    Every sample is finite, at least ``DELTA_POLE`` from both punctures, at
    most ``R_MAX`` in magnitude, and consecutive samples subtend less than a
    quarter turn about each puncture (so principal-branch log increments are
    the true continuous ones).
    """

    gamma: np.ndarray
    source: SphericalBraid | None = None
    source_samples: int = 0
    _skip_checks: bool = field(default=False, repr=False)

    def __post_init__(self):
        g = np.ascontiguousarray(self.gamma, dtype=np.complex128)
        object.__setattr__(self, "gamma", g)
        if not self._skip_checks:
            _check_margins(g)
            closed = self.closed()
            for pole in (0.0, 1.0):
                fr = kernels.turn_fractions(closed, pole)
                if np.max(np.abs(fr)) >= MAX_TURN:
                    k = int(np.argmax(np.abs(fr)))
                    raise NormalizationError(
                        f"segment {k} subtends too large an angle about {pole}",
                        sample=k,
                    )
        self.gamma.flags.writeable = False

    @property
    def sample_count(self) -> int:
        return self.gamma.shape[0]

    def closed(self) -> np.ndarray:
        """Samples with the first repeated at the end (wraparound made explicit)."""
        return np.concatenate([self.gamma, self.gamma[:1]])

    def to_braid(self) -> SphericalBraid:
        """The normalized braid itself: constants 0, 1, inf plus this curve."""
        n = self.sample_count
        zeros = [0j] * n
        ones = [1.0 + 0j] * n
        inf = [None] * n
        return SphericalBraid.from_complex([zeros, ones, inf, list(self.gamma)])

    @staticmethod
    def from_samples(gamma, source: SphericalBraid | None = None) -> "NormalizedPath":
        """Wrap an explicit closed polyline, refining it until branch-dense.

        Inserting chord midpoints leaves the polyline geometrically unchanged,
        so this densification is exact.
        """
        g = np.ascontiguousarray(gamma, dtype=np.complex128)
        _check_margins(g)
        n0 = g.shape[0]
        while True:
            closed = np.concatenate([g, g[:1]])
            bad = np.zeros(g.shape[0], dtype=bool)
            for pole in (0.0, 1.0):
                bad |= np.abs(kernels.turn_fractions(closed, pole)) >= MAX_TURN
            if not bad.any():
                break
            if g.shape[0] + int(bad.sum()) > MAX_GROWTH * n0:
                raise NormalizationError(
                    "path cannot be made branch-dense within the growth bound"
                )
            mid = 0.5 * (g + np.roll(g, -1))
            pieces = []
            for k in range(g.shape[0]):
                pieces.append(g[k])
                if bad[k]:
                    pieces.append(mid[k])
            g = np.array(pieces, dtype=np.complex128)
            _check_margins(g)
        return NormalizedPath(g, source=source,
                              source_samples=source.sample_count if source else n0)


def _check_margins(gamma: np.ndarray) -> None:
    if gamma.ndim != 1 or gamma.shape[0] < 1:
        raise NormalizationError("empty path")
    if not np.all(np.isfinite(gamma.view(np.float64))):
        k = int(np.flatnonzero(~np.isfinite(gamma.view(np.float64)))[0]) // 2
        raise NormalizationError("non-finite normalized sample", sample=k)
    mag = np.abs(gamma)
    if np.any(mag > R_MAX):
        k = int(np.argmax(mag))
        raise NormalizationError(
            f"normalized sample magnitude {mag[k]:.3e} exceeds {R_MAX:.0e}", sample=k
        )
    for pole in (0.0, 1.0):
        d = np.abs(gamma - pole)
        if np.any(d < DELTA_POLE):
            k = int(np.argmin(d))
            raise NormalizationError(
                f"normalized sample {k} within {DELTA_POLE} of {pole}", sample=k
            )


def _gamma_of(hom: np.ndarray) -> np.ndarray:
    """Per-sample cross-ratio image of strand 4 under the anchor map.

    ``hom`` is the (4, N, 2) homogeneous strand array.  The anchors map to
    0, 1, inf exactly by construction; only strand 4's image needs margins,
    which are checked by the caller.
    """
    u1, v1 = hom[0, :, 0], hom[0, :, 1]
    u2, v2 = hom[1, :, 0], hom[1, :, 1]
    u3, v3 = hom[2, :, 0], hom[2, :, 1]
    u, v = hom[3, :, 0], hom[3, :, 1]
    s = u2 * v3 - u3 * v2
    t = u2 * v1 - u1 * v2
    num = (u * v1 - u1 * v) * s
    den = (u * v3 - u3 * v) * t
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = num / den
    tiny = np.abs(den) * R_MAX < np.abs(num)
    if np.any(tiny):
        k = int(np.flatnonzero(tiny)[0])
        raise NormalizationError(
            f"normalized sample {k} beyond magnitude {R_MAX:.0e}", sample=k
        )
    return gamma


def normalize(f: SphericalBraid, eps_sep: float = EPS_SEP) -> NormalizedPath:
    """Normalize a 4-strand braid and return its strand-4 curve.

    Samples are inserted (midpoints of the source strand polylines, with the
    anchor map re-evaluated there) until consecutive curve samples satisfy the
    branch-density condition about both punctures; the sample count may grow
    by at most ``MAX_GROWTH``.
    """
    if f.n_strands != 4:
        raise ValidationError("normalization needs a 4-strand braid")
    require_valid(f, eps_sep)
    work = f
    n0 = f.sample_count
    while True:
        gamma = _gamma_of(work.hom)
        _check_margins(gamma)
        closed = np.concatenate([gamma, gamma[:1]])
        bad = np.zeros(gamma.shape[0], dtype=bool)
        for pole in (0.0, 1.0):
            bad |= np.abs(kernels.turn_fractions(closed, pole)) >= MAX_TURN
        if not bad.any():
            return NormalizedPath(gamma, source=f, source_samples=n0,
                                  _skip_checks=True)
        if work.sample_count + int(bad.sum()) > MAX_GROWTH * n0:
            raise NormalizationError(
                "densification exceeded the growth bound; "
                "input too close to a degenerate configuration"
            )
        work = insert_midpoints(work, bad)
