"""Ordered spherical braids as sampled strand curves on the Riemann sphere.

A braid holds ``n_strands`` closed curves sampled on a common uniform time
grid ``t_k = 2*pi*k/N``; closure is by wraparound (sample ``N`` equals sample
``0`` implicitly).  Points live on the Riemann sphere and are stored in
homogeneous coordinates ``(u, v)`` with ``z = u/v`` and ``(1, 0)`` for the
point at infinity, so Mobius arithmetic and chordal distances never need a
large-magnitude stand-in for infinity.

All types are immutable values and all operations are pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BaseMismatchError, ValidationError
from .permutations import SWAP_FIRST_TWO, Permutation

#: Default minimum pairwise chordal separation between strands.
EPS_SEP = 1e-6

#: Minimum number of time samples for a braid.
MIN_SAMPLES = 8

#: Chordal tolerance for base-configuration agreement in `compose`.
BASE_TOL = 1e-9


@dataclass(frozen=True)
class RiemannPoint:
    """A point of the Riemann sphere: a finite complex number or infinity.

    The point at infinity is a distinct tag, never a large float.
    """

    re: float = 0.0
    im: float = 0.0
    infinite: bool = False

    def __post_init__(self):
        if self.infinite:
            object.__setattr__(self, "re", 0.0)
            object.__setattr__(self, "im", 0.0)
        elif not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValidationError(f"non-finite coordinates ({self.re}, {self.im})")

    @staticmethod
    def finite(z: complex) -> "RiemannPoint":
        z = complex(z)
        return RiemannPoint(z.real, z.imag)

    @staticmethod
    def infinity() -> "RiemannPoint":
        return RiemannPoint(infinite=True)

    @property
    def z(self) -> complex:
        if self.infinite:
            raise ValueError("point at infinity has no finite value")
        return complex(self.re, self.im)

    def homogeneous(self) -> tuple[complex, complex]:
        """Homogeneous coordinates (u, v) with z = u/v: (z, 1) when finite,
        (1, 0) at infinity, so chart values survive round trips exactly."""
        if self.infinite:
            return (1.0 + 0.0j, 0.0j)
        return (complex(self.re, self.im), 1.0 + 0.0j)

    def __repr__(self) -> str:
        return "RiemannPoint(inf)" if self.infinite else f"RiemannPoint({self.z})"


INFINITY = RiemannPoint.infinity()


def chordal_distance(p: RiemannPoint, q: RiemannPoint) -> float:
    """Chordal (unit-sphere, diameter 2) distance between two points."""
    up, vp = p.homogeneous()
    uq, vq = q.homogeneous()
    np_, nq = math.hypot(abs(up), abs(vp)), math.hypot(abs(uq), abs(vq))
    return 2.0 * abs(up * vq - uq * vp) / (np_ * nq)


def _hom_from_points(points: Iterable[RiemannPoint]) -> np.ndarray:
    rows = [p.homogeneous() for p in points]
    return np.array(rows, dtype=np.complex128)


def _row_norms(hom: np.ndarray) -> np.ndarray:
    # hypot avoids overflow when |u| is huge (points far out in the chart)
    return np.hypot(np.abs(hom[..., 0]), np.abs(hom[..., 1]))


@dataclass(frozen=True, eq=False)
class SphericalBraid:
    """Ordered closed strand curves with a common sample count.

    ``hom`` has shape (n_strands, N, 2): projective homogeneous coordinates
    per strand per sample, ``(z, 1)`` for chart points and ``(1, 0)`` at
    infinity.  Instances are immutable; the array is read-only.
    """

    hom: np.ndarray

    def __post_init__(self):
        if self.hom.ndim != 3 or self.hom.shape[2] != 2:
            raise ValidationError(f"bad strand array shape {self.hom.shape}")
        if not np.all(np.isfinite(self.hom.view(np.float64))):
            raise ValidationError("NaN or Inf in strand coordinates")
        self.hom.setflags(write=False)

    @property
    def n_strands(self) -> int:
        return self.hom.shape[0]

    @property
    def sample_count(self) -> int:
        return self.hom.shape[1]

    @staticmethod
    def from_points(strands: Sequence[Sequence[RiemannPoint]]) -> "SphericalBraid":
        lengths = {len(s) for s in strands}
        if len(lengths) != 1:
            raise ValidationError(f"strand lengths differ: {sorted(lengths)}")
        arr = np.stack([_hom_from_points(s) for s in strands])
        return SphericalBraid(arr)

    @staticmethod
    def from_complex(strands: Sequence[Sequence[complex | None]]) -> "SphericalBraid":
        """Build from chart values; ``None`` marks the point at infinity."""
        return SphericalBraid.from_points(
            [
                [INFINITY if z is None else RiemannPoint.finite(z) for z in strand]
                for strand in strands
            ]
        )

    @staticmethod
    def constant(points: Sequence[RiemannPoint], samples: int = MIN_SAMPLES) -> "SphericalBraid":
        rows = _hom_from_points(points)
        arr = np.repeat(rows[:, None, :], samples, axis=1)
        return SphericalBraid(arr)

    def point(self, strand: int, sample: int) -> RiemannPoint:
        """Strand and sample are 1-based / 0-based respectively."""
        u, v = self.hom[strand - 1, sample]
        if v == 0:
            return INFINITY
        return RiemannPoint.finite(u / v)

    def strand_chart(self, strand: int) -> np.ndarray:
        """Chart values of one strand; raises if the strand touches infinity."""
        u = self.hom[strand - 1, :, 0]
        v = self.hom[strand - 1, :, 1]
        if np.any(v == 0):
            raise ValueError(f"strand {strand} passes through infinity")
        return u / v

    def infinite_mask(self, strand: int) -> np.ndarray:
        return self.hom[strand - 1, :, 1] == 0

    def __repr__(self) -> str:
        return f"SphericalBraid(strands={self.n_strands}, samples={self.sample_count})"


def _pairwise_chordal(hom: np.ndarray, i: int, j: int) -> np.ndarray:
    cross = hom[i, :, 0] * hom[j, :, 1] - hom[j, :, 0] * hom[i, :, 1]
    return 2.0 * np.abs(cross) / (_row_norms(hom[i]) * _row_norms(hom[j]))


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    eps_sep: float
    min_separation: float
    violation: tuple[int, int, int] | None = None  # (sample, strand_i, strand_j)


def validate(braid: SphericalBraid, eps_sep: float = EPS_SEP) -> ValidationResult:
    """Check pairwise chordal separation at every sample.

    Structural defects (sample count below the minimum, non-finite data) raise
    :class:`ValidationError`; a separation failure is reported, not raised.
    """
    if braid.sample_count < MIN_SAMPLES:
        raise ValidationError(
            f"need at least {MIN_SAMPLES} samples, got {braid.sample_count}"
        )
    n = braid.n_strands
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    dists = np.stack([_pairwise_chordal(braid.hom, i, j) for i, j in pairs])
    min_sep = float(dists.min())
    if min_sep >= eps_sep:
        return ValidationResult(True, eps_sep, min_sep)
    # First violating sample, then first violating pair at that sample.
    bad_samples = np.flatnonzero((dists < eps_sep).any(axis=0))
    k = int(bad_samples[0])
    p = int(np.flatnonzero(dists[:, k] < eps_sep)[0])
    i, j = pairs[p]
    return ValidationResult(False, eps_sep, min_sep, (k, i + 1, j + 1))


def require_valid(braid: SphericalBraid, eps_sep: float = EPS_SEP) -> None:
    result = validate(braid, eps_sep)
    if not result.ok:
        k, i, j = result.violation
        raise ValidationError(
            f"strands {i} and {j} closer than {eps_sep} at sample {k} "
            f"(chordal {result.min_separation:.3e})",
            sample=k, strands=(i, j),
        )


def compose(f: SphericalBraid, g: SphericalBraid, base_tol: float = BASE_TOL) -> SphericalBraid:
    """Group law: traverse ``f`` then ``g``, concatenating their sample blocks.

    Both braids must share the base configuration (samples at k=0) strand-wise;
    the result carries ``N_f + N_g`` samples on a uniform grid, which realizes
    the run-one-then-the-other loop up to monotone reparametrization.
    """
    if f.n_strands != g.n_strands:
        raise ValidationError("strand counts differ")
    for i in range(f.n_strands):
        fu, fv = f.hom[i, 0]
        gu, gv = g.hom[i, 0]
        norms = math.hypot(abs(fu), abs(fv)) * math.hypot(abs(gu), abs(gv))
        if 2.0 * abs(fu * gv - gu * fv) / norms > base_tol:
            raise BaseMismatchError(
                f"base configurations differ on strand {i + 1}", strands=(i + 1, i + 1)
            )
    return SphericalBraid(np.concatenate([f.hom, g.hom], axis=1))


def inverse(f: SphericalBraid) -> SphericalBraid:
    """Time-reversed braid; the base configuration stays at sample 0."""
    idx = (-np.arange(f.sample_count)) % f.sample_count
    return SphericalBraid(f.hom[:, idx, :])


def act(sigma: Permutation, f: SphericalBraid) -> SphericalBraid:
    """Relabel components: output strand j carries the input strand that
    ``sigma`` sends to label j (i.e. input strand ``sigma^{-1}(j)``)."""
    if f.n_strands != 4:
        raise ValidationError("permutation action is defined on 4-strand braids")
    inv = sigma.inverse()
    order = [inv(j) - 1 for j in (1, 2, 3, 4)]
    return SphericalBraid(f.hom[order])


def tilde(f: SphericalBraid) -> SphericalBraid:
    """The braid with components 1 and 2 exchanged."""
    return act(SWAP_FIRST_TWO, f)


def eliminate_last(f: SphericalBraid) -> SphericalBraid:
    """Drop the last strand, keeping the others untouched."""
    if f.n_strands < 2:
        raise ValidationError("nothing to eliminate")
    return SphericalBraid(f.hom[:-1])


def _chart_or_none(u: complex, v: complex) -> complex | None:
    return None if v == 0 else u / v


def _sphere_xyz(u: complex, v: complex) -> np.ndarray:
    # Projective (u, v) -> point on the unit 2-sphere.
    n2 = abs(u) ** 2 + abs(v) ** 2
    x = 2.0 * (u * np.conj(v)).real / n2
    y = 2.0 * (u * np.conj(v)).imag / n2
    z = (abs(u) ** 2 - abs(v) ** 2) / n2
    return np.array([x, y, z])


def midpoint_hom(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Midpoint of two sphere points: chart midpoint when both are finite,
    the point itself when both are at infinity, spherical midpoint otherwise."""
    up, vp = p
    uq, vq = q
    if vp == 0 and vq == 0:
        return np.array([1.0 + 0.0j, 0.0j])
    if vp != 0 and vq != 0:
        z = 0.5 * (up / vp + uq / vq)
        return np.array(RiemannPoint.finite(z).homogeneous())
    xyz = _sphere_xyz(up, vp) + _sphere_xyz(uq, vq)
    norm = np.linalg.norm(xyz)
    if norm == 0.0:
        # Antipodal; any perpendicular direction works, pick the chart origin.
        return np.array(RiemannPoint.finite(0.0).homogeneous())
    x, y, z = xyz / norm
    if z >= 1.0 - 1e-15:
        return np.array([1.0 + 0.0j, 0.0j])
    w = complex(x, y) / (1.0 - z)
    return np.array(RiemannPoint.finite(w).homogeneous())


def insert_midpoints(f: SphericalBraid, segments: np.ndarray) -> SphericalBraid:
    """Insert one time sample in the middle of each flagged segment.

    ``segments`` is a boolean mask over the N wraparound segments; all strands
    receive the new samples so the common grid is preserved.
    """
    n, N, _ = f.hom.shape
    extra = int(segments.sum())
    out = np.empty((n, N + extra, 2), dtype=np.complex128)
    pos = 0
    for k in range(N):
        out[:, pos] = f.hom[:, k]
        pos += 1
        if segments[k]:
            nxt = (k + 1) % N
            for s in range(n):
                out[s, pos] = midpoint_hom(f.hom[s, k], f.hom[s, nxt])
            pos += 1
    return SphericalBraid(out)


def reparametrize(f: SphericalBraid, rng, max_extra_per_segment: int = 2) -> SphericalBraid:
    """Resample the same strand polylines at a random monotone time map.

    Each segment receives 0..max_extra extra samples at random interior
    parameters (shared across strands), leaving the geometric curves and all
    invariants unchanged.
    """
    n, N, _ = f.hom.shape
    cols = []
    for k in range(N):
        cols.append(f.hom[:, k, :])
        nxt = (k + 1) % N
        params = sorted(rng.uniform(0.05, 0.95)
                        for _ in range(rng.randint(0, max_extra_per_segment)))
        for t in params:
            col = np.empty((n, 2), dtype=np.complex128)
            for s in range(n):
                u0, v0 = f.hom[s, k]
                u1, v1 = f.hom[s, nxt]
                z0 = _chart_or_none(u0, v0)
                z1 = _chart_or_none(u1, v1)
                if z0 is None and z1 is None:
                    col[s] = (1.0, 0.0)
                elif z0 is not None and z1 is not None:
                    col[s] = RiemannPoint.finite((1 - t) * z0 + t * z1).homogeneous()
                else:
                    col[s] = midpoint_hom(f.hom[s, k], f.hom[s, nxt])
            cols.append(col)
    return SphericalBraid(np.stack(cols, axis=1))


def perturb(f: SphericalBraid, rng, magnitude: float = 1e-3,
            eps_sep: float = EPS_SEP) -> SphericalBraid:
    """Jitter every finite sample by at most ``magnitude`` in the chart.

    Points at infinity are left untouched.  The perturbed braid is validated;
    a separation failure raises, so callers can retry with a smaller magnitude.
    """
    n, N, _ = f.hom.shape
    out = np.empty_like(f.hom)
    for s in range(n):
        for k in range(N):
            u, v = f.hom[s, k]
            if v == 0:
                out[s, k] = (1.0, 0.0)
            else:
                r = magnitude * math.sqrt(rng.uniform(0.0, 1.0))
                phi = rng.uniform(0.0, 2.0 * math.pi)
                z = u / v + r * cmath.exp(1j * phi)
                out[s, k] = RiemannPoint.finite(z).homogeneous()
    g = SphericalBraid(out)
    require_valid(g, eps_sep)
    return g


def braids_equal(f: SphericalBraid, g: SphericalBraid, tol: float = 0.0) -> bool:
    """Sample-wise chordal equality of two braids."""
    if f.hom.shape != g.hom.shape:
        return False
    cross = f.hom[..., 0] * g.hom[..., 1] - g.hom[..., 0] * f.hom[..., 1]
    dist = 2.0 * np.abs(cross) / (_row_norms(f.hom) * _row_norms(g.hom))
    return bool(np.all(dist <= tol))
