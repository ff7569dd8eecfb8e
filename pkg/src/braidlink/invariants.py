"""Public invariant layer: first-order linking numbers, the zero-linking gate,
the second-order Hopf invariant, and the empirical relabeling table.

The first-order invariant of a braid is the winding number of its normalized
strand-4 curve about 0; the pair ``(lk(f), lk(tilde(f)))`` is a homomorphism
to Z + Z, and the Hopf invariant is defined exactly on its kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import words
from .braid import SphericalBraid, act, tilde
from .errors import ConsistencyError, ConvergenceError, DegenerateSampleError
from .integrate import (
    DEFAULT_SETTINGS,
    QuadratureSettings,
    hopf_details,
    lambda_profile,
    winding_discrete,
    winding_quadrature,
)
from .mobius import NormalizedPath, normalize
from .permutations import Permutation, all_permutations

#: A computed raw Hopf value farther than this from an integer is rejected
#: outright rather than rounded; kept far above the quadrature tolerance so a
#: misconverged integral can never snap to a wrong integer silently.
INTEGER_SNAP = 0.1


class TotalLinking(NamedTuple):
    """The pair of first-order linking numbers (lk(f), lk(tilde(f)))."""

    lk: int
    lk_tilde: int

    @property
    def is_zero(self) -> bool:
        return self.lk == 0 and self.lk_tilde == 0


@dataclass(frozen=True)
class Diagnostics:
    convergence_residual: float | None
    byparts_residual: float | None
    input_samples: int
    path_samples: int


@dataclass(frozen=True)
class InvariantReport:
    """Everything the library knows about one braid."""

    total: TotalLinking
    brunn: bool
    hopf_raw: float | None
    hopf: int | None
    diagnostics: Diagnostics


def _lk_of_path(path: NormalizedPath,
                settings: QuadratureSettings = DEFAULT_SETTINGS) -> int:
    """Winding about 0 via quadrature, cross-checked against the exact
    log-increment oracle; the two routes must agree."""
    oracle = winding_discrete(path, 0)
    quad = winding_quadrature(path, 0, settings)
    if round(quad) != oracle or abs(quad - oracle) > 1e-6:
        raise ConsistencyError(
            f"winding quadrature {quad!r} disagrees with oracle {oracle}"
        )
    return oracle


def lk(f: SphericalBraid, settings: QuadratureSettings = DEFAULT_SETTINGS) -> int:
    """First-order linking number: winding of the normalized curve about 0."""
    return _lk_of_path(normalize(f), settings)


def total_lk(f: SphericalBraid,
             settings: QuadratureSettings = DEFAULT_SETTINGS) -> TotalLinking:
    return TotalLinking(lk(f, settings), lk(tilde(f), settings))


def is_brunn(f: SphericalBraid) -> bool:
    """Whether the braid has zero total linking (the Hopf invariant's domain)."""
    return total_lk(f).is_zero


def hopf(f: SphericalBraid, settings: QuadratureSettings = DEFAULT_SETTINGS,
         start: float = 0.0) -> InvariantReport:
    """Full invariant report; the Hopf value is present only when the total
    linking vanishes.

    On the zero-linking subgroup the raw value is computed by quadrature,
    cross-checked against both one-sided integration-by-parts evaluations, and
    snapped to the nearest integer only if it lies within ``INTEGER_SNAP``.
    """
    path = normalize(f)
    lk_f = _lk_of_path(path, settings)
    path_tilde = normalize(tilde(f))
    lk_t = _lk_of_path(path_tilde, settings)
    total = TotalLinking(lk_f, lk_t)
    if not total.is_zero:
        return InvariantReport(
            total=total, brunn=False, hopf_raw=None, hopf=None,
            diagnostics=Diagnostics(None, None, f.sample_count, path.sample_count),
        )
    l0 = lambda_profile(path, 0, start)
    l1 = lambda_profile(path, 1, start)
    ev = hopf_details(path, l0, l1, settings)
    raw = ev.value
    a, mb = ev.one_sided
    byparts_residual = max(abs(a - raw), abs(mb - raw))
    if byparts_residual >= 2.0 * settings.tol:
        raise ConvergenceError(
            f"one-sided integrals {a!r}, {mb!r} disagree with {raw!r}",
            values=(a, mb, raw),
        )
    nearest = round(raw)
    if abs(raw - nearest) >= INTEGER_SNAP:
        raise ConvergenceError(
            f"raw Hopf value {raw!r} is not near an integer", values=(raw,)
        )
    return InvariantReport(
        total=total, brunn=True, hopf_raw=raw, hopf=int(nearest),
        diagnostics=Diagnostics(
            convergence_residual=ev.refine_residual,
            byparts_residual=byparts_residual,
            input_samples=f.sample_count,
            path_samples=path.sample_count,
        ),
    )


@dataclass(frozen=True)
class TransformTable:
    """Empirical transformation law of lk under all 24 relabelings.

    ``matrix(sigma)`` is the integer 2x2 matrix M with
    ``(lk(sigma.f), lk(tilde(sigma.f))) == M @ (lk(f), lk(tilde(f)))`` on every
    sampled braid; ``row(sigma)`` is its first row.  ``consistent`` is False if
    some relabeling admitted no exact integer linear fit.
    """

    matrices: dict[Permutation, tuple[tuple[int, int], tuple[int, int]]]
    consistent: bool
    sample_count: int
    seed: int

    def row(self, sigma: Permutation) -> tuple[int, int]:
        return self.matrices[sigma][0]

    def matrix(self, sigma: Permutation) -> np.ndarray:
        return np.array(self.matrices[sigma], dtype=np.int64)

    def is_multiplicative(self) -> bool:
        """Check M(sigma tau) == M(sigma) M(tau) over all 24 x 24 products."""
        perms = list(self.matrices)
        for s in perms:
            for t in perms:
                if not np.array_equal(self.matrix(s * t),
                                      self.matrix(s) @ self.matrix(t)):
                    return False
        return True


def _fit_integer_row(inputs: np.ndarray, outputs: np.ndarray) -> tuple[int, int] | None:
    sol, *_ = np.linalg.lstsq(inputs.astype(float), outputs.astype(float), rcond=None)
    a, b = int(round(sol[0])), int(round(sol[1]))
    if np.array_equal(inputs @ np.array([a, b]), outputs):
        return a, b
    return None


def transform_table(sample_count: int = 6, seed: int = 0,
                    samples_per_generator: int = 64,
                    settings: QuadratureSettings = DEFAULT_SETTINGS) -> TransformTable:
    """Determine empirically how lk transforms under strand relabeling.

    Random pure Artin braids are generated until their linking vectors span
    Z^2; for each permutation the integer coefficients are fit by least squares
    and verified exactly on every sample.
    """
    if sample_count < 4:
        raise ValueError("need at least 4 sample braids")
    rng = random.Random(seed)
    for _ in range(8):
        braids = [
            words.realize_artin(words.random_pure_artin_word(rng, syllables=3),
                                samples_per_generator)
            for _ in range(sample_count)
        ]
        base = np.array([[lk(b, settings), lk(tilde(b), settings)] for b in braids])
        if np.linalg.matrix_rank(base) == 2:
            break
    else:
        raise DegenerateSampleError("random braids never spanned the linking lattice")

    swap = Permutation.transposition(1, 2)
    lk_sigma: dict[Permutation, np.ndarray] = {}
    for sigma in all_permutations():
        lk_sigma[sigma] = np.array(
            [lk(act(sigma, b), settings) for b in braids]
        )
    matrices = {}
    consistent = True
    for sigma in all_permutations():
        top = _fit_integer_row(base, lk_sigma[sigma])
        bottom = _fit_integer_row(base, lk_sigma[swap * sigma])
        if top is None or bottom is None:
            consistent = False
            top = top or (0, 0)
            bottom = bottom or (0, 0)
        matrices[sigma] = (top, bottom)
    return TransformTable(matrices=matrices, consistent=consistent,
                          sample_count=sample_count, seed=seed)
