"""Branch-tracked line integrals along normalized paths.

Winding numbers come from exact principal-branch log increments per segment;
the second-order (Hopf) integrand is integrated segment-by-segment with
Gauss-Legendre nodes, reconstructing the winding angles at interior nodes from
the segment start value.  Both rest on the branch-density condition of
:class:`~braidlink.mobius.NormalizedPath`: no segment subtends a quarter turn
or more about either puncture.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BranchTrackingError, ConvergenceError, GateError
from .mobius import DELTA_POLE, MAX_TURN, NormalizedPath

#: Tolerance for the integer-holonomy assertion on closed paths.
HOLONOMY_TOL = 1e-9

_POLES = {0: 0.0 + 0.0j, 1: 1.0 + 0.0j}


@dataclass(frozen=True)
class QuadratureSettings:
    """Gauss-Legendre order per segment, refinement factor, and tolerance."""

    order: int = 8
    refine_factor: int = 2
    tol: float = 1e-4

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if self.refine_factor < 2:
            raise ValueError("refine_factor must be at least 2")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True, eq=False)
class LambdaProfile:
    """Continuously tracked winding angle about one puncture, in turns.

    ``values`` has one entry per sample plus the wraparound endpoint, so
    ``values[-1] - values[0]`` is the integer winding number of the path.
    """

    pole: int
    values: np.ndarray
    start: float

    def __post_init__(self):
        self.values.flags.writeable = False

    @property
    def winding(self) -> int:
        return int(round(float(self.values[-1] - self.values[0])))

    @property
    def segment_count(self) -> int:
        return self.values.shape[0] - 1


def _pole_value(pole: int) -> complex:
    if pole not in _POLES:
        raise ValueError("pole must be 0 or 1")
    return _POLES[pole]


def _fractions(path: NormalizedPath, pole: int) -> np.ndarray:
    fr = kernels.turn_fractions(path.closed(), _pole_value(pole))
    worst = float(np.max(np.abs(fr))) if fr.size else 0.0
    if worst >= MAX_TURN:
        raise BranchTrackingError(
            f"segment increment {worst:.4f} turns about {pole} breaks branch density",
            residual=worst,
        )
    return fr


def winding_discrete(path: NormalizedPath, pole: int) -> int:
    """Winding number about a puncture from exact per-segment arg increments.

    This is the independent oracle for the quadrature route: it uses no
    quadrature, only principal-branch logs, and asserts the total is an
    integer to within ``HOLONOMY_TOL``.
    """
    total = float(np.sum(_fractions(path, pole)))
    nearest = round(total)
    if abs(total - nearest) > HOLONOMY_TOL:
        raise BranchTrackingError(
            f"winding about {pole} is {total!r}, not an integer",
            residual=abs(total - nearest),
        )
    return int(nearest)


def winding_quadrature(path: NormalizedPath, pole: int,
                       settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Winding number via Gauss-Legendre quadrature of the winding form."""
    d = np.abs(path.gamma - _pole_value(pole))
    if np.any(d < DELTA_POLE):
        raise BranchTrackingError(f"path within {DELTA_POLE} of pole {pole}")
    return kernels.gl_turn_sweep(path.closed(), _pole_value(pole), settings.order)


def lambda_profile(path: NormalizedPath, pole: int, start: float = 0.0) -> LambdaProfile:
    """Cumulative winding angle about a puncture along the path.

    ``start`` fixes the value at the base point; the total increment over the
    closed path always equals the integer winding number, so on paths with
    zero winding the choice of ``start`` cancels out of every closed integral.
    """
    fr = _fractions(path, pole)
    values = np.empty(fr.shape[0] + 1, dtype=np.float64)
    values[0] = start
    np.cumsum(fr, out=values[1:])
    values[1:] += start
    total = float(values[-1] - values[0])
    if abs(total - round(total)) > HOLONOMY_TOL:
        raise BranchTrackingError(
            f"profile about {pole} accumulated {total!r}, not an integer",
            residual=abs(total - round(total)),
        )
    return LambdaProfile(pole=pole, values=values, start=start)


def _check_pair(path: NormalizedPath, l0: LambdaProfile, l1: LambdaProfile) -> None:
    if l0.pole != 0 or l1.pole != 1:
        raise ValueError("profiles must be about poles 0 and 1, in that order")
    if l0.segment_count != path.sample_count or l1.segment_count != path.sample_count:
        raise ValueError("profiles were not built on this path")


def _sweep(path: NormalizedPath, l0: LambdaProfile, l1: LambdaProfile,
           order: int) -> tuple[float, float]:
    return kernels.gl_pair_sweep(
        path.closed(), l0.values[:-1], l1.values[:-1], order
    )


@dataclass(frozen=True)
class HopfEvaluation:
    """One converged evaluation of the second-order integral.

    ``value`` is the refined (1/2)(A - B); ``one_sided`` holds (A, -B) with
    A the integral of lam0 d lam1 and B the integral of lam1 d lam0;
    ``refine_residual`` is the coarse-vs-fine disagreement.
    """

    value: float
    one_sided: tuple[float, float]
    refine_residual: float


def hopf_details(path: NormalizedPath, l0: LambdaProfile, l1: LambdaProfile,
                 settings: QuadratureSettings = DEFAULT_SETTINGS) -> HopfEvaluation:
    """Evaluate (1/2) * closed integral of (lam0 d lam1 - lam1 d lam0).

    Runs the sweep at the base order and once more at the refined order; the
    two combined values must agree within ``settings.tol``.
    """
    _check_pair(path, l0, l1)
    a1, b1 = _sweep(path, l0, l1, settings.order)
    a2, b2 = _sweep(path, l0, l1, settings.order * settings.refine_factor)
    coarse = 0.5 * (a1 - b1)
    fine = 0.5 * (a2 - b2)
    if abs(coarse - fine) >= settings.tol:
        raise ConvergenceError(
            f"quadrature did not converge: {coarse!r} vs {fine!r}",
            values=(coarse, fine),
        )
    return HopfEvaluation(value=fine, one_sided=(a2, -b2),
                          refine_residual=abs(coarse - fine))


def hopf_quadrature(path: NormalizedPath, l0: LambdaProfile, l1: LambdaProfile,
                    settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Half the antisymmetrized mixed winding integral along the path."""
    return hopf_details(path, l0, l1, settings).value


def hopf_byparts(path: NormalizedPath, l0: LambdaProfile, l1: LambdaProfile,
                 settings: QuadratureSettings = DEFAULT_SETTINGS) -> tuple[float, float]:
    """The two one-sided evaluations of the Hopf integral.

    Only defined on paths with zero winding about both punctures, where the
    mixed integrals satisfy the integration-by-parts identity; returns
    (integral of lam0 d lam1, minus integral of lam1 d lam0) and requires each
    to match :func:`hopf_quadrature` within twice the tolerance.
    """
    if l0.winding != 0 or l1.winding != 0:
        raise GateError(
            f"by-parts identity needs zero windings, got ({l0.winding}, {l1.winding})"
        )
    ev = hopf_details(path, l0, l1, settings)
    a, mb = ev.one_sided
    if abs(a - ev.value) >= 2.0 * settings.tol or abs(mb - ev.value) >= 2.0 * settings.tol:
        raise ConvergenceError(
            f"one-sided integrals {a!r}, {mb!r} disagree with {ev.value!r}",
            values=(a, mb, ev.value),
        )
    return a, mb
