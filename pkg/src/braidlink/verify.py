"""Seeded verification sweeps over randomly generated braids.

Each suite checks one family of identities the invariants must satisfy
(oracle agreement, homomorphism laws, integrality, the by-parts identity, the
relabeling table) and reports pass counts plus the worst residual seen.
The CLI `verify` subcommand runs them all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from . import words
from .braid import act, compose
from .errors import BraidlinkError
from .integrate import QuadratureSettings, hopf_byparts, hopf_quadrature, lambda_profile
from .invariants import hopf, lk, total_lk, transform_table
from .mobius import normalize
from .permutations import KLEIN_FOUR, Permutation, all_permutations


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    max_residual: float = 0.0
    counterexample: dict[str, Any] | None = None
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, condition: bool, residual: float = 0.0,
              context: dict[str, Any] | None = None) -> None:
        self.max_residual = max(self.max_residual, abs(residual))
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = {"residual": residual, **(context or {})}

    def to_json_dict(self) -> dict[str, Any]:
        from .documents import sig12

        out: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "max_residual": sig12(self.max_residual),
        }
        out.update(self.notes)
        return out


def lk_oracle_suite(count: int, seed: int, samples: int,
                    settings: QuadratureSettings) -> SuiteResult:
    """Integral lk equals the discrete winding oracle; total_lk is additive."""
    rng = random.Random(seed)
    result = SuiteResult("lk_oracle")
    braids = []
    for n in range(count):
        word = words.random_pure_artin_word(rng, syllables=rng.randint(1, 3))
        braid = words.realize_artin(word, samples)
        braids.append((word, braid))
        try:
            lk(braid, settings)  # raises on any route disagreement
            result.check(True, context={"word": word.render()})
        except BraidlinkError as exc:
            result.check(False, context={"word": word.render(), "error": str(exc)})
    for i in range(0, len(braids) - 1, 2):
        (wa, a), (wb, b) = braids[i], braids[i + 1]
        lhs = total_lk(compose(a, b), settings)
        rhs_a, rhs_b = total_lk(a, settings), total_lk(b, settings)
        ok = (lhs.lk == rhs_a.lk + rhs_b.lk
              and lhs.lk_tilde == rhs_a.lk_tilde + rhs_b.lk_tilde)
        result.check(ok, context={"words": [wa.render(), wb.render()]})
    return result


def hopf_homomorphism_suite(count: int, seed: int, samples: int,
                            settings: QuadratureSettings) -> SuiteResult:
    rng = random.Random(seed + 1)
    result = SuiteResult("hopf_homomorphism")
    for n in range(count):
        wa = words.random_balanced_loop_word(rng, core_length=rng.randint(2, 6))
        wb = words.random_balanced_loop_word(rng, core_length=rng.randint(2, 6))
        context = {"words": [wa.render(), wb.render()]}
        try:
            a = words.realize_loop(wa, samples)
            b = words.realize_loop(wb, samples)
            ha = hopf(a, settings)
            hb = hopf(b, settings)
            hab = hopf(compose(a, b), settings)
            context["values"] = [ha.hopf, hb.hopf, hab.hopf]
            result.check(hab.hopf == ha.hopf + hb.hopf, context=context)
        except BraidlinkError as exc:
            result.check(False, context={**context, "error": str(exc)})
    return result


def integrality_and_byparts_suites(count: int, seed: int, samples: int,
                                   settings: QuadratureSettings
                                   ) -> tuple[SuiteResult, SuiteResult]:
    """Raw Hopf values sit on integers; one-sided evaluations agree with the
    combined integral.  One pass over the braids feeds both suites."""
    rng = random.Random(seed + 2)
    integrality = SuiteResult("hopf_integrality")
    byparts = SuiteResult("byparts_identity")
    for n in range(count):
        word = words.random_balanced_loop_word(rng, core_length=rng.randint(2, 8))
        try:
            braid = words.realize_loop(word, samples)
            report = hopf(braid, settings)
        except BraidlinkError as exc:
            context = {"word": word.render(), "error": str(exc)}
            integrality.check(False, context=context)
            byparts.check(False, context=context)
            continue
        residual = abs(report.hopf_raw - report.hopf)
        integrality.check(residual < 1e-3, residual, {"word": word.render()})
        byparts.check(report.diagnostics.byparts_residual < 2.0 * settings.tol,
                      report.diagnostics.byparts_residual, {"word": word.render()})
    return integrality, byparts


def convergence_suite(count: int, seed: int, samples: int,
                      settings: QuadratureSettings) -> SuiteResult:
    """Refinement residuals of the Hopf quadrature stay below the tolerance."""
    rng = random.Random(seed + 3)
    result = SuiteResult("convergence")
    for n in range(count):
        word = words.random_balanced_loop_word(rng, core_length=rng.randint(2, 6))
        path = normalize(words.realize_loop(word, samples))
        l0 = lambda_profile(path, 0)
        l1 = lambda_profile(path, 1)
        try:
            hopf_quadrature(path, l0, l1, settings)
            hopf_byparts(path, l0, l1, settings)
            report = hopf(words.realize_loop(word, samples), settings)
            result.check(report.diagnostics.convergence_residual < settings.tol,
                         report.diagnostics.convergence_residual,
                         {"word": word.render()})
        except BraidlinkError as exc:
            result.check(False, context={"word": word.render(), "error": str(exc)})
    return result


def hopf_relabeling_suite(seed: int, samples: int,
                          settings: QuadratureSettings) -> SuiteResult:
    """Observed transformation of the Hopf value under all 24 relabelings.

    Relabeling preserves zero total linking, so the value stays defined; on
    every sampled braid the observed factor is the permutation sign.  The
    factor table is reported in the suite notes.
    """
    rng = random.Random(seed + 4)
    result = SuiteResult("hopf_relabeling")
    factors: dict[str, int] = {}
    try:
        braids = [words.realize_loop(words.parse_loop("[x,y]"), samples)]
        while len(braids) < 2:
            word = words.random_balanced_loop_word(rng, 6)
            braid = words.realize_loop(word, samples)
            if hopf(braid, settings).hopf != 0:
                braids.append(braid)
        bases = [hopf(braid, settings).hopf for braid in braids]
        for sigma in all_permutations():
            observed = set()
            for braid, base in zip(braids, bases):
                moved = hopf(act(sigma, braid), settings)
                result.check(moved.brunn, context={"sigma": sigma.cycle_string()})
                if moved.brunn and base:
                    observed.add(moved.hopf // base if moved.hopf % base == 0 else None)
            consistent = len(observed) == 1 and None not in observed
            result.check(consistent and observed == {sigma.sign},
                         context={"sigma": sigma.cycle_string(),
                                  "observed": sorted(map(str, observed))})
            if consistent:
                factors[sigma.cycle_string()] = observed.pop()
    except BraidlinkError as exc:
        result.check(False, context={"error": str(exc)})
    result.notes["factors"] = factors
    return result


def table_suite(seed: int, settings: QuadratureSettings) -> SuiteResult:
    result = SuiteResult("transform_table")
    table = transform_table(sample_count=5, seed=seed, settings=settings)
    identity = Permutation.identity()
    swap = Permutation.transposition(1, 2)
    result.check(table.row(identity) == (1, 0), context={"sigma": "e"})
    result.check(table.row(swap) == (0, 1), context={"sigma": "(1 2)"})
    for sigma in KLEIN_FOUR:
        result.check(table.row(sigma) == (1, 0),
                     context={"sigma": sigma.cycle_string()})
    result.check(table.consistent, context={"aspect": "integer fit"})
    result.check(table.is_multiplicative(), context={"aspect": "multiplicativity"})
    result.notes["consistent"] = table.consistent
    return result


def run_all(count: int, seed: int, tol: float, samples: int = 512) -> list[SuiteResult]:
    settings = QuadratureSettings(tol=tol)
    pair_count = max(1, count // 2)
    integrality, byparts = integrality_and_byparts_suites(count, seed, samples, settings)
    return [
        lk_oracle_suite(count, seed, max(8, samples // 8), settings),
        hopf_homomorphism_suite(pair_count, seed, samples, settings),
        integrality,
        byparts,
        convergence_suite(max(1, count // 5), seed, samples, settings),
        hopf_relabeling_suite(seed, max(32, samples // 4), settings),
        table_suite(seed, settings),
    ]
