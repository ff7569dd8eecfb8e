"""Braid documents: the JSON schema the CLI reads and writes.

Schema (version 1): exactly one payload among

* ``{"version": 1, "loop": "<loop word>"}``
* ``{"version": 1, "artin": "<artin word>"}``
* ``{"version": 1, "strands": [[s, ...] x 4]}`` with a sample ``s`` either
  ``[re, im]`` or the string ``"inf"``

plus optional ``"name"`` and ``"seed"`` metadata.  Emitted JSON uses a fixed
field order and floats rounded to 12 significant digits, so identical inputs
produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .braid import SphericalBraid
from .errors import ValidationError
from .invariants import InvariantReport
from .words import parse_artin, parse_loop, realize_artin, realize_loop

SCHEMA_VERSION = 1

_PAYLOAD_KEYS = ("loop", "artin", "strands")


class SchemaError(ValidationError):
    """The input document does not match the braid JSON schema."""


@dataclass(frozen=True)
class BraidDocument:
    """One braid description: a word in either language, or explicit samples."""

    version: int = SCHEMA_VERSION
    name: str | None = None
    seed: int | None = None
    loop: str | None = None
    artin: str | None = None
    strands: tuple | None = None

    def __post_init__(self):
        present = [k for k in _PAYLOAD_KEYS if getattr(self, k) is not None]
        if len(present) != 1:
            raise SchemaError(
                f"exactly one of {_PAYLOAD_KEYS} must be present, got {present}"
            )
        if self.version != SCHEMA_VERSION:
            raise SchemaError(f"unsupported schema version {self.version}")

    @staticmethod
    def from_json_dict(data: Any) -> "BraidDocument":
        if not isinstance(data, dict):
            raise SchemaError("document must be a JSON object")
        known = {"version", "name", "seed", *_PAYLOAD_KEYS}
        unknown = set(data) - known
        if unknown:
            raise SchemaError(f"unknown fields {sorted(unknown)}")
        strands = data.get("strands")
        if strands is not None:
            strands = tuple(tuple(s) for s in strands)
        return BraidDocument(
            version=data.get("version", SCHEMA_VERSION),
            name=data.get("name"),
            seed=data.get("seed"),
            loop=data.get("loop"),
            artin=data.get("artin"),
            strands=strands,
        )

    def to_braid(self, samples: int = 512) -> SphericalBraid:
        if self.loop is not None:
            return realize_loop(parse_loop(self.loop), samples)
        if self.artin is not None:
            return realize_artin(parse_artin(self.artin), samples)
        return decode_strands(self.strands)


def decode_strands(strands: Any) -> SphericalBraid:
    if not isinstance(strands, (list, tuple)) or len(strands) != 4:
        raise SchemaError("'strands' must hold exactly 4 strand arrays")
    lengths = {len(s) for s in strands}
    if len(lengths) != 1:
        raise SchemaError(f"strand lengths differ: {sorted(lengths)}")
    decoded = []
    for idx, strand in enumerate(strands):
        row: list[complex | None] = []
        for k, sample in enumerate(strand):
            if sample == "inf":
                row.append(None)
            elif (isinstance(sample, (list, tuple)) and len(sample) == 2
                  and all(isinstance(c, (int, float)) for c in sample)):
                row.append(complex(sample[0], sample[1]))
            else:
                raise SchemaError(
                    f"strand {idx + 1} sample {k} must be [re, im] or \"inf\""
                )
        decoded.append(row)
    return SphericalBraid.from_complex(decoded)


def sig12(x: float) -> float:
    """Round to 12 significant digits for stable report bytes."""
    return float(f"{x:.12g}")


def encode_braid(braid: SphericalBraid, name: str | None = None) -> dict:
    # Coordinates are emitted at full precision: JSON doubles round-trip
    # exactly, so a braid document reproduces the braid bit for bit.
    strands = []
    for i in range(1, braid.n_strands + 1):
        inf_mask = braid.infinite_mask(i)
        row = []
        for k in range(braid.sample_count):
            if inf_mask[k]:
                row.append("inf")
            else:
                z = braid.point(i, k).z
                row.append([z.real, z.imag])
        strands.append(row)
    doc: dict[str, Any] = {"version": SCHEMA_VERSION}
    if name is not None:
        doc["name"] = name
    doc["strands"] = strands
    return doc


def report_dict(report: InvariantReport, name: str | None = None,
                seed: int | None = None) -> dict:
    """Invariant report as a plain dict with a fixed field order."""
    out: dict[str, Any] = {
        "lk": report.total.lk,
        "lk_tilde": report.total.lk_tilde,
        "brunn": report.brunn,
    }
    if report.brunn:
        out["hopf"] = report.hopf
        out["hopf_raw"] = sig12(report.hopf_raw)
    diag: dict[str, Any] = {}
    if report.diagnostics.convergence_residual is not None:
        diag["convergence_residual"] = sig12(report.diagnostics.convergence_residual)
        diag["byparts_residual"] = sig12(report.diagnostics.byparts_residual)
    diag["input_samples"] = report.diagnostics.input_samples
    diag["path_samples"] = report.diagnostics.path_samples
    out["diagnostics"] = diag
    if name is not None:
        out["name"] = name
    if seed is not None:
        out["seed"] = seed
    return out


def dumps(doc: dict) -> str:
    """Compact deterministic JSON (insertion order preserved)."""
    return json.dumps(doc, separators=(",", ":"), allow_nan=False)
