"""Command-line front end.

Subcommands: ``invariants`` (report lk/lk_tilde/brunn/hopf for one braid),
``normalize`` (emit the normalized braid as a JSON document), and ``verify``
(run the seeded property sweeps).  Reports go to stdout as single-line JSON;
error diagnostics go to stderr as JSON.

Exit codes: 0 success; 1 verification found a counterexample; 2 validation,
parse, or usage error; 3 convergence or branch-tracking error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .documents import BraidDocument, SchemaError, dumps, encode_braid, report_dict
from .errors import (
    BranchTrackingError,
    ConsistencyError,
    ConvergenceError,
    NonPureWordError,
    NormalizationError,
    ValidationError,
    WordSyntaxError,
)
from .integrate import QuadratureSettings
from .invariants import hopf
from .mobius import normalize

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3

# Degenerate inputs (including geometry the normalizer refuses) exit 2;
# numerical-agreement failures exit 3.
_VALIDATION_ERRORS = (ValidationError, WordSyntaxError, NonPureWordError,
                      SchemaError, NormalizationError)
_CONVERGENCE_ERRORS = (ConvergenceError, BranchTrackingError, ConsistencyError)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidlink",
        description="Winding and Hopf invariants of spherical 4-strand braids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("loop", "artin", "json"), default="loop",
                       help="input language (default: loop)")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("-e", "--expr", help="braid word given inline")
        src.add_argument("--input", help="path to a braid JSON document ('-' for stdin)")
        p.add_argument("--samples", type=int, default=512,
                       help="samples per letter/generator (default: 512)")

    inv = sub.add_parser("invariants", help="compute the invariant report")
    add_input_flags(inv)
    inv.add_argument("--tol", type=float, default=1e-4,
                     help="quadrature convergence tolerance (default: 1e-4)")
    inv.add_argument("--start-lambda", type=float, default=0.0,
                     help="base value of the winding-angle profiles (default: 0)")
    inv.add_argument("--seed", type=int, default=None,
                     help="recorded in the report metadata only")

    norm = sub.add_parser("normalize", help="emit the normalized braid as JSON")
    add_input_flags(norm)

    ver = sub.add_parser("verify", help="run the seeded property sweeps")
    ver.add_argument("--count", type=int, default=50,
                     help="braids per sweep (default: 50)")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--tol", type=float, default=1e-4)
    ver.add_argument("--samples", type=int, default=256,
                     help="samples per letter/generator (default: 256)")
    return parser


def _load_document(args: argparse.Namespace) -> BraidDocument:
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else _read_file(args.input)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON input: {exc}") from exc
        doc = BraidDocument.from_json_dict(data)
        if args.format != "json" and doc.strands is not None:
            # Words may arrive in documents regardless of --format; explicit
            # samples are fine under --format json only.
            raise SchemaError("explicit strand samples require --format json")
        return doc
    if args.format == "json":
        raise SchemaError("--format json needs --input, not an inline expression")
    if args.format == "loop":
        return BraidDocument(loop=args.expr)
    return BraidDocument(artin=args.expr)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _emit_error(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    print(dumps(payload), file=sys.stderr)
    return code


def cmd_invariants(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    braid = doc.to_braid(args.samples)
    settings = QuadratureSettings(tol=args.tol)
    report = hopf(braid, settings, start=args.start_lambda)
    seed = args.seed if args.seed is not None else doc.seed
    print(dumps(report_dict(report, name=doc.name, seed=seed)))
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    braid = doc.to_braid(args.samples)
    path = normalize(braid)
    print(dumps(encode_braid(path.to_braid(), name=doc.name)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify_mod.run_all(args.count, args.seed, args.tol, args.samples)
    ok = all(r.ok for r in results)
    for r in results:
        line = (f"{r.name}: {'PASS' if r.ok else 'FAIL'} "
                f"({r.passed} passed, {r.failed} failed, "
                f"max residual {r.max_residual:.3e})")
        print(line, file=sys.stderr)
    summary = {
        "count": args.count,
        "seed": args.seed,
        "tol": args.tol,
        "suites": [r.to_json_dict() for r in results],
        "ok": ok,
    }
    print(dumps(summary))
    if not ok:
        first = next(r for r in results if not r.ok)
        print(dumps({"suite": first.name, "counterexample": first.counterexample}),
              file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.count <= 0:
        parser.error("--count must be positive")
    try:
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "normalize":
            return cmd_normalize(args)
        return cmd_verify(args)
    except _VALIDATION_ERRORS as exc:
        return _emit_error(exc, EXIT_VALIDATION)
    except _CONVERGENCE_ERRORS as exc:
        return _emit_error(exc, EXIT_CONVERGENCE)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
