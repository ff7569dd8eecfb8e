#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Builds a long normalized path (a power of the Borromean commutator), then
times the three hot kernels on every available backend:

    python benchmarks/bench_kernels.py --letters 32 --samples 512 --repeats 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from braidlink.integrate import lambda_profile
from braidlink.kernels import available_backends, gauss_nodes
from braidlink.mobius import normalize
from braidlink.words import parse_loop, realize_loop


def build_path(letters: int, samples: int):
    word = parse_loop(f"[x,y]^{letters // 4}")
    path = normalize(realize_loop(word, samples))
    l0 = lambda_profile(path, 0)
    l1 = lambda_profile(path, 1)
    return path, l0, l1


def time_call(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--letters", type=int, default=32,
                        help="word length; multiple of 4 (default: 32)")
    parser.add_argument("--samples", type=int, default=512,
                        help="samples per letter (default: 512)")
    parser.add_argument("--order", type=int, default=8)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    path, l0, l1 = build_path(args.letters, args.samples)
    closed = path.closed()
    lam0 = np.ascontiguousarray(l0.values[:-1])
    lam1 = np.ascontiguousarray(l1.values[:-1])
    nodes, weights = gauss_nodes(args.order)

    backends = available_backends()
    print(f"path: {path.sample_count} segments, order {args.order}, "
          f"best of {args.repeats}")
    print(f"{'kernel':<16}" + "".join(f"{name:>14}" for name in backends)
          + ("   speedup" if len(backends) > 1 else ""))

    cases = {
        "turn_fractions": lambda mod: mod.turn_fractions(closed, 0j),
        "gl_turn_sweep": lambda mod: mod.gl_turn_sweep(closed, 0j, nodes, weights),
        "gl_pair_sweep": lambda mod: mod.gl_pair_sweep(closed, lam0, lam1,
                                                       nodes, weights),
    }
    for name, call in cases.items():
        times = {bk: time_call(lambda m=mod: call(m), args.repeats)
                 for bk, mod in backends.items()}
        row = f"{name:<16}" + "".join(f"{times[bk] * 1e3:>12.3f}ms"
                                      for bk in backends)
        if "compiled" in times and "python" in times:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)

    # Agreement check while we are here.
    if len(backends) > 1:
        a = backends["python"].gl_pair_sweep(closed, lam0, lam1, nodes, weights)
        b = backends["compiled"].gl_pair_sweep(closed, lam0, lam1, nodes, weights)
        drift = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
        print(f"backend agreement on gl_pair_sweep: {drift:.3e}")


if __name__ == "__main__":
    main()
