"""Compare the compiled conjugation kernel with the numpy fallback.

Two measurements per size: raw batch conjugation of a random gate load on
an (m, 2m+1) letter matrix, and the full straighten pipeline on a random
tree. Run from the repo root:

    python3 benchmarks/bench_engine.py --sizes 250 500 1000 2000
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from tern2jw import random_tree, straighten
from tern2jw.engine import (
    available_backends,
    backend_name,
    conjugate_inplace,
    encode_gates,
    force_backend,
)


def _random_load(m: int, n_gates: int, seed: int) -> np.ndarray:
    rng = random.Random(seed)
    singles = ("H", "S", "SDG", "X", "Y", "Z")
    pairs = ("CZ", "CX", "SWAP")
    gates = []
    for _ in range(n_gates):
        if m >= 2 and rng.random() < 0.7:
            a, b = rng.sample(range(1, m + 1), 2)
            gates.append((rng.choice(pairs), (a, b)))
        else:
            gates.append((rng.choice(singles), (rng.randint(1, m),)))
    return encode_gates(gates, m)


def bench_raw(m: int, n_gates: int, repeats: int) -> dict[str, float]:
    rng = np.random.default_rng(m)
    base_letters = rng.integers(0, 4, size=(m, 2 * m + 1), dtype=np.uint8)
    ops = _random_load(m, n_gates, seed=m)
    out = {}
    for name in available_backends():
        force_backend(name)
        best = float("inf")
        for _ in range(repeats):
            letters = base_letters.copy()
            phases = np.zeros(2 * m + 1, dtype=np.uint8)
            start = time.perf_counter()
            conjugate_inplace(letters, phases, ops)
            best = min(best, time.perf_counter() - start)
        out[name] = best
    return out


def bench_straighten(m: int, repeats: int) -> dict[str, float]:
    t = random_tree(m, seed=m)
    out = {}
    for name in available_backends():
        force_backend(name)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            straighten(t)
            best = min(best, time.perf_counter() - start)
        out[name] = best
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    parser.add_argument("--gates", type=int, default=5000, help="gate count for the raw load")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    saved = backend_name()
    names = available_backends()
    print(f"backends: {', '.join(names)} (default {saved})")
    header = f"{'m':>6}  {'bench':<12}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    try:
        for m in args.sizes:
            for label, run in (
                ("raw", lambda: bench_raw(m, args.gates, args.repeats)),
                ("straighten", lambda: bench_straighten(m, args.repeats)),
            ):
                res = run()
                row = f"{m:>6}  {label:<12}" + "".join(
                    f"{res[n] * 1000:>10.2f}ms" for n in names
                )
                if "kernel" in res and "fallback" in res and res["kernel"] > 0:
                    row += f"{res['fallback'] / res['kernel']:>9.1f}x"
                print(row)
    finally:
        force_backend(saved)


if __name__ == "__main__":
    main()
