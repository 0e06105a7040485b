"""Compiled vs pure-Python ordering search.

    python3 benchmarks/bench_search.py [--M 9] [--repeat 3]

Runs an exhaustive search (all (M-1)! orderings, no early stop) on a random
frame, where almost every candidate fails within a few entries, and on the
block-harmonic frame, where passing candidates force full checks.
"""
import argparse
import time

import numpy as np

from frameorbit import Frame, block_harmonic_frame, ordering_search
from frameorbit.search import available_backends


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--M", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = {
        f"random d=3 M={args.M}": Frame.from_vectors(
            rng.standard_normal((args.M, 3)) + 1j * rng.standard_normal((args.M, 3))
        ),
        "block-harmonic d=4 K=2 N=2 (M=8)": block_harmonic_frame(4, 2, 2)[0],
    }
    print(f"backends: {', '.join(available_backends())}")
    for label, F in cases.items():
        results = {}
        for backend in available_backends():
            t, res = best_of(
                lambda: ordering_search(F, limit=None, backend=backend, workers=args.workers),
                args.repeat,
            )
            results[backend] = (t, res)
            print(f"{label:36s} {backend:9s} {t * 1e3:9.1f} ms  "
                  f"tested={res.tested} passing={res.n_passing}")
        if len(results) == 2:
            (tc, rc), (tp, rp) = results["compiled"], results["python"]
            assert rc == rp, "backends disagree"
            print(f"{'':36s} speedup   {tp / tc:9.1f}x")


if __name__ == "__main__":
    main()
