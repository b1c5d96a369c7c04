"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row runs the same inputs through every available backend and checks
that the results agree before reporting timings.
"""

import argparse
import random
import time

import numpy as np

from treeorder import kernels
from treeorder.free_group import DefiningWord
from treeorder.generate import random_tree
from treeorder.groups import ball


def best_of(repeat, fn):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = random.Random(0)
    for n in (40, 200, 600):
        csr = random_tree(n, rng).csr
        yield f"rise_matrix n={n}", lambda b, csr=csr: b.rise_matrix(*csr)
    m = kernels.rise_matrix(*random_tree(150, rng).csr)
    yield "check_rise_matrix n=150", lambda b: b.check_rise_matrix(m)
    words = [w.codes for w in ball(2, 5)]
    pos = DefiningWord.lexicographic(2).code_positions
    yield "tau_u ball(2,5)", lambda b: [b.tau_u_codes(w, pos) for w in words]
    pairs = [(words[i], words[-1 - i]) for i in range(len(words))] * 20
    yield "cayley_rise 9700 pairs", lambda b: [b.cayley_rise_codes(g, h, pos) for g, h in pairs]


def same(a, b):
    return np.array_equal(a, b) if isinstance(a, np.ndarray) else a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(names)} (default {kernels.BACKEND})")
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        times, results = [], []
        for n in names:
            t, out = best_of(args.repeat, lambda: fn(kernels.BACKENDS[n]))
            times.append(t)
            results.append(out)
        if not all(same(results[0], r) for r in results[1:]):
            raise SystemExit(f"{label}: backends disagree")
        row = f"{label:28s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(names) > 1:
            row += f"{times[names.index('python')] / times[names.index('cython')]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
