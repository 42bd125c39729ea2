#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Three workloads dominated by the hot kernels:

* jacobi  -- exhaustive Jacobi scan over a window (bracket_terms);
* mybe    -- diagonal action of window probes on a rank-3 defect (diag_act);
* rref    -- an h1-style sparse exact elimination (rref).

Run:  python benchmarks/bench_kernel.py [--radius 5] [--repeat 3]
"""

import argparse
import random
import time

from hvlab.kernel import available_backends

KIND_L, KIND_I = 0, 1


def window_syms(radius):
    out = []
    for i in range(-radius, radius + 1):
        out.append((KIND_L, i, 1))
        out.append((KIND_I, i, 1))
    out += [(2, 0, 1), (3, 0, 1), (4, 0, 1)]
    return out


def bench_jacobi(k, radius):
    syms = window_syms(radius)
    one = k.ONE
    pair = {}
    for a in syms:
        for b in syms:
            pair[(a, b)] = dict(k.bracket_basis(a, b, 0, 0))
    acc = 0
    for a in syms:
        ea = {a: one}
        for b in syms:
            eb = {b: one}
            for c in syms:
                t = k.bracket_terms(ea, pair[(b, c)], 0, 0)
                k.add_scaled_into(t, k.bracket_terms(eb, pair[(c, a)], 0, 0), one)
                k.add_scaled_into(t, k.bracket_terms({c: one}, pair[(a, b)], 0, 0), one)
                if t:
                    acc += 1
    if acc:
        raise AssertionError("Jacobi violated; kernel broken")


def bench_mybe(k, radius):
    rng = random.Random(1)
    syms = window_syms(radius)
    # random rank-3 tensor with ~200 terms
    t3 = {}
    for _ in range(200):
        key = (rng.choice(syms), rng.choice(syms), rng.choice(syms))
        t3[key] = k.rq(rng.randint(-9, 9) or 1, rng.randint(1, 4))
    for s in syms:
        k.diag_act({s: k.ONE}, t3, 0, 0)


def bench_rref(k, radius):
    rng = random.Random(2)
    ncols = 60 * radius
    rows = []
    for _ in range(12 * ncols):
        row = {}
        for _ in range(rng.randint(2, 6)):
            row[rng.randrange(ncols)] = k.rq(rng.randint(-5, 5) or 1, rng.randint(1, 6))
        rows.append(row)
    k.rref(rows)


WORKLOADS = [("jacobi", bench_jacobi), ("mybe", bench_mybe), ("rref", bench_rref)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "c" not in backends:
        print("note: compiled kernel not built; timing the fallback only")
    print(f"{'workload':<10} " + " ".join(f"{name:>12}" for name in backends))
    speed = {}
    for wname, fn in WORKLOADS:
        times = {}
        for bname, mod in backends.items():
            best = min(
                _timed(fn, mod, args.radius) for _ in range(args.repeat)
            )
            times[bname] = best
        speed[wname] = times
        cells = " ".join(f"{times[b]:>11.3f}s" for b in backends)
        print(f"{wname:<10} {cells}")
    if "c" in backends and "python" in backends:
        print()
        for wname, times in speed.items():
            print(f"{wname}: compiled is {times['python'] / times['c']:.1f}x faster")


def _timed(fn, mod, radius):
    t0 = time.perf_counter()
    fn(mod, radius)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
