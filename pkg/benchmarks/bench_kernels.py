"""Time the word kernels under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py --sizes 8x8 10x10 12x12 --repeat 3

Each stage is warmed up once (this triggers numba compilation), then the
best of ``--repeat`` runs is reported. Outputs of both backends are compared
before any timing is printed.
"""
import argparse
import time

import numpy as np

from dyckcount import kernels


def stages(m, n, backend):
    L = m + n
    out = {}

    def run(name, fn):
        out[name] = fn()
        return out[name]

    masks = run("enumerate", lambda: kernels.enumerate_masks(m, n, backend))
    dyck, shift = run("scan", lambda: kernels.scan_heights(masks, m, n, backend))
    run("periods", lambda: kernels.periods(masks, L, backend))
    run("class_ids", lambda: kernels.class_ids(masks, L, backend))
    run("rotate", lambda: kernels.rotate_masks(masks, shift, L, backend))
    run("types", lambda: kernels.type_matrix(masks[dyck], m, n, backend))
    return out


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(m, n, repeat):
    L = m + n
    results = {b: stages(m, n, b) for b in kernels.BACKENDS}
    ref = results[kernels.BACKENDS[0]]
    for b in kernels.BACKENDS[1:]:
        for name, val in ref.items():
            other = results[b][name]
            same = all(np.array_equal(x, y) for x, y in zip(val, other)) if isinstance(val, tuple) else np.array_equal(val, other)
            if not same:
                raise SystemExit(f"backends disagree on {name} at ({m}, {n})")

    masks = ref["enumerate"]
    dyck, shift = ref["scan"]
    jobs = {
        "enumerate": lambda b: kernels.enumerate_masks(m, n, b),
        "scan": lambda b: kernels.scan_heights(masks, m, n, b),
        "periods": lambda b: kernels.periods(masks, L, b),
        "class_ids": lambda b: kernels.class_ids(masks, L, b),
        "rotate": lambda b: kernels.rotate_masks(masks, shift, L, b),
        "types": lambda b: kernels.type_matrix(masks[dyck], m, n, b),
    }
    print(f"\n({m}, {n}): {len(masks)} words, {int(dyck.sum())} Dyck")
    print(f"  {'stage':<10}" + "".join(f"{b:>12}" for b in kernels.BACKENDS) + f"{'ratio':>9}")
    for name, job in jobs.items():
        times = [best_of(lambda b=b: job(b), repeat) for b in kernels.BACKENDS]
        ratio = times[-1] / times[0] if len(times) > 1 and times[0] > 0 else 1.0
        print(f"  {name:<10}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + f"{ratio:>8.1f}x")


def parse_size(text):
    m, n = text.lower().split("x")
    return int(m), int(n)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", nargs="+", type=parse_size, default=[(7, 7), (9, 9), (11, 11), (12, 12)])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backends: {', '.join(kernels.BACKENDS)} (default {kernels.BACKEND})")
    for m, n in args.sizes:
        bench(m, n, args.repeat)


if __name__ == "__main__":
    main()
