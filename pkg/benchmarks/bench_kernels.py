"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times element products, subgroup closure and a full Hall search on both
backends and checks that they return identical results.
"""
import argparse
import time

import numpy as np

from hallgroups.engine import build, kernels
from hallgroups.engine.hall import hall_subgroups


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = np.random.default_rng(0)
    G = build("m11")
    a = rng.integers(0, G.order, 200_000)
    b = rng.integers(0, G.order, 200_000)
    yield "products m11 x200k", lambda: kernels.products(G.perms, G.base, G.weights, G.keys, a, b)

    gens = np.array([1, G.order // 2, G.order - 1], dtype=np.int64)
    start = np.array([G.identity], dtype=np.int64)
    yield "closure m11 3 gens", lambda: kernels.closure(
        G.perms, G.base, G.weights, G.keys, gens, start, G.order)

    for spec, pi in (("psl2:11", [2, 3]), ("sym:7", [2, 3]), ("psl3:3", [2, 3])):
        H = build(spec)
        yield f"hall {spec} {pi}", lambda H=H, pi=pi: [
            K.elements.tolist() for K in hall_subgroups(H, pi)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if "cython" not in kernels.available():
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")

    prev = kernels.BACKEND
    print(f"{'case':28} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    try:
        for label, fn in cases():
            times, outs = {}, {}
            for backend in ("cython", "python"):
                kernels.use_backend(backend)
                times[backend], outs[backend] = best_of(fn, args.repeat)
            same = np.array_equal(np.asarray(outs["cython"], dtype=object),
                                  np.asarray(outs["python"], dtype=object))
            print(f"{label:28} {times['cython']:10.4f} {times['python']:10.4f} "
                  f"{times['python'] / times['cython']:7.1f}x" + ("" if same else "  MISMATCH"))
    finally:
        kernels.use_backend(prev)


if __name__ == "__main__":
    main()
