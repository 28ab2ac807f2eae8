"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_kernels.py --sizes 40,80,160 --repeat 3

Prints one line per (kernel, size) with the best time of each backend and the
speedup. Both backends are checked to return identical results.
"""

import argparse
import random
import time

from nesthilb.exactcore.field import DEFAULT_PRIME
from nesthilb.exactcore.kernels import compiled_backend, python_backend


def random_rows(rng, nrows, ncols, p, density):
    return [[rng.randrange(1, p) if rng.random() < density else 0 for _ in range(ncols)]
            for _ in range(nrows)]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(sizes, repeat, density, seed, p=DEFAULT_PRIME):
    rng = random.Random(seed)
    results = []
    for n in sizes:
        rows = random_rows(rng, n, n + n // 2, p, density)
        ncols = n + n // 2
        backends = {"python": python_backend}
        if compiled_backend is not None:
            backends["cython"] = compiled_backend
        timings = {}
        outputs = {}
        for name, mod in backends.items():
            timings[name], outputs[name] = best_of(lambda: mod.rref_modp(rows, ncols, p), repeat)
        basis, pivots = outputs["python"]
        vecs = random_rows(rng, n, ncols, p, density)
        red_t, red_out = {}, {}
        for name, mod in backends.items():
            red_t[name], red_out[name] = best_of(
                lambda: mod.reduce_modp(vecs, basis, pivots, ncols, p), repeat)
        agree = (len({repr(o) for o in outputs.values()}) == 1
                 and len({repr(o) for o in red_out.values()}) == 1)
        results.append((n, ncols, timings, red_t, agree))
    return results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="40,80,160")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]
    if compiled_backend is None:
        print("compiled backend not built; timing the python backend only")
    ok = True
    for n, ncols, rref_t, red_t, agree in bench(sizes, args.repeat, args.density, args.seed):
        ok &= agree
        for kernel, t in (("rref_modp", rref_t), ("reduce_modp", red_t)):
            line = f"{kernel:12s} {n:4d}x{ncols:<4d} python {t['python'] * 1e3:9.2f} ms"
            if "cython" in t:
                line += (f"  cython {t['cython'] * 1e3:8.2f} ms"
                         f"  speedup {t['python'] / max(t['cython'], 1e-9):6.1f}x")
            print(line + ("" if agree else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
