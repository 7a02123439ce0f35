"""Compare the compiled and pure-Python kernel backends.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Kernel-level
timings call both modules directly on identical inputs; the end-to-end timing
runs ``cartan-forge corpus all`` once per backend in a subprocess.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from cartan_forge import _pykernels as py
from cartan_forge.jet import TABLE, JetSpace, Q
from cartan_forge.parser import parse

try:
    from cartan_forge import _ckernels as cy
except ImportError:
    cy = None


def random_poly(rng, space, terms, max_order=3):
    """Random differential polynomial on ``space`` as a raw kernel dict."""
    out = {}
    ids = [space.fiber_id(j, tuple(rng.randint(0, max_order) for _ in range(space.n)))
           for j in range(space.m) for _ in range(6)]
    ids += [space.base_id(i) for i in range(space.n)]
    for _ in range(terms):
        vs = sorted(set(rng.sample(ids, rng.randint(1, 3))))
        m = tuple(x for v in vs for x in (v, rng.randint(1, 2)))
        out[m] = out.get(m, 0) + Q(rng.randint(-9, 9) or 1, rng.choice((1, 2, 3)))
    return {m: c for m, c in out.items() if c}


def workloads(seed=0):
    rng = random.Random(seed)
    space = JetSpace(("x", "y", "t"), ("u", "v"))
    a, b = random_poly(rng, space, 60), random_poly(rng, space, 60)
    big = parse(space, "(u_x + v_t + u*v + x)^6").poly
    keys = TABLE.keys
    f = {(space.base_id(0),): a, (space.fiber_id(0),): b}
    g = {(space.base_id(1), space.fiber_id(1, (1, 0, 0))): b, (space.base_id(2),): a}
    values = {space.fiber_id(0): a}
    return {
        "poly_mul 60x60": lambda k: k.poly_mul(a, b),
        "poly_pow ^3": lambda k: k.poly_pow(a, 3),
        "total_derivative (deg-6 poly)": lambda k: k.poly_total_derivative(big, 0, TABLE.shift),
        "poly_substitute": lambda k: k.poly_substitute(b, values),
        "form_wedge": lambda k: k.form_wedge(f, g, keys),
    }


def bench_kernels(repeat):
    rows = []
    for name, fn in workloads().items():
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=repeat))
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=repeat)) if cy else None
        rows.append((name, t_py, t_cy))
    return rows


def bench_corpus(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["CARTAN_FORGE_PURE_PYTHON"] = "1"
    else:
        env.pop("CARTAN_FORGE_PURE_PYTHON", None)
    start = time.perf_counter()
    subprocess.run([sys.executable, "-m", "cartan_forge", "corpus", "all"], env=env,
                   check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if cy is None:
        print("compiled kernels are not built; only the pure-Python timings are shown")
    print(f"{'workload':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, t_py, t_cy in bench_kernels(args.repeat):
        if t_cy is None:
            print(f"{name:34s} {t_py * 1e3:8.2f}ms {'-':>10s} {'-':>8s}")
        else:
            print(f"{name:34s} {t_py * 1e3:8.2f}ms {t_cy * 1e3:8.2f}ms {t_py / t_cy:7.2f}x")
    t_py = bench_corpus(pure=True)
    line = f"{'corpus all (end to end)':34s} {t_py * 1e3:8.0f}ms"
    if cy is not None:
        t_cy = bench_corpus(pure=False)
        line += f" {t_cy * 1e3:8.0f}ms {t_py / t_cy:7.2f}x"
    print(line)


if __name__ == "__main__":
    main()
