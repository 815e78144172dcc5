"""Compare the compiled and pure-Python elimination kernels.

Run ``python3 benchmarks/bench_kernels.py``.  Each line reports the best of
several repeats for both backends and the speed-up.  The last block times an
end-to-end workload in fresh interpreters with and without
``JORDANTYPE_PURE_PYTHON``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from jordantype import kernels

P = 1_000_003

END_TO_END = """
import random, sys
sys.path.insert(0, 'tests')
from randalg import random_ag_algebra, random_linear_form
from jordantype.jordan import jordan_degree_type
rng = random.Random(1)
for _ in range(12):
    A, _ = random_ag_algebra(rng, max_j=5, max_dim=20)
    jordan_degree_type(A, random_linear_form(A, rng, special=False))
"""


def matrix(rng, n, m, bound):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def cases(size):
    rng = random.Random(0)
    a = matrix(rng, size, size, 50)
    b = matrix(rng, size, size, 50)
    ap = [[x % P for x in row] for row in a]
    bp = [[x % P for x in row] for row in b]
    return {
        "rref_int": lambda mod: mod.rref_int(a, size),
        "rank_int": lambda mod: mod.rank_int(a, size),
        "rref_modp": lambda mod: mod.rref_modp(ap, size, P),
        "rank_modp": lambda mod: mod.rank_modp(ap, size, P),
        "matmul_int": lambda mod: mod.matmul_int(a, b),
        "matmul_modp": lambda mod: mod.matmul_modp(ap, bp, P),
    }


def best(fn, mod, repeat):
    return min(timeit.repeat(lambda: fn(mod), number=1, repeat=repeat))


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["JORDANTYPE_PURE_PYTHON"] = "1"
    else:
        env.pop("JORDANTYPE_PURE_PYTHON", None)
    stmt = f"import time; t = time.perf_counter(); exec({END_TO_END!r}); print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", stmt], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="20,40,80")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    if "cython" not in kernels.BACKENDS:
        sys.exit("compiled kernels are not built; reinstall with Cython available")
    py, cy = kernels.BACKENDS["python"], kernels.BACKENDS["cython"]
    print(f"{'kernel':<12} {'n':>4} {'python s':>10} {'cython s':>10} {'speed-up':>9}")
    for size in (int(s) for s in args.sizes.split(",")):
        for name, fn in cases(size).items():
            assert fn(py) == fn(cy), name
            tp, tc = best(fn, py, args.repeat), best(fn, cy, args.repeat)
            print(f"{name:<12} {size:>4} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.1f}x")
    if not args.skip_end_to_end:
        tp, tc = end_to_end(True), end_to_end(False)
        print(f"\nend-to-end Jordan degree types: python {tp:.2f} s, cython {tc:.2f} s, speed-up {tp / tc:.1f}x")


if __name__ == "__main__":
    main()
