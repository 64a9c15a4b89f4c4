"""Compiled vs pure-Python kernels: raw dense loops and one end-to-end workload.

Run ``python3 benchmarks/bench_kernels.py``. The end-to-end rows run a fresh
interpreter per backend (``FKCABLE_PURE_PYTHON=1`` forces the fallback).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from fkcable.exactalg import _kernels_py

try:
    from fkcable.exactalg import _kernels
except ImportError:
    _kernels = None

END_TO_END = (
    "import time; t = time.perf_counter();"
    "from fkcable.exactalg.kernels import BACKEND;"
    "from fkcable.fk_core import HTable; HTable(kmax={kmax});"
    "print(BACKEND, time.perf_counter() - t)"
)


def _operands(n: int, bits: int, seed: int = 1) -> tuple[list[int], list[int]]:
    rng = random.Random(seed)
    a = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
    b = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n // 2)]
    b[0] = b[-1] = 1
    return a, b


def bench_kernels(sizes: list[int], bits: int, repeat: int) -> None:
    print(f"{'kernel':10s} {'n':>6s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for n in sizes:
        a, b = _operands(n, bits)
        prod = _kernels_py.mul_dense(a, b)
        cases = {
            "mul": lambda k: k.mul_dense(a, b),
            "divexact": lambda k: k.divexact_dense(prod, b),
        }
        for name, fn in cases.items():
            tp = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=repeat)) * 1e3
            if _kernels is None:
                print(f"{name:10s} {n:6d} {tp:10.2f} {'n/a':>10s} {'':>8s}")
                continue
            if fn(_kernels) != fn(_kernels_py):
                raise AssertionError(f"{name} kernels disagree at n={n}")
            tc = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=repeat)) * 1e3
            print(f"{name:10s} {n:6d} {tp:10.2f} {tc:10.2f} {tp / tc:7.2f}x")


def bench_end_to_end(kmax: int) -> None:
    code = END_TO_END.format(kmax=kmax)
    for pure in (True, False):
        env = dict(os.environ)
        env.pop("FKCABLE_PURE_PYTHON", None)
        if pure:
            env["FKCABLE_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"h_table(kmax={kmax}) with {backend:7s}: {float(secs):.3f} s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 1024])
    ap.add_argument("--bits", type=int, default=128)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--kmax", type=int, default=151)
    args = ap.parse_args()
    bench_kernels(args.sizes, args.bits, args.repeat)
    bench_end_to_end(args.kmax)


if __name__ == "__main__":
    main()
