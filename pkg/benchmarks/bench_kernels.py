#!/usr/bin/env python3
"""Compare the numba and numpy backends of the hot kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both backends in one process.  The end-to-end rows run
``verify.report`` on the order-5 tower sequence in two subprocesses, one
with ``ORIENTSEQ_DISABLE_NUMBA=1``.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from orientseq import _accel
from orientseq.lempel import sos_general

REPORT_SNIPPET = """
import time
from orientseq import _accel, lempel, verify
s = lempel.sos_general(12, 5)
verify.report(s, 5)
t0 = time.perf_counter()
for _ in range({repeat}):
    verify.report(s, 5)
print(_accel.BACKEND, (time.perf_counter() - t0) / {repeat})
"""


def best_of(fn, repeat):
    fn()  # compile / warm caches
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(repeat):
    s = sos_general(12, 5)
    terms, q, n = s.terms, s.q, 5
    rng = np.random.default_rng(0)
    rand = rng.integers(0, 16, 1_000_000)
    codes = _accel.window_codes(rand, 16, 5)
    cases = {
        f"window_codes tower m={s.period}": lambda b: _accel.window_codes(terms, q, n, 2, backend=b),
        "window_codes random m=1e6": lambda b: _accel.window_codes(rand, 16, 5, backend=b),
        "first_repeat random m=1e6": lambda b: _accel.first_repeat(codes, backend=b),
        "first_match random m=1e6": lambda b: _accel.first_match(codes, codes[::-1].copy(), backend=b),
        "classify q=12 n=6": lambda b: _accel.classify_tuples(12, 6, backend=b),
    }
    for name, fn in cases.items():
        t_nb = best_of(lambda: fn("numba"), repeat) if _accel.HAVE_NUMBA else float("nan")
        t_np = best_of(lambda: fn("numpy"), repeat)
        yield name, t_nb, t_np


def report_rows(repeat):
    out = {}
    for flag in ("0", "1"):
        env = dict(os.environ, ORIENTSEQ_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", REPORT_SNIPPET.format(repeat=repeat)],
                             env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'kernel':36s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, t_nb, t_np in kernel_rows(args.repeat):
        print(f"{name:36s} {1e3 * t_nb:10.2f} {1e3 * t_np:10.2f} {t_np / t_nb:8.1f}")
    rows = report_rows(args.repeat)
    t_nb, t_np = rows.get("numba", float("nan")), rows["numpy"]
    print(f"{'report(tower n=5), end to end':36s} {1e3 * t_nb:10.2f} {1e3 * t_np:10.2f} {t_np / t_nb:8.1f}")


if __name__ == "__main__":
    main()
