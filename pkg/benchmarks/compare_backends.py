"""Time the numba kernels against the pure numpy fallback.

    python3 benchmarks/compare_backends.py --sizes 64,128,256 --variants crout,cascade
"""

import argparse
import csv
import statistics
import sys
import time

from rpm_ldlt import _config
from rpm_ldlt.field import PrimeField
from rpm_ldlt.genbench import KINDS, generate
from rpm_ldlt.plduq import plduq
from rpm_ldlt.sytrf import SytrfConfig, ldlt


def _time(F, A, variant, threshold, reps):
    ts = []
    for _ in range(reps):
        t0 = time.perf_counter()
        if variant == "plduq":
            plduq(F, A)
        else:
            ldlt(F, A, SytrfConfig(threshold, variant))
        ts.append(time.perf_counter() - t0)
    return statistics.median(ts)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sizes", default="64,128,256")
    ap.add_argument("--variants", default="rec,crout,cascade,plduq")
    ap.add_argument("--kind", choices=KINDS, default="rpm-random")
    ap.add_argument("--p", type=int, default=8388593)
    ap.add_argument("--rank-frac", type=float, default=0.5)
    ap.add_argument("--threshold", type=int, default=64)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--csv", action="store_true", help="CSV instead of an aligned table")
    args = ap.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    variants = args.variants.split(",")
    F = PrimeField(args.p)
    rows = []
    for n in sizes:
        A = generate(args.kind, n, int(round(args.rank_frac * n)), args.p, n)
        for v in variants:
            secs = {}
            for b in ("numba", "numpy"):
                old = _config.set_backend(b)
                try:
                    _time(F, A, v, args.threshold, 1)  # JIT compile and warm caches outside the timing
                    secs[b] = _time(F, A, v, args.threshold, args.reps)
                finally:
                    _config.set_backend(old)
            rows.append((n, v, secs["numba"], secs["numpy"], secs["numpy"] / secs["numba"]))

    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "variant", "numba_s", "numpy_s", "speedup"])
        for n, v, a, b, s in rows:
            w.writerow([n, v, f"{a:.6g}", f"{b:.6g}", f"{s:.3g}"])
    else:
        print(f"{'n':>6} {'variant':>8} {'numba s':>10} {'numpy s':>10} {'numpy/numba':>12}")
        for n, v, a, b, s in rows:
            print(f"{n:>6} {v:>8} {a:>10.4f} {b:>10.4f} {s:>12.2f}")


if __name__ == "__main__":
    main()
