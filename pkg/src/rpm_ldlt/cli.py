"""Command line front end: ``rpm-ldlt {gen,factor,verify,bench}``.

Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 input not
symmetric, 4 parse error, 5 benchmark failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

import numpy as np

from .densecore import reconstruct
from .errors import BadRank, NotSymmetric, ParseError
from .field import PrimeField
from .formats import emit_factorization, emit_matrix, parse_factorization, parse_matrix
from .genbench import BENCH_VARIANTS, KINDS, generate, run_bench
from .rpmtools import pivoting_matrix, rpm_bruteforce, strictify
from .sytrf import DEFAULT_THRESHOLD, VARIANTS, SytrfConfig, ldlt

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NOTSYM, EXIT_PARSE, EXIT_BENCH = range(6)
THRESHOLD_ENV = "RPM_LDLT_THRESHOLD"


class _UsageError(Exception):
    pass


def _default_threshold() -> int:
    raw = os.environ.get(THRESHOLD_ENV)
    if raw is None:
        return DEFAULT_THRESHOLD
    try:
        t = int(raw)
    except ValueError:
        raise _UsageError(f"{THRESHOLD_ENV}={raw!r} is not an integer") from None
    if t < 1:
        raise _UsageError(f"{THRESHOLD_ENV} must be >= 1")
    return t


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {s!r}")


def _name_list(choices):
    def parse(s: str) -> list[str]:
        names = [x for x in s.split(",") if x]
        bad = [x for x in names if x not in choices]
        if bad or not names:
            raise argparse.ArgumentTypeError(f"choose from {','.join(choices)}")
        return names
    return parse


def cmd_gen(args) -> int:
    try:
        A = generate(args.kind, args.n, args.r, args.p, args.seed)
    except (BadRank, ValueError) as exc:
        raise _UsageError(str(exc)) from None
    _write(args.out, emit_matrix(A, args.p))
    return EXIT_OK


def cmd_factor(args) -> int:
    A, p, _ = parse_matrix(_read(args.input))
    if A.shape[0] != A.shape[1]:
        raise NotSymmetric("matrix is not square")
    threshold = args.threshold if args.threshold is not None else _default_threshold()
    F = PrimeField(p)
    fact = ldlt(F, A, SytrfConfig(threshold, args.variant))
    if args.strict:
        fact = strictify(fact)
    _write(args.out, emit_factorization(fact))
    return EXIT_OK


def cmd_verify(args) -> int:
    A, p, _ = parse_matrix(_read(args.matrix))
    F = PrimeField(p)
    fact = parse_factorization(_read(args.factorization), F)
    if A.shape != (fact.order, fact.order):
        print(f"FAIL dimension {A.shape} vs factorization of order {fact.order}")
        return EXIT_VERIFY
    if not np.array_equal(reconstruct(fact), A):
        print("FAIL reconstruction")
        return EXIT_VERIFY
    if args.check_rpm and not np.array_equal(pivoting_matrix(fact), rpm_bruteforce(A, p)):
        print("FAIL rank profile matrix")
        return EXIT_VERIFY
    print(f"ok rank={fact.rank}")
    return EXIT_OK


def cmd_bench(args) -> int:
    threshold = args.threshold if args.threshold is not None else _default_threshold()
    try:
        records = run_bench(args.sizes, args.kind, args.variants, args.p, args.seed,
                            args.reps, threshold, args.rank_frac)
    except Exception as exc:  # anything raised while benchmarking
        print(f"bench failed: {exc}", file=sys.stderr)
        return EXIT_BENCH
    fh = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "r", "field", "variant", "seconds", "mul_count", "effective_gfops"])
        for rec in records:
            w.writerow([rec.n, rec.r, rec.field, rec.variant, f"{rec.seconds:.6g}",
                        rec.mul_count, f"{rec.effective_gfops:.6g}"])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rpm-ldlt", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a symmetric test matrix")
    g.add_argument("--kind", choices=KINDS, default="rpm-random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--p", type=int, default=8388593)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("factor", help="compute a PLDL^TP^T factorization")
    f.add_argument("input")
    f.add_argument("--variant", choices=VARIANTS, default="cascade")
    f.add_argument("--threshold", type=int, default=None,
                   help=f"base case size (default ${THRESHOLD_ENV} or {DEFAULT_THRESHOLD})")
    f.add_argument("--strict", action="store_true", help="replace antitriangular blocks by scalars")
    f.add_argument("--out", default="-")
    f.set_defaults(func=cmd_factor)

    v = sub.add_parser("verify", help="check a factorization against its matrix")
    v.add_argument("matrix")
    v.add_argument("factorization")
    v.add_argument("--check-rpm", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time factorizations and write CSV")
    b.add_argument("--sizes", type=_int_list, default=[256])
    b.add_argument("--kind", choices=KINDS, default="rpm-random")
    b.add_argument("--variants", type=_name_list(BENCH_VARIANTS), default=["rec", "crout", "cascade"])
    b.add_argument("--p", type=int, default=8388593)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--threshold", type=int, default=None)
    b.add_argument("--rank-frac", type=float, default=None,
                   help="rank as a fraction of n (default 1 for generic, 0.5 otherwise)")
    b.add_argument("--csv", default="-")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "threshold", None) is not None and args.threshold < 1:
        print("error: --threshold must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command in ("gen", "bench"):
            try:
                PrimeField(args.p)
            except ValueError as exc:
                raise _UsageError(str(exc)) from None
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotSymmetric as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOTSYM
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
