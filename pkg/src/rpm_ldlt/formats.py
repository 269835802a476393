"""Plain-text matrix and factorization files.

Matrix file::

    SymMat <n> <p>        or    Mat <m> <n> <p>
    <row 0 entries>
    ...

Factorization file::

    rank <r>
    P <image of 0> <image of 1> ...
    L
    <N rows of r entries>
    D
    S <d> | A <x> | T <c> <d>      (one line per block)
"""

from __future__ import annotations

import numpy as np

from .densecore import AntiDiag, AntiTri, BlockDiag, Factorization, Permutation, Scalar
from .errors import NotSymmetric, ParseError
from .field import PrimeField


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {what}: {exc}") from None


def _lines(text: str) -> list[str]:
    return text.split("\n")[:-1] if text.endswith("\n") else text.split("\n")


def emit_matrix(A: np.ndarray, p: int, symmetric: bool = True) -> str:
    m, n = A.shape
    head = f"SymMat {n} {p}" if symmetric else f"Mat {m} {n} {p}"
    rows = [" ".join(str(int(v)) for v in row) for row in A]
    return "\n".join([head] + rows) + "\n"


def parse_matrix(text: str):
    """Return ``(A, p, symmetric)``; raises ParseError or NotSymmetric."""
    lines = _lines(text)
    if not lines or not lines[0].strip():
        raise ParseError("empty matrix file")
    head = lines[0].split()
    if head[0] == "SymMat" and len(head) == 3:
        n, p = _ints(head[1:], "header")
        m, sym = n, True
    elif head[0] == "Mat" and len(head) == 4:
        m, n, p = _ints(head[1:], "header")
        sym = False
    else:
        raise ParseError(f"bad header {lines[0]!r}")
    if m < 0 or n < 0:
        raise ParseError("negative dimension")
    try:
        F = PrimeField(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} rows, found {len(body)}")
    rows = []
    for k, line in enumerate(body):
        vals = _ints(line.split(), f"row {k}")
        if len(vals) != n:
            raise ParseError(f"row {k} has {len(vals)} entries, expected {n}")
        if any(v < 0 or v >= p for v in vals):
            raise ParseError(f"row {k} has entries outside [0, {p})")
        rows.append(vals)
    A = F.array(np.array(rows, dtype=object).reshape(m, n)) if m and n else F.zeros((m, n))
    if sym and not np.array_equal(A, A.T):
        raise NotSymmetric("SymMat payload is not symmetric")
    return A, p, sym


def emit_factorization(F: Factorization) -> str:
    out = [f"rank {F.rank}", " ".join(["P"] + [str(int(i)) for i in F.P.image]), "L"]
    out += [" ".join(str(int(v)) for v in row) for row in F.L]
    out.append("D")
    for b in F.D.blocks:
        if isinstance(b, Scalar):
            out.append(f"S {b.d}")
        elif isinstance(b, AntiDiag):
            out.append(f"A {b.x}")
        else:
            out.append(f"T {b.c} {b.d}")
    return "\n".join(out) + "\n"


def parse_factorization(text: str, field: PrimeField) -> Factorization:
    lines = _lines(text)
    try:
        tag, r = lines[0].split()
        if tag != "rank":
            raise ValueError
        r = int(r)
        ptoks = lines[1].split()
        if not ptoks or ptoks[0] != "P":
            raise ValueError
        image = _ints(ptoks[1:], "P")
        N = len(image)
        if lines[2] != "L" or lines[3 + N] != "D":
            raise ValueError
    except (ValueError, IndexError):
        raise ParseError("malformed factorization header") from None
    if sorted(image) != list(range(N)) or not 0 <= r <= N:
        raise ParseError("P is not a permutation or rank out of range")
    Lrows = []
    for k in range(N):
        vals = _ints(lines[3 + k].split(), f"L row {k}")
        if len(vals) != r or any(v < 0 or v >= field.p for v in vals):
            raise ParseError(f"L row {k} malformed")
        Lrows.append(vals)
    blocks = []
    for line in lines[4 + N:]:
        t = line.split()
        vals = _ints(t[1:], "D")
        if any(v <= 0 or v >= field.p for v in vals):
            raise ParseError(f"D entry out of range in {line!r}")
        if t[:1] == ["S"] and len(vals) == 1:
            blocks.append(Scalar(vals[0]))
        elif t[:1] == ["A"] and len(vals) == 1:
            blocks.append(AntiDiag(vals[0]))
        elif t[:1] == ["T"] and len(vals) == 2:
            blocks.append(AntiTri(*vals))
        else:
            raise ParseError(f"bad D line {line!r}")
    D = BlockDiag(tuple(blocks))
    if D.order != r:
        raise ParseError(f"D has order {D.order}, rank is {r}")
    L = field.array(np.array(Lrows, dtype=object).reshape(N, r)) if N and r else field.zeros((N, r))
    return Factorization(P=Permutation(image), L=L, D=D, field=field)
