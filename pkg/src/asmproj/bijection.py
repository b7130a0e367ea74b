"""ASM <-> partial sum matrix <-> triangle correspondence."""

from __future__ import annotations

from itertools import accumulate

from .core import (
    Asm,
    IntMatrix,
    MonotoneTriangle,
    PartialSumMatrix,
    RowIncreasingTriangle,
    _as_rows,
    validate_asm,
    validate_row_increasing,
)
from .errors import AsmProjError, BadRowSums, NotAnAsm


def partial_sum(a: Asm) -> PartialSumMatrix:
    """Column prefix sums of ``a``: entry (i, j) sums rows 1..i of column j."""
    cols = [tuple(accumulate(c)) for c in zip(*_as_rows(a))]
    rows = tuple(zip(*cols))
    if any(x not in (0, 1) for r in rows for x in r):
        raise NotAnAsm("column prefix sums leave {0, 1}")
    return PartialSumMatrix(rows)


def asm_from_partial_sum(p) -> Asm:
    rows = _as_rows(p)
    prev = (0,) * len(rows)
    diff = []
    for r in rows:
        diff.append(tuple(x - y for x, y in zip(r, prev)))
        prev = r
    try:
        return validate_asm(diff)
    except AsmProjError as exc:
        raise NotAnAsm(f"row differences do not form an ASM ({exc})") from exc


def triangle_from_01(m) -> RowIncreasingTriangle:
    """Row ``i`` of the triangle lists the (1-based) columns holding ones in row ``i``."""
    rows = _as_rows(m)
    n = len(rows)
    out = []
    for i, r in enumerate(rows, start=1):
        if any(x not in (0, 1) for x in r):
            raise BadRowSums(f"row {i} is not a (0,1)-row")
        ones = tuple(j for j, x in enumerate(r, start=1) if x)
        if len(ones) != i:
            raise BadRowSums(f"row {i} has {len(ones)} ones, expected {i}")
        out.append(ones)
    return validate_row_increasing(out) if n else RowIncreasingTriangle(())


def matrix01_from_triangle(t) -> IntMatrix:
    rows = _as_rows(t)
    n = len(rows)
    out = []
    for r in rows:
        line = [0] * n
        for x in r:
            line[x - 1] = 1
        out.append(tuple(line))
    return IntMatrix(tuple(out))


def monotone_from_asm(a: Asm) -> MonotoneTriangle:
    return MonotoneTriangle(triangle_from_01(partial_sum(a)).rows)


def asm_from_monotone(t) -> Asm:
    # interlacing should make the difference matrix an ASM; re-validated
    # rather than trusted
    return asm_from_partial_sum(matrix01_from_triangle(t))
