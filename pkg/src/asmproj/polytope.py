"""Exact-rational members of the ASM polytope and T-block decompositions.

A T-block ``T(i1,j1;i2,j2)`` with ``i1 < i2`` and ``j1 < j2`` is the matrix
with +1 at ``(i1,j1)``, ``(i2,j2)`` and -1 at ``(i2,j1)``, ``(i1,j2)``, or
its negative. Its depth is ``i2 - i1`` for the positive block and
``i1 - i2`` for the negative one.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import IntMatrix, _as_rows, weighted_projection
from .errors import (
    CornerOutOfRange,
    LineSumNotOne,
    NegativePartialSum,
    NotSquare,
    OrderMismatch,
    ProjectionMismatch,
    SeamError,
)


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise NotSquare(f"row lengths {[len(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return RationalMatrix(_add(self.rows, _as_rows(other)))

    def __sub__(self, other):
        return RationalMatrix(_add(self.rows, _as_rows(other), -1))

    def __repr__(self):
        return f"{type(self).__name__}({[[str(x) for x in r] for r in self.rows]})"


class PolytopeMatrix(RationalMatrix):
    """A member of the ASM polytope. Build through :func:`validate_polytope`."""


def _add(a, b, scale=1):
    if len(a) != len(b):
        raise OrderMismatch(f"orders {len(a)} and {len(b)}")
    return tuple(tuple(x + scale * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def as_rational(m) -> RationalMatrix:
    if isinstance(m, RationalMatrix):
        return m
    return RationalMatrix(_as_rows(m))


def validate_polytope(m) -> PolytopeMatrix:
    """Line sums 1 and every partial line sum, from either end, non-negative."""
    rows = as_rational(m).rows
    lines = [("row", i + 1, r) for i, r in enumerate(rows)]
    lines += [("column", j + 1, c) for j, c in enumerate(zip(*rows))]
    for kind, idx, line in lines:
        if sum(line) != 1:
            raise LineSumNotOne(kind, idx, f"sum is {sum(line)}")
    for kind, idx, line in lines:
        s = Fraction(0)
        for k, x in enumerate(line, start=1):
            s += x
            if s < 0:
                raise NegativePartialSum(kind, idx, k)
        s = Fraction(0)
        for k, x in enumerate(reversed(line), start=1):
            s += x
            if s < 0:
                raise NegativePartialSum(kind, idx, k, from_end=True)
    return PolytopeMatrix(rows)


# -- T-blocks ----------------------------------------------------------------

@dataclass(frozen=True)
class TBlock:
    """1-based corner rows ``i1 < i2``, columns ``j1 < j2``, sign +1 or -1."""

    i1: int
    j1: int
    i2: int
    j2: int
    sign: int = 1

    def __post_init__(self):
        if not (self.i1 < self.i2 and self.j1 < self.j2):
            raise CornerOutOfRange(f"need i1 < i2 and j1 < j2, got {self}")
        if self.sign not in (1, -1):
            raise CornerOutOfRange(f"sign must be +1 or -1, got {self.sign}")

    @property
    def depth(self) -> int:
        return self.sign * (self.i2 - self.i1)

    def __neg__(self) -> TBlock:
        return TBlock(self.i1, self.j1, self.i2, self.j2, -self.sign)

    def cells(self):
        """``((row, col), value)`` for the four non-zero cells, 0-based."""
        s = self.sign
        return (
            ((self.i1 - 1, self.j1 - 1), s),
            ((self.i2 - 1, self.j2 - 1), s),
            ((self.i2 - 1, self.j1 - 1), -s),
            ((self.i1 - 1, self.j2 - 1), -s),
        )

    def label(self, letter: str = "T") -> str:
        return f"{letter}({self.i1},{self.j1};{self.i2},{self.j2},{'+' if self.sign > 0 else '-'})"

    def __str__(self):
        return self.label()


def tblock_matrix(b: TBlock, n: int) -> IntMatrix:
    if b.i2 > n or b.j2 > n or b.i1 < 1 or b.j1 < 1:
        raise CornerOutOfRange(f"{b} does not fit order {n}")
    m = [[0] * n for _ in range(n)]
    for (i, j), v in b.cells():
        m[i][j] = v
    return IntMatrix(tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class TBlockTerm:
    """``coefficient * block``, or ``coefficient * (block + partner)`` for paired terms."""

    coefficient: Fraction
    block: TBlock
    partner: TBlock | None = None

    def __post_init__(self):
        if self.coefficient == 0:
            raise SeamError("term", "zero coefficient")
        if self.partner is not None and self.block.depth != -self.partner.depth:
            raise SeamError("term", f"depths {self.block.depth} and {self.partner.depth} are not opposite")

    def __str__(self):
        s = f"{self.coefficient}  {self.block}"
        if self.partner is not None:
            s += f"  {self.partner.label('S')}"
        return s


def _subtract_block(d: list[list[Fraction]], c: Fraction, b: TBlock) -> None:
    for (i, j), v in b.cells():
        d[i][j] -= c * v


def apply_terms(a, terms: Sequence[TBlockTerm]) -> RationalMatrix:
    """``a`` plus every term, exactly. The result need not lie in the polytope."""
    rows = as_rational(a).rows
    n = len(rows)
    m = [list(r) for r in rows]
    for t in terms:
        for b in (t.block, t.partner):
            if b is None:
                continue
            if b.i2 > n or b.j2 > n:
                raise OrderMismatch(f"{b} does not fit order {n}")
            for (i, j), v in b.cells():
                m[i][j] += t.coefficient * v
    return RationalMatrix(tuple(tuple(r) for r in m))


def _difference(a, b) -> list[list[Fraction]]:
    ra, rb = as_rational(a).rows, as_rational(b).rows
    if len(ra) != len(rb):
        raise OrderMismatch(f"orders {len(ra)} and {len(rb)}")
    return [[y - x for x, y in zip(r1, r2)] for r1, r2 in zip(ra, rb)]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def decompose_tblocks(a, b) -> list[TBlockTerm]:
    """Terms with ``b == apply_terms(a, terms)``.

    Scans ``D = b - a`` row by row for its first non-zero ``(i, j)``, pairs it
    with the first opposite-sign entries right of it in row ``i`` and below it
    in column ``j``, and cancels it with one block. Each step moves the first
    non-zero strictly forward, so there are at most ``n**2`` terms.
    """
    d = _difference(a, b)
    n = len(d)
    terms = []
    last = -1
    for _ in range(n * n + 1):
        first = next(((i, j) for i in range(n) for j in range(n) if d[i][j] != 0), None)
        if first is None:
            return terms
        i, j = first
        if i * n + j <= last:
            raise SeamError("tblocks", "scan position did not advance")
        last = i * n + j
        s = _sign(d[i][j])
        j2 = next((k for k in range(j + 1, n) if _sign(d[i][k]) == -s), None)
        i2 = next((k for k in range(i + 1, n) if _sign(d[k][j]) == -s), None)
        if j2 is None or i2 is None:
            raise SeamError("tblocks", f"no opposite-sign partner for ({i + 1},{j + 1}); line sums differ")
        block = TBlock(i + 1, j + 1, i2 + 1, j2 + 1, s)
        c = abs(d[i][j])
        _subtract_block(d, c, block)
        terms.append(TBlockTerm(c, block))
    raise SeamError("tblocks", f"more than {n * n} steps")


def decompose_paired(a, b) -> list[TBlockTerm]:
    """Paired terms of opposite depth with ``b == apply_terms(a, terms)``.

    Needs ``a`` and ``b`` to share their weighted projection. The scan is
    column by column. With the first non-zero ``(i, j)`` made positive, ``i'``
    is the first negative entry below it, ``p`` the first positive entry below
    ``i'``, ``p' = p - (i' - i)`` and ``j'`` the first negative entry in row ``i``;
    the step subtracts ``D(i,j) * (T(i,j;i',j') - T(p',j;p,j'))``.
    """
    ra, rb = as_rational(a), as_rational(b)
    if ra.n != rb.n:
        raise OrderMismatch(f"orders {ra.n} and {rb.n}")
    va, vb = weighted_projection(ra), weighted_projection(rb)
    if va != vb:
        raise ProjectionMismatch(f"projections {tuple(map(str, va))} and {tuple(map(str, vb))} differ")
    d = _difference(ra, rb)
    n = len(d)
    terms = []
    last = -1
    for _ in range(n * n + 1):
        first = next(((i, j) for j in range(n) for i in range(n) if d[i][j] != 0), None)
        if first is None:
            return terms
        i, j = first
        if j * n + i <= last:
            raise SeamError("paired", "scan position did not advance")
        last = j * n + i
        s = _sign(d[i][j])
        # work on s * D so the leading entry is positive
        i_neg = next((k for k in range(i + 1, n) if s * d[k][j] < 0), None)
        if i_neg is None:
            raise SeamError("paired", f"column {j + 1} has no negative entry below row {i + 1}")
        p = next((k for k in range(i_neg + 1, n) if s * d[k][j] > 0), None)
        if p is None:
            raise SeamError("paired", f"column {j + 1} has no positive entry below row {i_neg + 1}")
        p_prime = p - (i_neg - i)
        j_neg = next((k for k in range(j + 1, n) if s * d[i][k] < 0), None)
        if j_neg is None:
            raise SeamError("paired", f"row {i + 1} has no opposite-sign entry")
        first_block = TBlock(i + 1, j + 1, i_neg + 1, j_neg + 1, 1)
        second_block = TBlock(p_prime + 1, j + 1, p + 1, j_neg + 1, -1)
        c = d[i][j]
        _subtract_block(d, c, first_block)
        _subtract_block(d, c, second_block)
        terms.append(TBlockTerm(c, first_block, second_block))
    raise SeamError("paired", f"more than {n * n} steps")
