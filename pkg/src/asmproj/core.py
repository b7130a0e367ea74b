"""Shared domain types, structural validation and the weighted projection.

Matrices and triangles are immutable and stored 0-based internally; every
index that reaches a user (error messages, file formats) is 1-based.

Triangle coordinates: row ``i`` holds ``i`` entries. A north-east step goes
``(i, j) -> (i-1, j)`` and a south-east step goes ``(i, j) -> (i+1, j+1)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    BadShape,
    EntryOutOfRange,
    InterlacingViolated,
    LineNotAlternating,
    LineSumNotOne,
    NotSquare,
    RowNotStrict,
    ValueOutOfRange,
)

IntVector = tuple[int, ...]


def _as_rows(m) -> tuple[tuple, ...]:
    if isinstance(m, IntMatrix):
        return m.rows
    rows = getattr(m, "rows", m)
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Square matrix of Python integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise NotSquare(f"expected a non-empty square matrix, got row lengths {[len(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)))

    def rotate(self) -> IntMatrix:
        """Quarter turn clockwise."""
        return IntMatrix(tuple(tuple(reversed(c)) for c in zip(*self.rows)))

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"


class Asm(IntMatrix):
    """An alternating sign matrix. Build through :func:`validate_asm`."""


class PartialSumMatrix(IntMatrix):
    """Column prefix sums of an ASM; a (0,1)-matrix whose row ``i`` has ``i`` ones."""


@dataclass(frozen=True, eq=False)
class RowIncreasingTriangle:
    """Triangular array of order ``n`` with strictly increasing rows."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def __eq__(self, other):
        if isinstance(other, RowIncreasingTriangle):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({'/'.join(','.join(map(str, r)) for r in self.rows)})"


class MonotoneTriangle(RowIncreasingTriangle):
    """Row-increasing triangle whose north-east and south-east lines weakly increase."""


def triangle_rows_from_flat(flat: Sequence[int], n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    k = 0
    for i in range(1, n + 1):
        out.append(tuple(flat[k:k + i]))
        k += i
    return tuple(out)


# -- validation --------------------------------------------------------------

def _check_line(line: Sequence[int], kind: str, index) -> None:
    # sum is checked before alternation
    total = sum(line)
    if total != 1:
        raise LineSumNotOne(kind, index, f"sum is {total}")
    running = 0
    for x in line:
        running += x
        if running not in (0, 1):
            raise LineNotAlternating(kind, index, f"entries {list(line)}")


def check_alternating_line(line: Sequence[int], kind: str = "line", index=0) -> None:
    """Raise :class:`LineNotAlternating` unless the non-zero entries read +1, -1, ..., +1."""
    nonzero = [x for x in line if x]
    ok = bool(nonzero) and nonzero[0] == 1 and nonzero[-1] == 1 and all(
        a == -b for a, b in zip(nonzero, nonzero[1:])
    )
    if not ok:
        raise LineNotAlternating(kind, index, f"entries {list(line)}")


def validate_asm(m) -> Asm:
    """Validate ``m`` (an :class:`IntMatrix` or nested rows) as an ASM.

    A line passes when every running sum of its non-zero entries is 0 or 1
    and the total is 1; this is the same as alternating signs summing to 1.
    """
    rows = _as_rows(m)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"row lengths {[len(r) for r in rows]}")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if x not in (-1, 0, 1):
                raise EntryOutOfRange(f"entry ({i + 1},{j + 1}) = {x}")
    for i, r in enumerate(rows):
        _check_line(r, "row", i + 1)
    for j, c in enumerate(zip(*rows)):
        _check_line(c, "column", j + 1)
    return Asm(rows)


def _check_triangle_shape(rows) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if not rows:
        raise BadShape("empty triangle")
    for i, r in enumerate(rows):
        if len(r) != i + 1:
            raise BadShape(f"row {i + 1} has {len(r)} entries, expected {i + 1}")
    return rows


def validate_row_increasing(t) -> RowIncreasingTriangle:
    rows = _check_triangle_shape(_as_rows(t))
    n = len(rows)
    for i, r in enumerate(rows):
        for x in r:
            if not 1 <= x <= n:
                raise ValueOutOfRange(f"row {i + 1} contains {x}, outside 1..{n}")
        if any(a >= b for a, b in zip(r, r[1:])):
            raise RowNotStrict(i + 1)
    return RowIncreasingTriangle(rows)


def validate_monotone(t) -> MonotoneTriangle:
    rows = validate_row_increasing(t).rows
    for i in range(len(rows) - 1):
        upper, lower = rows[i], rows[i + 1]
        for j, x in enumerate(upper):
            if not lower[j] <= x <= lower[j + 1]:
                raise InterlacingViolated(i + 1, j + 1)
    return MonotoneTriangle(rows)


# -- projections -------------------------------------------------------------

def weighted_projection(m) -> tuple:
    """Column sums weighted by ``n, n-1, ..., 1`` from the top row down.

    Works for any square matrix of numbers (integers or fractions).
    """
    rows = _as_rows(m)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"row lengths {[len(r) for r in rows]}")
    return tuple(sum((n - i) * rows[i][j] for i in range(n)) for j in range(n))


def entry_multiset(t) -> IntVector:
    """Occurrence counts of ``1..n`` among the entries of a triangle."""
    rows = _as_rows(t)
    n = len(rows)
    counts = [0] * n
    for r in rows:
        for x in r:
            counts[x - 1] += 1
    return tuple(counts)


def identity(n: int) -> Asm:
    return Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def staircase(n: int) -> tuple[int, ...]:
    """The vector ``(n, n-1, ..., 1)``."""
    return tuple(range(n, 0, -1))
