"""Majorization and (0,1)-matrices with row sums ``(1, 2, ..., n)``."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import accumulate

from .core import IntMatrix, IntVector, _as_rows, staircase
from .errors import Infeasible, LengthMismatch, NegativeEntry, NonPositiveEntry, NotMajorized


def conjugate(x: Sequence[int], n: int | None = None) -> IntVector:
    """Entry ``k`` (for ``k = 1..n``) counts the entries of ``x`` that are at least ``k``."""
    if any(v < 0 for v in x):
        raise NegativeEntry(f"conjugate needs non-negative entries, got {tuple(x)}")
    if n is None:
        n = len(x)
    return tuple(sum(1 for v in x if v >= k) for k in range(1, n + 1))


def majorized_by(x: Sequence[int], y: Sequence[int]) -> bool:
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)}")
    px = list(accumulate(sorted(x, reverse=True)))
    py = list(accumulate(sorted(y, reverse=True)))
    if not px:
        return True
    return px[-1] == py[-1] and all(a <= b for a, b in zip(px, py))


def gale_ryser_feasible(row_sums: Sequence[int], col_sums: Sequence[int]) -> bool:
    """Whether some (0,1)-matrix has these row and column sums."""
    if any(v < 0 for v in row_sums) or any(v < 0 for v in col_sums):
        return False
    return majorized_by(col_sums, conjugate(row_sums, len(col_sums)))


def _check_target(col_sums: Sequence[int]) -> IntVector:
    v = tuple(int(x) for x in col_sums)
    if not v:
        raise LengthMismatch("empty vector")
    if any(x <= 0 for x in v):
        raise NonPositiveEntry(f"entries must be positive, got {v}")
    if not majorized_by(v, staircase(len(v))):
        raise NotMajorized(f"{v} is not majorized by {staircase(len(v))}")
    return v


def ryser_fill(row_sums: Sequence[int], col_sums: Sequence[int]) -> list[list[int]]:
    """Greedy fill: each row, in the given order, takes the columns of largest remaining demand.

    Ties go to the smaller column index. Raises :class:`Infeasible` when a row
    cannot be placed.
    """
    m = len(col_sums)
    demand = list(col_sums)
    out = []
    for i, r in enumerate(row_sums):
        order = sorted(range(m), key=lambda j: (-demand[j], j))[:r]
        if len(order) < r or any(demand[j] <= 0 for j in order):
            raise Infeasible(f"row {i + 1} (sum {r}) cannot be placed")
        row = [0] * m
        for j in order:
            row[j] = 1
            demand[j] -= 1
        out.append(row)
    if any(demand):
        raise Infeasible(f"column demand left over: {demand}")
    return out


def construct_01_matrix(col_sums: Sequence[int]) -> IntMatrix:
    """(0,1)-matrix with row sums ``1..n`` top to bottom and the given column sums.

    Rows are filled from the longest (sum ``n``) to the shortest and the result
    is reflected top-to-bottom.
    """
    v = _check_target(col_sums)
    n = len(v)
    filled = ryser_fill(staircase(n), v)
    return reflect_vertical(filled)


def reflect_vertical(m) -> IntMatrix:
    return IntMatrix(tuple(reversed(_as_rows(m))))
