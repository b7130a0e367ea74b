"""Exhaustive generators used as oracles at small order.

:func:`enumerate_asms` fills matrices cell by cell and never touches the
triangle bijection, so it can be used to check it.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product

from . import kernels
from .core import Asm, MonotoneTriangle, RowIncreasingTriangle, staircase
from .errors import LimitExceeded
from .galeryser import majorized_by

TRIANGLE_LIMIT = 6
ASM_LIMIT = 6
ROW_INCREASING_LIMIT = 5
VECTOR_LIMIT = 6
COUNT_LIMIT = 9


def _guard(n: int, limit: int) -> None:
    if n < 1:
        raise LimitExceeded(f"order must be positive, got {n}")
    if n > limit:
        raise LimitExceeded(f"order {n} exceeds limit {limit}")


def enumerate_monotone(n: int, limit: int = TRIANGLE_LIMIT) -> Iterator[MonotoneTriangle]:
    """Every monotone triangle of order ``n``, built upwards from the bottom row ``1..n``."""
    _guard(n, limit)

    def above(lower):
        # entry j of the row above lies in [lower[j], lower[j+1]], strictly increasing
        def rec(j, prev, acc):
            if j == len(lower) - 1:
                yield tuple(acc)
                return
            for x in range(max(lower[j], prev + 1), lower[j + 1] + 1):
                acc.append(x)
                yield from rec(j + 1, x, acc)
                acc.pop()

        yield from rec(0, 0, [])

    def build(rows):
        if len(rows[0]) == 1:
            yield MonotoneTriangle(tuple(rows))
            return
        for r in above(rows[0]):
            yield from build([r] + rows)

    yield from build([tuple(range(1, n + 1))])


def enumerate_asms(n: int, limit: int = ASM_LIMIT) -> Iterator[Asm]:
    """Every ``n x n`` ASM, in lexicographic order of the row-major entries (-1 < 0 < 1)."""
    _guard(n, limit)
    for flat in kernels.asm_entries(n):
        yield Asm(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def count_asms(n: int, limit: int = COUNT_LIMIT) -> int:
    """Number of ``n x n`` ASMs by backtracking, without materialising them."""
    _guard(n, limit)
    return kernels.count_asms(n)


def enumerate_row_increasing(n: int, limit: int = ROW_INCREASING_LIMIT) -> Iterator[RowIncreasingTriangle]:
    _guard(n, limit)
    values = range(1, n + 1)
    for rows in product(*(combinations(values, i) for i in range(1, n + 1))):
        yield RowIncreasingTriangle(rows)


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``parts`` positive parts, non-increasing."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(largest, total - (parts - 1)), 0, -1):
        if first * parts < total:
            break
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def multiset_permutations(items) -> Iterator[tuple[int, ...]]:
    """Distinct permutations in lexicographic order."""
    a = sorted(items)
    while True:
        yield tuple(a)
        k = len(a) - 2
        while k >= 0 and a[k] >= a[k + 1]:
            k -= 1
        if k < 0:
            return
        m = len(a) - 1
        while a[m] <= a[k]:
            m -= 1
        a[k], a[m] = a[m], a[k]
        a[k + 1:] = reversed(a[k + 1:])


def enumerate_majorized_vectors(n: int, limit: int = VECTOR_LIMIT) -> Iterator[tuple[int, ...]]:
    """Positive integer vectors of length ``n`` majorized by ``(n, ..., 1)``."""
    _guard(n, limit)
    z = staircase(n)
    for p in partitions(n * (n + 1) // 2, n):
        if majorized_by(p, z):
            yield from multiset_permutations(p)
