"""Turning a row-increasing triangle into a monotone one with the same entries.

An *inversion* is a pair of neighbouring entries ``b > a`` where ``a`` sits
one north-east step (upward inversion) or one south-east step (downward
inversion) from ``b``. Every inversion lives in exactly one order-2
sub-triangle ``top (i-1, j) / bottom (i, j), (i, j+1)``; a maximal run of
adjacent inverted sub-triangles between the same two rows is an *inverted
trapezoid*. Switching a trapezoid swaps all of its inversions at once.

Positions in the public objects are 1-based ``(row, column)`` pairs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import kernels
from .core import (
    MonotoneTriangle,
    RowIncreasingTriangle,
    _as_rows,
    entry_multiset,
    validate_monotone,
    validate_row_increasing,
)
from .errors import AsmProjError, SeamError, StaleTrapezoid

UP = "up"
DOWN = "down"


@dataclass(frozen=True)
class Inversion:
    """``big`` at ``position`` exceeds ``small`` at ``partner``."""

    position: tuple[int, int]
    direction: str
    partner: tuple[int, int]
    big: int
    small: int


@dataclass(frozen=True)
class InvertedTrapezoid:
    bottom_row: int
    first: int
    last: int
    inversions: tuple[Inversion, ...]
    height: int

    @property
    def top_row(self) -> int:
        return self.bottom_row - 1


def _subtriangle_inversion(top: Sequence[int], bottom: Sequence[int], j: int, i: int):
    """Inversion in the sub-triangle whose apex is ``top[j]`` (0-based), or None.

    ``i`` is the 1-based index of the bottom row.
    """
    a = top[j]
    if bottom[j] > a:
        return Inversion((i, j + 1), UP, (i - 1, j + 1), bottom[j], a)
    if a > bottom[j + 1]:
        return Inversion((i - 1, j + 1), DOWN, (i, j + 2), a, bottom[j + 1])
    return None


def trapezoids_between(top: Sequence[int], bottom: Sequence[int], bottom_row: int = 2,
                       n: int | None = None) -> list[InvertedTrapezoid]:
    """Inverted trapezoids between two adjacent rows, left to right.

    ``bottom`` must be one entry longer than ``top``. ``n`` (the order of the
    surrounding triangle) only feeds the height; it defaults to ``bottom_row``.
    """
    if len(bottom) != len(top) + 1:
        raise AsmProjError(f"row lengths {len(top)} and {len(bottom)} are not adjacent")
    if n is None:
        n = bottom_row
    out = []
    run: list[Inversion] = []
    start = 0
    for j in range(len(top) + 1):
        inv = _subtriangle_inversion(top, bottom, j, bottom_row) if j < len(top) else None
        if inv is not None:
            if not run:
                start = j
            run.append(inv)
        elif run:
            out.append(InvertedTrapezoid(bottom_row, start + 1, j, tuple(run), n - bottom_row))
            run = []
    return out


def find_inversions(t) -> list[Inversion]:
    """All inversions, top to bottom and left to right."""
    rows = _as_rows(t)
    out = []
    for i in range(1, len(rows)):
        top, bottom = rows[i - 1], rows[i]
        for j in range(len(top)):
            # a row-increasing triangle has at most one per sub-triangle; the
            # two checks are kept separate so raw data reports both
            a = top[j]
            if bottom[j] > a:
                out.append(Inversion((i + 1, j + 1), UP, (i, j + 1), bottom[j], a))
            if a > bottom[j + 1]:
                out.append(Inversion((i, j + 1), DOWN, (i + 1, j + 2), a, bottom[j + 1]))
    return out


def find_inverted_trapezoids(t) -> list[InvertedTrapezoid]:
    rows = _as_rows(t)
    n = len(rows)
    out = []
    for i in range(1, n):
        found = trapezoids_between(rows[i - 1], rows[i], bottom_row=i + 1, n=n)
        for z in found:
            entries = [p for inv in z.inversions for p in (inv.position, inv.partner)]
            if len(entries) != len(set(entries)):
                raise SeamError("trapezoid", f"an entry lies in two inversions of {z}")
        out.extend(found)
    return out


def potential_f(t) -> int:
    """Number of entries that reach a strictly smaller entry by NE/SE steps.

    Accepts any triangle-shaped data; rows need not increase.
    """
    rows = _as_rows(t)
    return kernels.potential([x for r in rows for x in r], len(rows))


def inverted_pair_count(t) -> int:
    """Number of (entry, smaller entry reachable from it) pairs.

    Every trapezoid switch lowers this count, which bounds the number of
    switches :func:`monotonize` performs.
    """
    rows = _as_rows(t)
    return kernels.inverted_pairs([x for r in rows for x in r], len(rows))


def _swap_rows(top: Sequence[int], bottom: Sequence[int], z: InvertedTrapezoid):
    i = z.bottom_row
    new = {i - 1: list(top), i: list(bottom)}
    for inv in z.inversions:
        (r1, c1), (r2, c2) = inv.position, inv.partner
        if new[r1][c1 - 1] != inv.big or new[r2][c2 - 1] != inv.small:
            raise StaleTrapezoid(f"{inv} does not match the triangle")
    for inv in z.inversions:
        (r1, c1), (r2, c2) = inv.position, inv.partner
        new[r1][c1 - 1], new[r2][c2 - 1] = inv.small, inv.big
    return tuple(new[i - 1]), tuple(new[i])


def switch_rows(top: Sequence[int], bottom: Sequence[int], z: InvertedTrapezoid,
                ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Switch trapezoid ``z`` found between ``top`` and ``bottom``."""
    current = trapezoids_between(top, bottom, z.bottom_row, z.bottom_row + z.height)
    if z not in current:
        raise StaleTrapezoid(f"trapezoid at rows {z.top_row},{z.bottom_row} is not current")
    return _swap_rows(top, bottom, z)


def switch_trapezoid(t: RowIncreasingTriangle, z: InvertedTrapezoid) -> RowIncreasingTriangle:
    rows = _as_rows(t)
    n = len(rows)
    i = z.bottom_row
    if not 2 <= i <= n or z.height != n - i:
        raise StaleTrapezoid(f"trapezoid rows {z.top_row},{i} do not fit order {n}")
    new_top, new_bottom = switch_rows(rows[i - 2], rows[i - 1], z)
    out = list(rows)
    out[i - 2], out[i - 1] = new_top, new_bottom
    try:
        result = validate_row_increasing(out)
    except AsmProjError as exc:
        raise SeamError("switch", f"result is not row-increasing: {exc}") from exc
    if entry_multiset(result) != entry_multiset(rows):
        raise SeamError("switch", "entry counts changed")
    before, after = inverted_pair_count(rows), inverted_pair_count(result)
    if not after < before:
        raise SeamError("switch", f"inverted pair count did not drop ({before} -> {after})")
    return result


def select_trapezoid(zs: Sequence[InvertedTrapezoid]) -> InvertedTrapezoid:
    """Bottom-most pair of rows first, then left-most."""
    return min(zs, key=lambda z: (-z.bottom_row, z.first))


@dataclass(frozen=True)
class SwitchStep:
    trapezoid: InvertedTrapezoid
    triangle: RowIncreasingTriangle
    f: int


def monotonize(t, trace: bool = False):
    """Switch trapezoids until none remain.

    Returns ``(monotone_triangle, steps)``; ``steps`` is ``None`` unless
    ``trace`` is set, in which case it lists each switch with the triangle it
    produced and that triangle's :func:`potential_f`.
    """
    current = validate_row_increasing(t)
    budget = inverted_pair_count(current)
    steps = [] if trace else None
    for _ in range(budget + 1):
        zs = find_inverted_trapezoids(current)
        if not zs:
            break
        z = select_trapezoid(zs)
        current = switch_trapezoid(current, z)
        if steps is not None:
            steps.append(SwitchStep(z, current, potential_f(current)))
    else:
        raise SeamError("monotonize", f"no fixed point within {budget} switches")
    try:
        result = validate_monotone(current)
    except AsmProjError as exc:
        raise SeamError("monotonize", f"no trapezoids left but not monotone: {exc}") from exc
    return result, steps


def monotonize_fast(t) -> tuple[MonotoneTriangle, int]:
    """Same fixed point as :func:`monotonize` through the flat kernel, without per-switch checks.

    Returns the triangle and the number of switches.
    """
    rows = validate_row_increasing(t).rows
    n = len(rows)
    flat, switches = kernels.monotonize_flat([x for r in rows for x in r], n)
    out, k = [], 0
    for i in range(1, n + 1):
        out.append(flat[k:k + i])
        k += i
    return validate_monotone(out), switches


@dataclass(frozen=True)
class SweepReport:
    n: int
    triangles: int
    total_switches: int
    max_switches: int
    failures: int
    over_potential: int
    backend: str


def sweep(n: int) -> SweepReport:
    """Monotonize every row-increasing triangle of order ``n`` in the kernel.

    ``failures`` counts runs that end non-monotone, change the entry counts, or
    exceed the input's inverted pair count; ``over_potential`` counts runs
    needing more switches than :func:`potential_f` of the input.
    """
    count, total, worst, failures, over = kernels.sweep_row_increasing(n)
    return SweepReport(n, count, total, worst, failures, over, kernels.BACKEND)
