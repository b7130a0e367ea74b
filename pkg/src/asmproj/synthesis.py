"""Building an ASM with a prescribed weighted projection, and checking that exhaustively.

The construction is a chain of four stages, each checked where it hands over
to the next:

1. a (0,1)-matrix with row sums ``1..n`` and column sums ``v``;
2. the row-increasing triangle read off its rows;
3. trapezoid switching down to a monotone triangle with the same entries;
4. the ASM of that monotone triangle.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .bijection import asm_from_monotone, triangle_from_01
from .core import Asm, IntMatrix, MonotoneTriangle, RowIncreasingTriangle, weighted_projection
from .errors import AsmProjError, LimitExceeded, SeamError
from .galeryser import _check_target, construct_01_matrix
from .monotonize import SwitchStep, monotonize

EXHAUSTIVE_LIMIT = 5


@dataclass(frozen=True)
class Construction:
    target: tuple[int, ...]
    matrix01: IntMatrix
    triangle: RowIncreasingTriangle
    steps: tuple[SwitchStep, ...]
    monotone: MonotoneTriangle
    asm: Asm


def construct(v: Sequence[int]) -> Construction:
    """Run the whole pipeline for ``v`` and keep every intermediate object."""
    target = _check_target(v)
    n = len(target)

    m01 = construct_01_matrix(target)
    if tuple(sum(r) for r in m01.rows) != tuple(range(1, n + 1)):
        raise SeamError("01-matrix", f"row sums {[sum(r) for r in m01.rows]}")
    if tuple(sum(c) for c in m01.columns()) != target:
        raise SeamError("01-matrix", f"column sums {[sum(c) for c in m01.columns()]}")

    try:
        tri = triangle_from_01(m01)
    except AsmProjError as exc:
        raise SeamError("triangle", str(exc)) from exc

    mono, steps = monotonize(tri, trace=True)

    try:
        asm = asm_from_monotone(mono)
    except AsmProjError as exc:
        raise SeamError("asm", str(exc)) from exc
    got = weighted_projection(asm)
    if got != target:
        raise SeamError("asm", f"projection {got} != {target}")
    return Construction(target, m01, tri, tuple(steps), mono, asm)


def asm_with_projection(v: Sequence[int]) -> Asm:
    """An ASM whose weighted projection is ``v``.

    Raises :class:`~asmproj.errors.NotMajorized` unless ``v`` is majorized by
    ``(n, ..., 1)`` and :class:`~asmproj.errors.NonPositiveEntry` for entries below 1.
    """
    return construct(v).asm


@dataclass
class ProjectionSetReport:
    n: int
    projections: int
    majorized: int
    sets_equal: bool
    constructed: int
    missing_from_asms: list = field(default_factory=list)
    not_majorized: list = field(default_factory=list)
    construction_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sets_equal and not self.construction_failures and self.constructed == self.majorized


def verify_projection_set(n: int, limit: int = EXHAUSTIVE_LIMIT) -> ProjectionSetReport:
    """Compare every ASM projection with every positive vector majorized by ``(n, ..., 1)``.

    Also runs :func:`asm_with_projection` on each such vector and checks the result.
    """
    from .enumeration import enumerate_asms, enumerate_majorized_vectors

    if n > limit:
        raise LimitExceeded(f"order {n} above exhaustive limit {limit}")
    projections = {weighted_projection(a) for a in enumerate_asms(n, limit=limit)}
    majorized = set(enumerate_majorized_vectors(n, limit=limit))
    report = ProjectionSetReport(
        n=n,
        projections=len(projections),
        majorized=len(majorized),
        sets_equal=projections == majorized,
        constructed=0,
        missing_from_asms=sorted(majorized - projections),
        not_majorized=sorted(projections - majorized),
    )
    for v in sorted(majorized):
        try:
            a = asm_with_projection(v)
        except (AsmProjError, SeamError) as exc:
            report.construction_failures.append((v, str(exc)))
            continue
        if weighted_projection(a) == v:
            report.constructed += 1
        else:
            report.construction_failures.append((v, f"projection {weighted_projection(a)}"))
    return report
