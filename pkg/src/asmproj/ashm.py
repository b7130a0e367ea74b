"""Alternating sign hypermatrices and their Latin-like squares.

An order-``n`` hypermatrix is stored as ``planes[k][i][j]`` with plane
``k = 1..n`` carrying weight ``k`` (plane 1 is the bottom plane when the
planes are drawn stacked).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import product

from .core import Asm, IntMatrix, check_alternating_line, staircase, validate_asm
from .errors import AsmProjError, BadShape, EntryOutOfRange, ParseError
from .galeryser import majorized_by


@dataclass(frozen=True)
class Ashm:
    planes: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def n(self) -> int:
        return len(self.planes)

    def plane(self, k: int) -> Asm:
        """Plane ``k`` (1-based) as an ASM."""
        return Asm(self.planes[k - 1])

    def vertical(self, i: int, j: int) -> tuple[int, ...]:
        """Vertical line at 0-based cell ``(i, j)``, ordered by plane."""
        return tuple(p[i][j] for p in self.planes)


def validate_ashm(h) -> Ashm:
    planes = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in getattr(h, "planes", h))
    n = len(planes)
    if n == 0 or any(len(p) != n or any(len(r) != n for r in p) for p in planes):
        raise BadShape("hypermatrix must be n x n x n")
    for k, p in enumerate(planes, start=1):
        for i, r in enumerate(p, start=1):
            for j, x in enumerate(r, start=1):
                if x not in (-1, 0, 1):
                    raise EntryOutOfRange(f"entry ({i},{j},{k}) = {x}")
    for k, p in enumerate(planes, start=1):
        for i in range(n):
            check_alternating_line(p[i], "column", (i + 1, k))
        for j in range(n):
            check_alternating_line(tuple(r[j] for r in p), "row", (j + 1, k))
    for i in range(n):
        for j in range(n):
            check_alternating_line(tuple(p[i][j] for p in planes), "vertical", (i + 1, j + 1))
    for p in planes:
        validate_asm(p)
    return Ashm(planes)


def ashl(a: Ashm) -> IntMatrix:
    n = a.n
    return IntMatrix(tuple(
        tuple(sum(k * a.planes[k - 1][i][j] for k in range(1, n + 1)) for j in range(n))
        for i in range(n)
    ))


# -- grid notation -----------------------------------------------------------

def cell_text(line: Sequence[int]) -> str:
    return "".join(f"{'+' if x > 0 else '-'}{k}" for k, x in enumerate(line, start=1) if x)


def grid_notation(a: Ashm) -> str:
    """Header line ``n``, then one line per row of cells such as ``+1-2+3``."""
    n = a.n
    lines = [str(n)]
    for i in range(n):
        lines.append(" ".join(cell_text(a.vertical(i, j)) for j in range(n)))
    return "\n".join(lines) + "\n"


_TERM = re.compile(r"([+-]?)(\d+)")


def parse_cell(text: str, n: int) -> tuple[int, ...]:
    """Vertical line from a cell such as ``1-3+6``; a missing leading sign means ``+``."""
    text = text.strip()
    pos = 0
    line = [0] * n
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"bad grid cell {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2))
        if not 1 <= k <= n or line[k - 1]:
            raise ParseError(f"bad plane index {k} in cell {text!r}")
        line[k - 1] = sign
        pos = m.end()
    return tuple(line)


def parse_grid(text: str) -> Ashm:
    """Read :func:`grid_notation` output. The header line may be omitted; ``|`` separators are ignored."""
    lines = [ln.replace("|", " ").split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty grid")
    if len(lines[0]) == 1 and len(lines) > 1:
        n = int(lines[0][0])
        body = lines[1:]
    else:
        n = len(lines)
        body = lines
    if len(body) != n or any(len(r) != n for r in body):
        raise ParseError(f"grid must have {n} rows of {n} cells")
    cells = [[parse_cell(c, n) for c in r] for r in body]
    planes = tuple(tuple(tuple(cells[i][j][k] for j in range(n)) for i in range(n)) for k in range(n))
    return validate_ashm(planes)


# -- checks on Latin-like squares --------------------------------------------

def _lines(l) -> list[tuple[int, ...]]:
    rows = [tuple(r) for r in getattr(l, "rows", l)]
    return rows + [tuple(c) for c in zip(*rows)]


def check_lines_majorized(l) -> bool:
    """Every row and column is majorized by ``(n, ..., 1)``."""
    lines = _lines(l)
    z = staircase(len(lines[0]))
    return all(majorized_by(line, z) for line in lines)


def check_outer_lines_permutation(l) -> bool:
    rows = [tuple(r) for r in getattr(l, "rows", l)]
    n = len(rows)
    outer = [rows[0], rows[-1], tuple(r[0] for r in rows), tuple(r[-1] for r in rows)]
    target = list(range(1, n + 1))
    return all(sorted(line) == target for line in outer)


def plane_nonzero_counts_within_bound(a: Ashm) -> bool:
    """Row/column ``i`` of each plane holds at most ``min(2i-1, 2(n-i)+1)`` non-zeros."""
    n = a.n
    bound = [min(2 * i - 1, 2 * (n - i) + 1) for i in range(1, n + 1)]
    for p in a.planes:
        for i in range(n):
            if sum(1 for x in p[i] if x) > bound[i]:
                return False
            if sum(1 for r in p if r[i]) > bound[i]:
                return False
    return True


def full_column_cells_ok(a: Ashm) -> bool:
    """For each column of the ASHL filled by one value ``k``, the cells in rows
    2 and ``n-1`` of that column carry no negative term except ``-k``.
    Vacuously true when no column is constant.
    """
    n = a.n
    l = ashl(a)
    for j in range(n):
        col = l.column(j)
        if len(set(col)) != 1:
            continue
        k = col[0]
        for i in {1, n - 2}:
            if not 0 <= i < n:
                continue
            line = a.vertical(i, j)
            if any(x < 0 and plane != k for plane, x in enumerate(line, start=1)):
                return False
    return True


# -- order 3 exhaustive search -----------------------------------------------

def _order3_asms() -> list[tuple[tuple[int, ...], ...]]:
    from .enumeration import enumerate_asms

    return [a.rows for a in enumerate_asms(3)]


def _vertical_ok(planes, n) -> bool:
    for i in range(n):
        for j in range(n):
            try:
                check_alternating_line(tuple(p[i][j] for p in planes))
            except AsmProjError:
                return False
    return True


def enumerate_ashms_order3() -> Iterable[Ashm]:
    """All 3x3x3 ASHMs: ordered triples of 3x3 ASMs whose vertical lines alternate."""
    asms = _order3_asms()
    for planes in product(asms, repeat=3):
        if _vertical_ok(planes, 3):
            yield validate_ashm(planes)


def enumerate_ashms_dfs(n: int = 3) -> list[Ashm]:
    """Independent enumerator: fill all ``n**3`` cells one at a time with line pruning.

    Each of the three line families keeps a running partial sum that must stay
    in {0, 1} and finish at 1.
    """
    if n > 3:
        raise AsmProjError("the cell-by-cell enumerator is only meant for order <= 3")
    cube = [[[0] * n for _ in range(n)] for _ in range(n)]   # cube[k][i][j]
    row_run = [[0] * n for _ in range(n)]     # (k, j): running sum over i
    col_run = [[0] * n for _ in range(n)]     # (k, i): running sum over j
    ver_run = [[0] * n for _ in range(n)]     # (i, j): running sum over k
    out = []
    cells = [(k, i, j) for k in range(n) for i in range(n) for j in range(n)]

    def rec(pos):
        if pos == len(cells):
            out.append(Ashm(tuple(tuple(tuple(r) for r in p) for p in cube)))
            return
        k, i, j = cells[pos]
        for v in (-1, 0, 1):
            a, b, c = row_run[k][j] + v, col_run[k][i] + v, ver_run[i][j] + v
            if not (0 <= a <= 1 and 0 <= b <= 1 and 0 <= c <= 1):
                continue
            if (i == n - 1 and a != 1) or (j == n - 1 and b != 1) or (k == n - 1 and c != 1):
                continue
            cube[k][i][j] = v
            row_run[k][j], col_run[k][i], ver_run[i][j] = a, b, c
            rec(pos + 1)
            row_run[k][j], col_run[k][i], ver_run[i][j] = a - v, b - v, c - v
        cube[k][i][j] = 0

    rec(0)
    return out


@dataclass(frozen=True)
class OccurrenceProfile:
    value: int
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    squares: int

    @property
    def lines(self) -> tuple[int, ...]:
        """Per index ``i``, the larger of the row-``i`` and column-``i`` maxima."""
        return tuple(max(r, c) for r, c in zip(self.rows, self.columns))


def occurrence_profile(value: int, ashls: Iterable) -> OccurrenceProfile:
    """Maximum number of times ``value`` appears in each row and column over ``ashls``."""
    rows_max: list[int] = []
    cols_max: list[int] = []
    count = 0
    for l in ashls:
        rows = [tuple(r) for r in getattr(l, "rows", l)]
        n = len(rows)
        if not rows_max:
            rows_max, cols_max = [0] * n, [0] * n
        for i in range(n):
            rows_max[i] = max(rows_max[i], rows[i].count(value))
            cols_max[i] = max(cols_max[i], sum(1 for r in rows if r[i] == value))
        count += 1
    return OccurrenceProfile(value, tuple(rows_max), tuple(cols_max), count)
