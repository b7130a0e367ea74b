"""Pure-Python hot kernels.

This module and the compiled ``_speedups`` extension expose the same
functions with the same results; :mod:`asmproj.kernels` picks one at import.
Triangles are passed as flat row-major sequences of length ``n(n+1)/2``.
"""

from itertools import combinations, product

BACKEND = "python"


def _offsets(n):
    return [i * (i + 1) // 2 for i in range(n)]


# -- ASM backtracking --------------------------------------------------------

def _asm_search(n, emit):
    # Cell-by-cell fill in row-major order. Row and column running sums must
    # stay in {0, 1}; each row ends at 1, and so does each column.
    cells = [0] * (n * n)
    col = [0] * n
    count = 0

    def fill(pos, r):
        nonlocal count
        if pos == n * n:
            count += 1
            if emit is not None:
                emit(tuple(cells))
            return
        i, j = divmod(pos, n)
        last_col = j == n - 1
        last_row = i == n - 1
        c = col[j]
        for v in (-1, 0, 1):
            nr = r + v
            nc = c + v
            if nr < 0 or nr > 1 or nc < 0 or nc > 1:
                continue
            if last_col and nr != 1:
                continue
            if last_row and nc != 1:
                continue
            cells[pos] = v
            col[j] = nc
            fill(pos + 1, 0 if last_col else nr)
            col[j] = c
        cells[pos] = 0

    fill(0, 0)
    return count


def asm_entries(n):
    """Flat row-major entries of every ``n x n`` ASM, in lexicographic order."""
    out = []
    _asm_search(n, out.append)
    return out


def count_asms(n):
    return _asm_search(n, None)


# -- triangle potential ------------------------------------------------------

def potential(flat, n):
    """Number of positions that reach a strictly smaller entry by NE/SE steps.

    Both steps raise ``2j - i`` by one, so positions are processed in
    decreasing order of that key and each keeps the minimum value reachable
    from it.
    """
    off = _offsets(n)
    big = n * n + 10
    reach = [big] * len(flat)
    f = 0
    for key in range(n - 1, -n, -1):
        for i in range(n):
            twice_j = key + i
            if twice_j < 0 or twice_j & 1:
                continue
            j = twice_j >> 1
            if j > i:
                continue
            best = big
            if j <= i - 1:
                q = off[i - 1] + j
                best = min(best, flat[q], reach[q])
            if i + 1 < n:
                q = off[i + 1] + j + 1
                best = min(best, flat[q], reach[q])
            p = off[i] + j
            reach[p] = best
            if best < flat[p]:
                f += 1
    return f


def inverted_pairs(flat, n):
    """Number of pairs ``(p, q)`` with ``q`` reachable from ``p`` and ``t(q) < t(p)``.

    Reachable sets are bitmasks built in the same key order as :func:`potential`.
    """
    off = _offsets(n)
    reach = [0] * len(flat)
    total = 0
    for key in range(n - 1, -n, -1):
        for i in range(n):
            twice_j = key + i
            if twice_j < 0 or twice_j & 1:
                continue
            j = twice_j >> 1
            if j > i:
                continue
            mask = 0
            if j <= i - 1:
                q = off[i - 1] + j
                mask |= reach[q] | (1 << q)
            if i + 1 < n:
                q = off[i + 1] + j + 1
                mask |= reach[q] | (1 << q)
            p = off[i] + j
            reach[p] = mask
            v = flat[p]
            q = 0
            while mask:
                if mask & 1 and flat[q] < v:
                    total += 1
                mask >>= 1
                q += 1
    return total


# -- monotonize --------------------------------------------------------------

def _next_switch(t, n, off):
    """Inversion index pairs of the next trapezoid to switch, or ``None``.

    Bottom-most row pair first, then the left-most maximal run of inverted
    order-2 sub-triangles in that pair.
    """
    for i in range(n - 1, 0, -1):
        top = off[i - 1]
        bot = off[i]
        j = 0
        while j < i:
            run = []
            while j < i:
                a = t[top + j]
                if t[bot + j] > a:
                    run.append((bot + j, top + j))
                elif a > t[bot + j + 1]:
                    run.append((top + j, bot + j + 1))
                else:
                    break
                j += 1
            if run:
                return run
            j += 1
    return None


def monotonize_flat(flat, n):
    """Switch trapezoids until none remain. Returns ``(flat_result, switches)``."""
    off = _offsets(n)
    t = list(flat)
    switches = 0
    while True:
        run = _next_switch(t, n, off)
        if run is None:
            return tuple(t), switches
        for p, q in run:
            t[p], t[q] = t[q], t[p]
        switches += 1


def _is_monotone_flat(t, n, off):
    for i in range(n):
        base = off[i]
        for j in range(i):
            if t[base + j] >= t[base + j + 1]:
                return False
    for i in range(n - 1):
        up = off[i]
        lo = off[i + 1]
        for j in range(i + 1):
            x = t[up + j]
            if t[lo + j] > x or x > t[lo + j + 1]:
                return False
    return True


def sweep_row_increasing(n):
    """Monotonize every row-increasing triangle of order ``n``.

    Returns ``(triangles, total_switches, max_switches, failures, over_potential)``.
    A failure is a run whose output is not monotone, whose entry counts
    differ from the input, or which took more switches than the input has
    inverted pairs. ``over_potential`` counts runs that took more switches
    than :func:`potential` of the input (not a failure; recorded for study).
    """
    off = _offsets(n)
    values = range(1, n + 1)
    total = 0
    worst = 0
    count = 0
    failures = 0
    over = 0
    for rows in product(*(combinations(values, i) for i in range(1, n + 1))):
        flat = [x for r in rows for x in r]
        out, k = monotonize_flat(flat, n)
        count += 1
        total += k
        if k > worst:
            worst = k
        if k > inverted_pairs(flat, n) or sorted(out) != sorted(flat) or not _is_monotone_flat(out, n, off):
            failures += 1
        if k > potential(flat, n):
            over += 1
    return count, total, worst, failures, over
