"""Slow, direct implementations used to check the library."""

from itertools import combinations, permutations, product


def reachable(rows, i, j):
    """Positions reachable from (i, j) by at least one NE or SE step, by breadth-first search."""
    n = len(rows)
    seen, frontier = set(), [(i, j)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for c, d in ((a - 1, b), (a + 1, b + 1)):
                if 0 <= c < n and 0 <= d <= c and (c, d) not in seen and d < len(rows[c]):
                    seen.add((c, d))
                    nxt.append((c, d))
        frontier = nxt
    return seen


def potential_bfs(rows):
    return sum(
        1
        for i, r in enumerate(rows)
        for j, x in enumerate(r)
        if any(rows[c][d] < x for c, d in reachable(rows, i, j))
    )


def inverted_pairs_bfs(rows):
    return sum(
        1
        for i, r in enumerate(rows)
        for j, x in enumerate(r)
        for c, d in reachable(rows, i, j)
        if rows[c][d] < x
    )


def is_asm(rows):
    """Non-zero entries of every line read +1, -1, ..., +1."""
    n = len(rows)
    lines = [list(r) for r in rows] + [[rows[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        nz = [x for x in line if x]
        if not nz or nz[0] != 1 or nz[-1] != 1:
            return False
        if any(x not in (-1, 1) for x in nz) or any(a == b for a, b in zip(nz, nz[1:])):
            return False
    return True


def asms_by_brute_force(n):
    """Every matrix over {-1, 0, 1} filtered by :func:`is_asm`; tiny n only."""
    for cells in product((-1, 0, 1), repeat=n * n):
        rows = tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n))
        if is_asm(rows):
            yield rows


def majorized_slow(x, y):
    if len(x) != len(y) or sum(x) != sum(y):
        return False
    xs, ys = sorted(x, reverse=True), sorted(y, reverse=True)
    return all(sum(xs[:k]) <= sum(ys[:k]) for k in range(1, len(x) + 1))


def zero_one_exists(row_sums, col_sums):
    """Is there a (0,1)-matrix with these margins? Tries every choice of columns per row."""
    m = len(col_sums)

    def rec(i, residual):
        if i == len(row_sums):
            return all(r == 0 for r in residual)
        for cols in combinations(range(m), row_sums[i]):
            if all(residual[c] > 0 for c in cols):
                nxt = list(residual)
                for c in cols:
                    nxt[c] -= 1
                if rec(i + 1, nxt):
                    return True
        return False

    return rec(0, list(col_sums))


def monotone_by_brute_force(n):
    """Monotone triangles as all tuples of row subsets satisfying interlacing."""
    rows_options = [list(combinations(range(1, n + 1), i)) for i in range(1, n + 1)]
    for rows in product(*rows_options):
        if all(
            rows[i + 1][j] <= rows[i][j] <= rows[i + 1][j + 1]
            for i in range(n - 1)
            for j in range(i + 1)
        ):
            yield rows


def perms(n):
    return list(permutations(range(1, n + 1)))
