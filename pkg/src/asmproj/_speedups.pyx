# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same interface and results as ``asmproj._pure``."""

from libc.string cimport memset

BACKEND = "cython"

cdef enum:
    MAXN = 16
    MAXP = 136          # MAXN * (MAXN + 1) / 2
    WORDS = 3           # ceil(MAXP / 64)

ctypedef unsigned long long u64


cdef inline int _check_order(int n) except -1:
    if n < 1 or n > MAXN:
        raise ValueError(f"order {n} outside 1..{MAXN} supported by the compiled kernels")
    return 0


# -- ASM backtracking --------------------------------------------------------

cdef struct AsmState:
    int n
    int cells[MAXN * MAXN]
    int col[MAXN]
    long long count


cdef int _asm_fill(AsmState* st, int pos, int r, object emit) except -1:
    cdef int n = st.n
    cdef int i, j, v, nr, nc, c, k
    cdef bint last_col, last_row
    if pos == n * n:
        st.count += 1
        if emit is not None:
            emit(tuple([st.cells[k] for k in range(n * n)]))
        return 0
    i = pos // n
    j = pos - i * n
    last_col = j == n - 1
    last_row = i == n - 1
    c = st.col[j]
    for v in range(-1, 2):
        nr = r + v
        nc = c + v
        if nr < 0 or nr > 1 or nc < 0 or nc > 1:
            continue
        if last_col and nr != 1:
            continue
        if last_row and nc != 1:
            continue
        st.cells[pos] = v
        st.col[j] = nc
        _asm_fill(st, pos + 1, 0 if last_col else nr, emit)
        st.col[j] = c
    st.cells[pos] = 0
    return 0


cdef long long _asm_search(int n, object emit) except -1:
    cdef AsmState st
    _check_order(n)
    memset(&st, 0, sizeof(AsmState))
    st.n = n
    _asm_fill(&st, 0, 0, emit)
    return st.count


def asm_entries(int n):
    out = []
    _asm_search(n, out.append)
    return out


def count_asms(int n):
    return _asm_search(n, None)


# -- triangle helpers --------------------------------------------------------

cdef inline void _offsets(int n, int* off):
    cdef int i
    for i in range(n):
        off[i] = i * (i + 1) // 2


cdef int _load(object flat, int n, int* t) except -1:
    cdef int size = n * (n + 1) // 2
    cdef int k
    _check_order(n)
    if len(flat) != size:
        raise ValueError(f"expected {size} entries for order {n}, got {len(flat)}")
    for k in range(size):
        t[k] = flat[k]
    return 0


cdef int _potential_c(int* t, int n, int* off):
    cdef int reach[MAXP]
    cdef int key, i, twice_j, j, best, q, p, f = 0
    cdef int big = 1 << 30
    for key in range(n - 1, -n, -1):
        for i in range(n):
            twice_j = key + i
            if twice_j < 0 or (twice_j & 1):
                continue
            j = twice_j >> 1
            if j > i:
                continue
            best = big
            if j <= i - 1:
                q = off[i - 1] + j
                if t[q] < best:
                    best = t[q]
                if reach[q] < best:
                    best = reach[q]
            if i + 1 < n:
                q = off[i + 1] + j + 1
                if t[q] < best:
                    best = t[q]
                if reach[q] < best:
                    best = reach[q]
            p = off[i] + j
            reach[p] = best
            if best < t[p]:
                f += 1
    return f


cdef long long _inverted_pairs_c(int* t, int n, int* off):
    cdef u64 reach[MAXP][WORDS]
    cdef int key, i, twice_j, j, q, p, w, b
    cdef long long total = 0
    cdef u64 word
    for key in range(n - 1, -n, -1):
        for i in range(n):
            twice_j = key + i
            if twice_j < 0 or (twice_j & 1):
                continue
            j = twice_j >> 1
            if j > i:
                continue
            p = off[i] + j
            for w in range(WORDS):
                reach[p][w] = 0
            if j <= i - 1:
                q = off[i - 1] + j
                for w in range(WORDS):
                    reach[p][w] |= reach[q][w]
                reach[p][q >> 6] |= (<u64>1) << (q & 63)
            if i + 1 < n:
                q = off[i + 1] + j + 1
                for w in range(WORDS):
                    reach[p][w] |= reach[q][w]
                reach[p][q >> 6] |= (<u64>1) << (q & 63)
            for w in range(WORDS):
                word = reach[p][w]
                b = 0
                while word:
                    if (word & 1) and t[w * 64 + b] < t[p]:
                        total += 1
                    word >>= 1
                    b += 1
    return total


def potential(flat, int n):
    cdef int t[MAXP]
    cdef int off[MAXN]
    _load(flat, n, t)
    _offsets(n, off)
    return _potential_c(t, n, off)


def inverted_pairs(flat, int n):
    cdef int t[MAXP]
    cdef int off[MAXN]
    _load(flat, n, t)
    _offsets(n, off)
    return _inverted_pairs_c(t, n, off)


# -- monotonize --------------------------------------------------------------

cdef int _next_switch(int* t, int n, int* off, int* pairs):
    """Fill ``pairs`` with flat index pairs to swap; return their count (0 = done)."""
    cdef int i, top, bot, j, a, k
    for i in range(n - 1, 0, -1):
        top = off[i - 1]
        bot = off[i]
        j = 0
        while j < i:
            k = 0
            while j < i:
                a = t[top + j]
                if t[bot + j] > a:
                    pairs[2 * k] = bot + j
                    pairs[2 * k + 1] = top + j
                elif a > t[bot + j + 1]:
                    pairs[2 * k] = top + j
                    pairs[2 * k + 1] = bot + j + 1
                else:
                    break
                k += 1
                j += 1
            if k:
                return k
            j += 1
    return 0


cdef long long _monotonize_c(int* t, int n, int* off):
    cdef int pairs[2 * MAXN]
    cdef int k, m, p, q, tmp
    cdef long long switches = 0
    while True:
        k = _next_switch(t, n, off, pairs)
        if k == 0:
            return switches
        for m in range(k):
            p = pairs[2 * m]
            q = pairs[2 * m + 1]
            tmp = t[p]
            t[p] = t[q]
            t[q] = tmp
        switches += 1


def monotonize_flat(flat, int n):
    cdef int t[MAXP]
    cdef int off[MAXN]
    cdef int k
    cdef long long switches
    _load(flat, n, t)
    _offsets(n, off)
    switches = _monotonize_c(t, n, off)
    return tuple([t[k] for k in range(n * (n + 1) // 2)]), switches


cdef bint _is_monotone_c(int* t, int n, int* off):
    cdef int i, j, x
    for i in range(n):
        for j in range(i):
            if t[off[i] + j] >= t[off[i] + j + 1]:
                return False
    for i in range(n - 1):
        for j in range(i + 1):
            x = t[off[i] + j]
            if t[off[i + 1] + j] > x or x > t[off[i + 1] + j + 1]:
                return False
    return True


cdef struct Sweep:
    int n
    int size
    int t[MAXP]
    int off[MAXN]
    long long count
    long long total
    long long worst
    long long failures
    long long over


cdef void _sweep_leaf(Sweep* s):
    cdef int work[MAXP]
    cdef int hist_in[MAXN + 1]
    cdef int hist_out[MAXN + 1]
    cdef int k, f0
    cdef long long pairs0, sw
    cdef bint bad = False
    for k in range(s.size):
        work[k] = s.t[k]
    f0 = _potential_c(s.t, s.n, s.off)
    pairs0 = _inverted_pairs_c(s.t, s.n, s.off)
    sw = _monotonize_c(work, s.n, s.off)
    s.count += 1
    s.total += sw
    if sw > s.worst:
        s.worst = sw
    memset(hist_in, 0, sizeof(hist_in))
    memset(hist_out, 0, sizeof(hist_out))
    for k in range(s.size):
        hist_in[s.t[k]] += 1
        hist_out[work[k]] += 1
    for k in range(s.n + 1):
        if hist_in[k] != hist_out[k]:
            bad = True
    if sw > pairs0 or bad or not _is_monotone_c(work, s.n, s.off):
        s.failures += 1
    if sw > f0:
        s.over += 1


cdef void _sweep_fill(Sweep* s, int i, int j):
    # row i (0-based) has i + 1 strictly increasing entries from 1..n
    cdef int lo, hi, v, pos
    if i == s.n:
        _sweep_leaf(s)
        return
    pos = s.off[i] + j
    lo = 1 if j == 0 else s.t[pos - 1] + 1
    hi = s.n - (i - j)
    for v in range(lo, hi + 1):
        s.t[pos] = v
        if j == i:
            _sweep_fill(s, i + 1, 0)
        else:
            _sweep_fill(s, i, j + 1)


def sweep_row_increasing(int n):
    cdef Sweep s
    _check_order(n)
    memset(&s, 0, sizeof(Sweep))
    s.n = n
    s.size = n * (n + 1) // 2
    _offsets(n, s.off)
    _sweep_fill(&s, 0, 0)
    return s.count, s.total, s.worst, s.failures, s.over
