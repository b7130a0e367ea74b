import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmproj import kernels
from asmproj.core import MonotoneTriangle, entry_multiset, validate_monotone, validate_row_increasing
from asmproj.enumeration import enumerate_monotone, enumerate_row_increasing
from asmproj.errors import InterlacingViolated, StaleTrapezoid
from asmproj.monotonize import (
    DOWN,
    UP,
    find_inversions,
    find_inverted_trapezoids,
    inverted_pair_count,
    monotonize,
    monotonize_fast,
    potential_f,
    select_trapezoid,
    sweep,
    switch_rows,
    switch_trapezoid,
    trapezoids_between,
)
from oracles import inverted_pairs_bfs, potential_bfs
from reference import (
    A4_TRIANGLE,
    POTENTIAL_6,
    POTENTIAL_8,
    RIT_B,
    RIT_DOWN,
    RIT_UP,
    WORKED_MONOTONE,
    WORKED_TRIANGLE,
)

triangle_data = st.integers(1, 6).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(1, n), min_size=i, max_size=i) for i in range(1, n + 1)])
)


class TestInversions:
    def test_upward(self):
        (inv,) = find_inversions(RIT_UP)
        assert (inv.direction, inv.position, inv.partner, inv.big, inv.small) == (UP, (2, 1), (1, 1), 2, 1)

    def test_downward(self):
        (inv,) = find_inversions(RIT_DOWN)
        assert (inv.direction, inv.position, inv.partner, inv.big, inv.small) == (DOWN, (1, 1), (2, 2), 3, 2)

    def test_monotone_has_none(self):
        assert find_inversions(A4_TRIANGLE) == []


class TestPotential:
    def test_display_values(self):
        assert potential_f(POTENTIAL_8) == 8
        assert potential_f(POTENTIAL_6) == 6

    def test_small(self):
        # 2 at (2,1) reaches 1; the 3 at (2,2) reaches only 2 and 3
        assert potential_f(RIT_UP) == 1

    @given(triangle_data)
    def test_matches_search(self, rows):
        assert potential_f(rows) == potential_bfs(rows)
        assert inverted_pair_count(rows) == inverted_pairs_bfs(rows)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_zero_iff_monotone(self, n):
        for t in enumerate_row_increasing(n):
            f = potential_f(t)
            try:
                validate_monotone(t)
                mono = True
            except InterlacingViolated:
                mono = False
            assert (f == 0) == (not find_inversions(t)) == mono
            assert (inverted_pair_count(t) == 0) == mono


class TestTrapezoids:
    def test_two_heights(self):
        zs = find_inverted_trapezoids(RIT_B)
        assert [(z.top_row, z.bottom_row, z.height) for z in zs] == [(1, 2, 2), (2, 3, 1)]
        assert [(z.first, z.last) for z in zs] == [(1, 1), (1, 2)]

    def test_monotone_has_none(self):
        assert find_inverted_trapezoids(A4_TRIANGLE) == []

    def test_up_then_down(self):
        (z,) = trapezoids_between((1, 5), (2, 3, 4))
        assert [inv.direction for inv in z.inversions] == [UP, DOWN]

    @pytest.mark.parametrize("n", range(2, 6))
    def test_entries_in_one_inversion(self, n):
        for t in enumerate_row_increasing(n):
            for z in find_inverted_trapezoids(t):
                cells = [p for inv in z.inversions for p in (inv.position, inv.partner)]
                assert len(cells) == len(set(cells))


class TestSwitch:
    @pytest.mark.parametrize("top, bottom, new_top, new_bottom", [
        ((1, 2), (2, 3, 4), (2, 3), (1, 2, 4)),
        ((1, 5), (2, 3, 4), (2, 4), (1, 3, 5)),
        ((3, 4), (1, 2, 3), (2, 3), (1, 3, 4)),
    ])
    def test_fragments(self, top, bottom, new_top, new_bottom):
        (z,) = trapezoids_between(top, bottom)
        assert switch_rows(top, bottom, z) == (new_top, new_bottom)

    def test_stale(self):
        (z,) = trapezoids_between((1, 2), (2, 3, 4))
        with pytest.raises(StaleTrapezoid):
            switch_rows((2, 3), (1, 2, 4), z)
        zs = find_inverted_trapezoids(RIT_B)
        after = switch_trapezoid(RIT_B, zs[0])
        with pytest.raises(StaleTrapezoid):
            switch_trapezoid(after, zs[0])

    def test_wrong_order(self):
        (z,) = find_inverted_trapezoids(RIT_UP)
        with pytest.raises(StaleTrapezoid):
            switch_trapezoid(RIT_B, z)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_every_switch(self, n):
        # each trapezoid of each triangle, switched on its own
        for t in enumerate_row_increasing(n):
            for z in find_inverted_trapezoids(t):
                s = switch_trapezoid(t, z)
                validate_row_increasing(s)
                assert entry_multiset(s) == entry_multiset(t)
                assert inverted_pair_count(s) < inverted_pair_count(t)

    def test_entry_potential_can_stall(self):
        # two forced switches, yet the entry count is 1 before and after the first
        t = ((1,), (1, 3), (2, 3, 4), (1, 2, 3, 4))
        assert potential_f(t) == 1
        (z,) = find_inverted_trapezoids(t)
        s = switch_trapezoid(t, z)
        assert potential_f(s) == 1
        (z2,) = find_inverted_trapezoids(s)
        assert potential_f(switch_trapezoid(s, z2)) == 0

    @pytest.mark.parametrize("n, expected", [(3, 0), (4, 5)])
    def test_no_selection_rule_stays_within_potential(self, n, expected):
        # shortest switch sequence over every possible choice, against f of the input
        memo = {}

        def shortest(rows):
            if rows not in memo:
                zs = find_inverted_trapezoids(rows)
                memo[rows] = 0 if not zs else 1 + min(shortest(switch_trapezoid(rows, z).rows) for z in zs)
            return memo[rows]

        over = [t for t in enumerate_row_increasing(n) if shortest(t.rows) > potential_f(t)]
        assert len(over) == expected


class TestMonotonize:
    def test_single_upward(self):
        m, steps = monotonize(RIT_UP, trace=True)
        assert m.rows == ((2,), (1, 3), (1, 2, 3))
        assert [s.f for s in steps] == [0]

    def test_monotone_is_fixed(self):
        m, steps = monotonize(A4_TRIANGLE, trace=True)
        assert m.rows == A4_TRIANGLE and steps == []
        assert isinstance(m, MonotoneTriangle)

    def test_worked_example(self):
        m, steps = monotonize(WORKED_TRIANGLE, trace=True)
        assert m.rows == WORKED_MONOTONE
        assert len(steps) == 1
        z = steps[0].trapezoid
        assert (z.top_row, z.bottom_row, z.height) == (3, 4, 3)

    def test_selection_prefers_lower_rows(self):
        zs = find_inverted_trapezoids(RIT_B)
        assert select_trapezoid(zs).bottom_row == 3

    def test_no_trace(self):
        assert monotonize(RIT_UP)[1] is None

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive(self, n):
        monotone = set(enumerate_monotone(n))
        for t in enumerate_row_increasing(n):
            m, steps = monotonize(t, trace=True)
            assert m in monotone
            assert entry_multiset(m) == entry_multiset(t)
            assert len(steps) <= inverted_pair_count(t)
            fast, switches = monotonize_fast(t)
            assert fast == m and switches == len(steps)


@pytest.mark.parametrize("n", range(1, 6))
def test_sweep(n):
    r = sweep(n)
    assert r.failures == 0
    assert r.triangles == sum(1 for _ in enumerate_row_increasing(n))
    assert r.backend == kernels.BACKEND
