from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmproj.core import identity, weighted_projection
from asmproj.errors import (
    CornerOutOfRange,
    LineSumNotOne,
    NegativePartialSum,
    OrderMismatch,
    ProjectionMismatch,
    SeamError,
)
from asmproj.polytope import (
    PolytopeMatrix,
    RationalMatrix,
    TBlock,
    TBlockTerm,
    apply_terms,
    decompose_paired,
    decompose_tblocks,
    tblock_matrix,
    validate_polytope,
)
from generators import projection_groups, random_equal_projection_pair, random_pair, rng, vertices
from reference import DIAMOND, IDENTITY3, MIXED, SIXTEENTHS, SIXTHS, THIRDS


class TestValidate:
    @pytest.mark.parametrize("m", [THIRDS, MIXED, SIXTHS, SIXTEENTHS, DIAMOND])
    def test_members(self, m):
        assert isinstance(validate_polytope(m), PolytopeMatrix)
        assert weighted_projection(m) == (2, 2, 2)

    def test_leading_negative(self):
        with pytest.raises(NegativePartialSum) as info:
            validate_polytope([[1, 0, 0], [-1, 1, 1], [1, 0, 0]])
        assert (info.value.kind, info.value.index, info.value.prefix) == ("row", 2, 1)

    def test_trailing_negative(self):
        with pytest.raises(NegativePartialSum) as info:
            validate_polytope([[0, 1, 0], [1, 1, -1], [0, -1, 2]])
        assert info.value.from_end

    def test_line_sum(self):
        with pytest.raises(LineSumNotOne):
            validate_polytope([[F(1, 2), 0], [0, 1]])

    def test_reduced_entries(self):
        m = RationalMatrix(((F(2, 4), F(1, 2)), (F(1, 2), F(1, 2))))
        assert m.rows[0][0].denominator == 2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_random_members(self, n):
        r = rng(n)
        for _ in range(30):
            validate_polytope(random_pair(r, n)[0])


class TestTBlocks:
    def test_matrix(self):
        b = TBlock(1, 1, 2, 2)
        m = tblock_matrix(b, 3)
        assert m.rows == ((1, -1, 0), (-1, 1, 0), (0, 0, 0))
        assert weighted_projection(m) == (1, -1, 0)

    def test_negation(self):
        b = TBlock(1, 2, 3, 3)
        assert tblock_matrix(-b, 3).rows == tuple(tuple(-x for x in r) for r in tblock_matrix(b, 3).rows)

    def test_depth(self):
        assert TBlock(1, 1, 2, 2).depth == 1
        assert TBlock(2, 1, 3, 2, -1).depth == -1

    def test_corners(self):
        with pytest.raises(CornerOutOfRange):
            tblock_matrix(TBlock(1, 1, 4, 2), 3)
        with pytest.raises(CornerOutOfRange):
            TBlock(2, 1, 1, 2)

    def test_label(self):
        assert str(TBlock(1, 1, 2, 2)) == "T(1,1;2,2,+)"

    @given(st.integers(2, 6).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(1, n - 1), st.integers(1, n - 1), st.integers(1, n - 1),
        st.integers(1, n - 1), st.sampled_from((1, -1)))))
    def test_projection_is_depth_times_difference(self, args):
        n, i1, j1, di, dj, s = args
        i2, j2 = min(n, i1 + di), min(n, j1 + dj)
        if i2 == i1 or j2 == j1:
            return
        b = TBlock(i1, j1, i2, j2, s)
        v = weighted_projection(tblock_matrix(b, n))
        expected = [0] * n
        expected[j1 - 1] += b.depth
        expected[j2 - 1] -= b.depth
        assert v == tuple(expected)

    def test_opposite_depths_cancel(self):
        for n in range(2, 5):
            blocks = [TBlock(i1, j1, i2, j2, s)
                      for i1, i2 in combinations(range(1, n + 1), 2)
                      for j1, j2 in combinations(range(1, n + 1), 2)
                      for s in (1, -1)]
            for t in blocks:
                for u in blocks:
                    if t.depth == -u.depth and (t.j1, t.j2) == (u.j1, u.j2):
                        pair = apply_terms([[0] * n for _ in range(n)], [TBlockTerm(F(1), t, u)])
                        assert weighted_projection(pair) == (0,) * n

    def test_term_checks(self):
        with pytest.raises(SeamError):
            TBlockTerm(F(0), TBlock(1, 1, 2, 2))
        with pytest.raises(SeamError):
            TBlockTerm(F(1), TBlock(1, 1, 2, 2), TBlock(1, 1, 2, 2))


class TestApply:
    def test_empty(self):
        assert apply_terms(DIAMOND, []) == RationalMatrix(DIAMOND)

    def test_swap(self):
        assert apply_terms(identity(2), [TBlockTerm(F(-1), TBlock(1, 1, 2, 2))]).rows == ((0, 1), (1, 0))
        assert apply_terms(identity(2), [TBlockTerm(F(1), TBlock(1, 1, 2, 2))]).rows == ((2, -1), (-1, 2))

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            apply_terms(identity(2), [TBlockTerm(F(1), TBlock(1, 1, 3, 3))])

    def test_witness_identities(self):
        third, sixteenth = F(1, 3), F(1, 16)
        first = apply_terms(DIAMOND, [
            TBlockTerm(third, TBlock(1, 1, 2, 2)),
            TBlockTerm(-third, TBlock(1, 2, 2, 3)),
            TBlockTerm(third, TBlock(2, 2, 3, 3)),
            TBlockTerm(-third, TBlock(2, 1, 3, 2)),
        ])
        assert first == RationalMatrix(THIRDS)
        second = apply_terms(DIAMOND, [
            TBlockTerm(sixteenth, TBlock(1, 1, 2, 2), TBlock(2, 1, 3, 2, -1)),
            TBlockTerm(3 * sixteenth, TBlock(2, 2, 3, 3), TBlock(1, 2, 2, 3, -1)),
        ])
        assert second == RationalMatrix(SIXTEENTHS)


class TestDecomposeTBlocks:
    def test_thirds(self):
        terms = decompose_tblocks(DIAMOND, THIRDS)
        assert apply_terms(DIAMOND, terms) == RationalMatrix(THIRDS)
        assert len(terms) <= 9

    def test_equal(self):
        assert decompose_tblocks(THIRDS, THIRDS) == []

    def test_two_permutations(self):
        (t,) = decompose_tblocks(((0, 1), (1, 0)), identity(2))
        assert t.coefficient == 1 and t.block == TBlock(1, 1, 2, 2)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            decompose_tblocks(identity(2), identity(3))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_random_pairs(self, n):
        r = rng(100 + n)
        for _ in range(40):
            a, b = random_pair(r, n)
            terms = decompose_tblocks(a, b)
            assert len(terms) <= n * n
            assert apply_terms(a, terms) == RationalMatrix(b)


class TestDecomposePaired:
    def test_sixteenths(self):
        terms = decompose_paired(DIAMOND, SIXTEENTHS)
        assert apply_terms(DIAMOND, terms) == RationalMatrix(SIXTEENTHS)
        assert [(t.coefficient, t.block, t.partner) for t in terms] == [
            (F(1, 16), TBlock(1, 1, 2, 2), TBlock(2, 1, 3, 2, -1)),
            (F(-3, 16), TBlock(1, 2, 2, 3), TBlock(2, 2, 3, 3, -1)),
        ]

    def test_equal(self):
        assert decompose_paired(SIXTHS, SIXTHS) == []

    def test_projection_mismatch(self):
        with pytest.raises(ProjectionMismatch):
            decompose_paired(DIAMOND, IDENTITY3)

    @pytest.mark.parametrize("m", [THIRDS, MIXED, SIXTHS, SIXTEENTHS])
    def test_same_projection_members(self, m):
        terms = decompose_paired(DIAMOND, m)
        assert apply_terms(DIAMOND, terms) == RationalMatrix(m)
        assert all(t.block.depth == -t.partner.depth for t in terms)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_all_vertex_pairs(self, n):
        for g in projection_groups(n):
            for a in g:
                for b in g:
                    terms = decompose_paired(a, b)
                    assert apply_terms(a, terms) == RationalMatrix(b)
                    assert all(t.block.depth == -t.partner.depth for t in terms)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_random_pairs(self, n):
        r = rng(200 + n)
        for _ in range(30):
            a, b = random_equal_projection_pair(r, n)
            validate_polytope(a)
            validate_polytope(b)
            assert weighted_projection(a) == weighted_projection(b)
            terms = decompose_paired(a, b)
            assert apply_terms(a, terms) == RationalMatrix(b)

    @pytest.mark.parametrize("n", range(2, 4))
    def test_rejects_unequal(self, n):
        vs = vertices(n)
        for a in vs:
            for b in vs:
                if weighted_projection(a) != weighted_projection(b):
                    with pytest.raises(ProjectionMismatch):
                        decompose_paired(a, b)
