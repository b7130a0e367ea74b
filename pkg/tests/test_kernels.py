"""The compiled and pure-Python kernels must give identical results."""

import pytest

from asmproj import kernels
from asmproj.enumeration import enumerate_row_increasing
from oracles import inverted_pairs_bfs, potential_bfs

BACKENDS = kernels.available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def impl(request):
    return BACKENDS[request.param]


def flat(t):
    return [x for r in t.rows for x in r]


def test_selected_backend_is_available():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("n", range(1, 6))
def test_asm_entries_match(impl, n):
    assert impl.asm_entries(n) == BACKENDS["python"].asm_entries(n)
    assert impl.count_asms(n) == len(impl.asm_entries(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_triangle_kernels(impl, n):
    for t in enumerate_row_increasing(n):
        f = flat(t)
        assert impl.potential(f, n) == potential_bfs(t.rows)
        assert impl.inverted_pairs(f, n) == inverted_pairs_bfs(t.rows)
        assert impl.monotonize_flat(f, n) == BACKENDS["python"].monotonize_flat(f, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_sweep_match(impl, n):
    assert impl.sweep_row_increasing(n) == BACKENDS["python"].sweep_row_increasing(n)


def test_known_sweep_numbers(impl):
    assert impl.sweep_row_increasing(4) == (96, 72, 2, 0, 6)


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
def test_extension_rejects_large_order():
    with pytest.raises(ValueError):
        BACKENDS["cython"].count_asms(17)
