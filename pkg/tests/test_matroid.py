from itertools import combinations

import pytest

from braidkl.matroid import (
    LabeledMatroid,
    chords_of,
    circuits_of_size,
    count_3circuits_through,
    has_excluded_minor,
    is_chordal,
    is_chordless,
    parallel_extension,
    series_extension,
    triangle_extension,
)


def triangle(a=1, b=2, c=3):
    return LabeledMatroid({a, b, c}, [{a, b, c}])


def u24():
    return LabeledMatroid(
        {1, 2, 3, 4}, [set(c) for c in combinations([1, 2, 3, 4], 3)]
    )


def u34():
    return LabeledMatroid({1, 2, 3, 4}, [{1, 2, 3, 4}])


def mk4():
    # edges of K_4 on vertices {a,b,c,d}:
    # 1=ab, 2=ac, 3=ad, 4=bc, 5=bd, 6=cd
    return LabeledMatroid(
        {1, 2, 3, 4, 5, 6},
        [{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6},
         {1, 2, 5, 6}, {1, 3, 4, 6}, {2, 3, 4, 5}],
    )


def diamond():
    return LabeledMatroid({1, 2, 3, 4, 5}, [{1, 2, 3}, {2, 4, 5}, {1, 3, 4, 5}])


def test_axiom_validation():
    with pytest.raises(ValueError):
        LabeledMatroid({1, 2, 3}, [{1, 2}, {1, 2, 3}])  # not an antichain
    with pytest.raises(ValueError):
        # two triangles sharing two elements with no elimination circuit
        LabeledMatroid({1, 2, 3, 4}, [{1, 2, 3}, {1, 2, 4}])
    with pytest.raises(ValueError):
        LabeledMatroid({1}, [set()])


def test_rank():
    assert triangle().rank() == 2
    assert triangle().rank_of(set()) == 0
    assert mk4().rank() == 3  # spanning tree of K_4
    assert u24().rank() == 2
    with pytest.raises(ValueError):
        triangle().rank_of({9})


def test_minors():
    m = u24().delete(4)
    assert m == triangle()
    # deleting from the triangle leaves the free matroid U_{2,2}
    assert triangle().delete(3) == LabeledMatroid({1, 2}, [])
    assert triangle().contract(1) == LabeledMatroid({2, 3}, [{2, 3}])
    # contracting a loop-free element drops rank by one
    assert u34().contract(2).rank() == 2
    assert u34().delete(2).rank() == 3


def test_direct_sum():
    s = triangle().direct_sum(LabeledMatroid({4}, []))
    assert s.circuits == frozenset({frozenset({1, 2, 3})})
    assert not s.is_connected()
    with pytest.raises(ValueError):
        triangle().direct_sum(triangle())


def test_simplicity_and_connectivity():
    assert triangle().is_simple()
    assert not parallel_extension(triangle(), 1, 4).is_simple()
    assert u34().is_connected()
    assert LabeledMatroid({1}, []).is_connected()
    assert LabeledMatroid({1, 2}, []).components() == [
        frozenset({1}), frozenset({2})
    ]


def test_chords():
    # every 3-circuit in a simple matroid is chordless
    assert is_chordless(mk4(), {1, 2, 4})
    # the 4-circuits of M(K_4) are chorded by the opposite edge
    assert chords_of(mk4(), {1, 2, 5, 6})  # not chordless
    assert not is_chordless(mk4(), {1, 2, 5, 6})
    assert is_chordal(mk4())
    assert not is_chordal(u34())
    with pytest.raises(ValueError):
        chords_of(triangle(), {1, 2})


def test_circuit_queries():
    assert circuits_of_size(mk4(), 3) == [
        frozenset(c) for c in ((1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6))
    ]
    assert count_3circuits_through(u34(), 1) == 0
    assert count_3circuits_through(diamond(), 5) == 1
    for e in range(1, 7):
        assert count_3circuits_through(mk4(), e) == 2


def test_parallel_extension():
    pe = parallel_extension(LabeledMatroid({1}, []), 1, 2)
    assert pe.circuits == frozenset({frozenset({1, 2})})
    pe2 = parallel_extension(triangle(), 3, 4)
    assert frozenset({3, 4}) in pe2.circuits
    assert frozenset({1, 2, 4}) in pe2.circuits
    assert pe2.rank() == 2


def test_series_extension():
    se = series_extension(triangle(), 3, 4)
    assert se.circuits == frozenset({frozenset({1, 2, 3, 4})})
    assert se.rank() == 3
    with pytest.raises(ValueError):
        series_extension(triangle(), 3, 1)  # label collision
    with pytest.raises(ValueError):
        series_extension(triangle(), 9, 10)  # not in ground


def test_triangle_extension():
    te = triangle_extension(LabeledMatroid({1}, []), 1, (2, 3))
    assert te == triangle()
    base = triangle()
    ext = triangle_extension(base, 2, (4, 5))
    assert ext.rank() == base.rank() + 1
    assert len(ext.ground) == len(base.ground) + 2
    assert frozenset({2, 4, 5}) in ext.circuits


def test_excluded_minors():
    assert has_excluded_minor(u24())
    assert has_excluded_minor(mk4())
    assert not has_excluded_minor(diamond())
    assert not has_excluded_minor(u34())
    assert not has_excluded_minor(triangle())
    # one-element extension of U_{2,4} still contains it
    assert has_excluded_minor(parallel_extension(u24(), 1, 5))


def test_rank_change_under_minors():
    for m in (triangle(), u34(), mk4(), diamond()):
        for e in sorted(m.ground):
            assert m.delete(e).rank() in (m.rank() - 1, m.rank())
            assert m.contract(e).rank() == m.rank() - 1  # no loops here


def test_fingerprint_is_canonical():
    a = LabeledMatroid({1, 2, 3}, [{3, 2, 1}])
    assert a.fingerprint() == ((1, 2, 3), ((1, 2, 3),))
    assert a == triangle()
    assert hash(a) == hash(triangle())
