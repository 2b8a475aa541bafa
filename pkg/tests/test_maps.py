import pytest

from braidkl.cactus import enumerate_rooted_deserts
from braidkl.matroid import LabeledMatroid
from braidkl.maps import (
    fibers_of_phi,
    g_closed_form,
    m_class_of_target,
    phi,
    sigma2,
    verify_difference,
)
from braidkl.spgen import enumerate_S


def diamond():
    return LabeledMatroid({1, 2, 3, 4, 5}, [{1, 2, 3}, {2, 4, 5}, {1, 3, 4, 5}])


def u34():
    return LabeledMatroid({1, 2, 3, 4}, [{1, 2, 3, 4}])


def test_phi_diamond():
    image = phi(diamond())
    assert image.circuits == frozenset({frozenset({1, 2, 3})})
    assert not image.is_connected()
    assert image.rank() == diamond().rank()


def test_phi_preserves_rank_everywhere():
    for m in enumerate_S(5, 3):
        assert phi(m).rank() == 3


def test_m_class():
    assert m_class_of_target(u34()) == 2
    tri_coloop = LabeledMatroid({1, 2, 3}, [{1, 2, 3}]).direct_sum(
        LabeledMatroid({4}, [])
    )
    assert m_class_of_target(tri_coloop) == 1


def test_m_class_realizes_three():
    # m = 3 targets (three chordless 4-circuits) first appear at n = 4
    classes = [m_class_of_target(t) for t in enumerate_S(6, 4)]
    assert 3 in classes


def test_m2_preimages_map_to_u34():
    # all three m=2 members of S(5,3) delete to U_{3,4}
    m2 = [
        m for m in enumerate_S(5, 3)
        if sum(1 for c in m.circuits if len(c) == 3 and 5 in c) == 2
    ]
    assert len(m2) == 3
    for m in m2:
        assert phi(m) == u34()


def test_fibers_small():
    r2 = fibers_of_phi(2)
    assert r2.ok() and r2.source_count == 1 and r2.target_count == 1
    r3 = fibers_of_phi(3)
    assert r3.ok()
    assert r3.surjective
    assert r3.totals_by_m == {1: 12, 2: 3}
    assert r3.source_count == 15 and r3.target_count == 5


def test_sigma2_on_u34():
    rd = sigma2(u34())
    assert rd.graph.edges == frozenset()
    assert rd.roots == frozenset({1, 2, 3, 4})
    with pytest.raises(ValueError):
        sigma2(diamond().delete(5))  # m = 1 target


def test_sigma2_injective_into_rdes2():
    for n in (3, 4):
        targets = [
            t for t in enumerate_S(2 * n - 2, n) if m_class_of_target(t) == 2
        ]
        rdes2 = {d.fingerprint() for d in enumerate_rooted_deserts(n, 2)}
        images = {sigma2(t).fingerprint() for t in targets}
        assert len(images) == len(targets)  # injective
        assert images <= rdes2
        assert len(targets) == len(rdes2)  # bijection at cardinality level


def test_connectivity_splits_m_classes():
    # m = 1 targets are exactly the disconnected ones
    for n in (3, 4):
        for t in enumerate_S(2 * n - 2, n):
            assert (m_class_of_target(t) > 1) == t.is_connected()


def test_m1_cardinality_matches_des1():
    from braidkl.cactus import enumerate_deserts

    for n in (3, 4):
        m1 = [
            t for t in enumerate_S(2 * n - 2, n)
            if m_class_of_target(t) == 1
        ]
        assert len(m1) == len(enumerate_deserts(n, 1))


def test_verify_difference():
    r3 = verify_difference(3)
    assert r3["pass"]
    assert {c["name"]: (c["lhs"], c["rhs"]) for c in r3["checks"]} == {
        "exhaustive": (10, 10),
        "closed-form": (10, 10),
        "g-closed-form": (10, 10),
    }
    assert verify_difference(5, "closed-form")["pass"]


def test_g_closed_form():
    assert g_closed_form(3) == 10
    assert g_closed_form(4) == 560  # 5040 / 9
