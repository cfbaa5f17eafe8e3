import pytest

from artifact.weyl import root_system
from artifact.gallery import conjugacy_rep
from artifact.superset import (superset_classes, superset_complete,
                               conjugate_seeds, GROUP_KIND)
from artifact.solver import sl2_solution, _a1_index


@pytest.mark.parametrize("s", [0, 1, 2])
def test_a1_superset_matches_closed_form(s):
    cs = superset_classes("sl2", (2 * s,), p_max=3, q_max=18, radius=10)
    assert cs.flag("status") == "stable"
    rs = root_system("A1")
    member = sl2_solution(s)
    got = {_a1_index(rs, g) for g in cs.chambers}
    want = {i for i in range(-11, 12)
            if member(i) and rs.length(rs.from_barycenter((2 * i + 1,))) <= 10}
    assert got == want


@pytest.mark.parametrize("group,b", [
    ("sl2", (2,)), ("sl3", (3, -1, -2)), ("sp4", (2, 1)), ("g2", (1, 2)),
])
def test_conjugate_seeds_lie_in_superset(group, b):
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    rep = conjugacy_rep(kind, b)
    radius = max(rs.length(g) for g in conjugate_seeds(rs, rep)) + 1
    cs = superset_classes(group, b, p_max=1, q_max=6, radius=radius)
    for g in conjugate_seeds(rs, rep):
        assert g in cs


@pytest.mark.parametrize("group", ["sl3", "sp4", "g2"])
def test_superset_symmetry_invariance(group):
    rs = root_system(GROUP_KIND[group])
    cs = superset_classes(group, tuple(0 for _ in range(rs.dim)),
                          p_max=3, q_max=12, radius=4)
    members = set(cs.chambers)
    for op in rs.symmetry_ops():
        assert {rs.symmetry_apply(op, g) for g in members} == members


def test_classes_equals_complete_small_window():
    a = superset_classes("sl3", (0, 0, 0), p_max=3, q_max=14, radius=4)
    b = superset_complete("sl3", (0, 0, 0), radius=4, dep_budget=9)
    assert set(a.chambers) == set(b.chambers)


def test_g2_flagged_unvalidated():
    cs = superset_classes("g2", (0, 0), p_max=1, q_max=8, radius=3)
    assert cs.flag("validated") is False
    cs2 = superset_classes("sl3", (0, 0, 0), p_max=1, q_max=8, radius=3)
    assert cs2.flag("validated") is True
