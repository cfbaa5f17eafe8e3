import random

import pytest

import golden_data as GD
from artifact.weyl import root_system
from artifact import gallery as G
from artifact import folding as F


def _golden_composite():
    rs = root_system("A2")
    b = G.conjugacy_rep("A2", GD.GALLERY_B)
    w = rs.w_names.index("f")
    params = G.ClassParams("I1", GD.GALLERY_P, GD.GALLERY_Q, w)
    smg_t, dep = G.class_targets(rs, params)[0]
    t = G.composite(rs, smg_t, dep, rs.translation(b.lam))[0]
    return rs, smg_t, dep, b, t


def test_golden_choice_point_edges():
    rs, _, _, _, t = _golden_composite()
    cps = F.choice_points(rs, t)
    chs = G.realize(rs, t)

    def facet(i):
        a = set(map(tuple, rs.alcove_vertices(chs[i])))
        bb = set(map(tuple, rs.alcove_vertices(chs[i + 1])))
        return frozenset(GD.draw_point(v) for v in a & bb)

    assert len(cps) == len(GD.CHOICE_EDGES)
    assert {facet(i) for i in cps} == {GD.edge18(e) for e in GD.CHOICE_EDGES}


@pytest.mark.parametrize("kind", ["A1", "A2", "C2", "G2"])
def test_fold_all_equals_fold_naive_random(kind):
    rs = root_system(kind)
    rng = random.Random(20260823)
    for _ in range(50):
        labels = tuple(rng.randrange(rs.rank + 1)
                       for _ in range(rng.randrange(1, 13)))
        t = G.GalleryType(rs.identity, labels)
        assert F.fold_all(rs, t) == F.fold_naive(rs, t)


@pytest.mark.parametrize("kind", ["A1", "A2", "C2", "G2"])
def test_fold_standard_is_generator_product(kind):
    rs = root_system(kind)
    rng = random.Random(11)
    for _ in range(100):
        labels = tuple(rng.randrange(rs.rank + 1)
                       for _ in range(rng.randrange(0, 20)))
        t = G.GalleryType(rs.identity, labels)
        cur = rs.identity
        for c in labels:
            cur = rs.adjacent(cur, c)
        assert F.fold_standard(rs, t) == cur
        assert cur in F.fold_all(rs, t)


@pytest.mark.parametrize("kind", ["A1", "A2", "C2", "G2"])
def test_minimal_types_fold_to_singletons(kind):
    # a minimal gallery from C_M never recrosses a wall: every step is forced
    rs = root_system(kind)
    for g in rs.alcoves_within(4):
        if g == rs.identity:
            continue
        labels, _, _ = G.smg_info(rs, g)
        t = G.GalleryType(rs.identity, tuple(labels))
        assert F.fold_all(rs, t) == {g}
        assert F.choice_points(rs, t) == []


def test_dag_fold_equals_per_middle_fold():
    rs, smg_t, dep, b, _ = _golden_composite()
    b_elt = rs.translation(b.lam)
    all_end = set()
    for tt in G.composite(rs, smg_t, dep, b_elt):
        all_end |= F.fold_all(rs, tt)
    assert F.fold_composite_all(rs, smg_t, dep, b_elt) == all_end


def test_fold_limit_reports_stability():
    rs = root_system("A1")
    b = G.conjugacy_rep("A1", (0,))
    out, status = F.fold_limit(rs, "I2", 1, 0, b, 14, radius=6)
    assert status == "stable"
    out2, status2 = F.fold_limit(rs, "I2", 1, 0, b, 2, radius=6)
    assert status2 == "truncated"
    assert out2 <= out
