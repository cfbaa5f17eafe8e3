"""Superset computation: union of class foldings (or of foldings over every
type-edge pair up to a budget), conjugate seeds, symmetry closure, and
windowing into a ChamberSet."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .weyl import root_system
from .gallery import (conjugacy_rep, classify, smg_info, GalleryType)
from .folding import fold_limit, fold_composite_all

GROUP_KIND = {
    "sl2": "A1", "gl2": "A1", "pgl2": "A1",
    "sl3": "A2", "gl3": "A2", "pgl3": "A2",
    "sp4": "C2", "gsp4": "C2", "psp4": "C2",
    "g2": "G2",
}


@dataclass(frozen=True)
class ChamberSet:
    group: str
    b: tuple
    kind: str                 # Superset, Subset, Exact
    window: int
    flags: tuple              # sorted (key, value) pairs
    chambers: tuple           # sorted alcoves

    def flag(self, key):
        return dict(self.flags).get(key)

    def __contains__(self, g):
        return g in set(self.chambers)


def _finish(rs, group, b, kindname, radius, flags, raw):
    closed = set()
    for g in raw:
        for op in rs.symmetry_ops():
            closed.add(rs.symmetry_apply(op, g))
    windowed = sorted((g for g in closed if rs.length(g) <= radius),
                      key=rs.sort_key)
    return ChamberSet(group, tuple(b.lam), kindname, radius,
                      tuple(sorted(flags.items())), tuple(windowed))


def conjugate_seeds(rs, b):
    """Chambers t_{w lambda} C_M for w in the finite Weyl group: the
    contribution of chambers lying in the main apartment."""
    out = set()
    for wi in range(len(rs.finite_weyl)):
        m = rs.finite_weyl[wi]
        lam = tuple(sum(m[i][j] * b.lam[j] for j in range(rs.dim))
                    for i in range(rs.dim))
        out.add(rs.translation(lam))
    return out


def superset_classes(group, b_exp, p_max=9, q_max=25, radius=8, threads=1,
                     stability_window=4):
    """Superset from the parametrized I1/I2 class families."""
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    b = conjugacy_rep(kind, b_exp)
    jobs = []
    for w in range(len(rs.finite_weyl)):
        jobs.append(("I2", 1, w))
        for p in range(1, p_max + 1, 2):
            jobs.append(("I1", p, w))

    def run(job):
        cls, p, w = job
        return fold_limit(rs, cls, p, w, b, q_max,
                          stability_window=stability_window, radius=radius)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    raw = set(conjugate_seeds(rs, b))
    status = "stable"
    for res, flag in results:
        raw |= res
        if flag == "truncated":
            status = "truncated"
    flags = {"method": "classes", "status": status,
             "p_max": p_max, "q_max": q_max,
             "validated": kind != "G2"}
    return _finish(rs, group, b, "Superset", radius, flags, raw)


def all_type_edge_pairs(rs, dep_budget):
    """Every (smg type, departure index) with target within dep_budget.
    Region targets only admit departures strictly before the turning edge."""
    pairs = []
    for g in rs.alcoves_within(dep_budget):
        if g == rs.identity:
            continue
        labels, chambers, turn = smg_info(rs, g)
        t = GalleryType(rs.identity, tuple(labels))
        cls = classify(rs, g)
        dmax = turn if cls[0] == "region" else len(labels)
        for d in range(dmax):
            pairs.append((t, d))
    return pairs


def superset_complete(group, b_exp, radius=8, dep_budget=None, threads=1):
    """Superset from all type-edge pairs with targets inside dep_budget."""
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    b = conjugacy_rep(kind, b_exp)
    if dep_budget is None:
        dep_budget = radius + 7
    b_elt = rs.translation(b.lam)
    pairs = all_type_edge_pairs(rs, dep_budget)

    def run(pair):
        t, d = pair
        return fold_composite_all(rs, t, d, b_elt)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, pairs))
    else:
        results = [run(p) for p in pairs]
    raw = set(conjugate_seeds(rs, b))
    for res in results:
        raw |= res
    flags = {"method": "complete", "status": "stable",
             "dep_budget": dep_budget, "validated": kind != "G2"}
    return _finish(rs, group, b, "Superset", radius, flags, raw)
