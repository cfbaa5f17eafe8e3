"""Folding of gallery types down into the main apartment.

At each step of a gallery type, the current chamber D is to be exchanged
across its facet of the given cotype.  If C_M lies on D's side of the facet
wall, the retraction must cross; otherwise it may cross or fold back.  The
final chambers over all allowed runs form the folding result set.
"""

from __future__ import annotations

from .gallery import GalleryType, realize, composite_segments, class_composite


def step_options(rs, d, c):
    nxt = rs.adjacent(d, c)
    if rs.facet_side(d, c, rs.barycenter(d)) > 0:
        return (nxt,)            # moving away from C_M: forced cross
    return (d, nxt)              # fold back or cross


def fold_standard(rs, t):
    """Endpoint of the all-cross folding (the standard realization)."""
    cur = t.start
    for c in t.labels:
        cur = rs.adjacent(cur, c)
    return cur


def fold_all(rs, t):
    """All possible folding endpoints, by a forward DP over per-step
    chamber sets (memoization is per invocation)."""
    states = {t.start}
    for c in t.labels:
        nxt = set()
        for d in states:
            nxt.update(step_options(rs, d, c))
        states = nxt
    return states


def fold_naive(rs, t):
    """Depth-first enumeration of every folding run.  Exponential; only for
    cross-checking short galleries."""
    if len(t.labels) > 16:
        raise ValueError("fold_naive is limited to 16 steps")
    out = set()

    def rec(cur, i):
        if i == len(t.labels):
            out.add(cur)
            return
        for n in step_options(rs, cur, t.labels[i]):
            rec(n, i + 1)

    rec(t.start, 0)
    return out


def choice_points(rs, t):
    """Indices along the standard realization where a folding choice exists."""
    chs = realize(rs, t)
    return [i for i, c in enumerate(t.labels)
            if rs.facet_side(chs[i], c, rs.barycenter(chs[i])) < 0]


def _fold_labels(rs, states, labels):
    for c in labels:
        nxt = set()
        for d in states:
            nxt.update(step_options(rs, d, c))
        states = nxt
    return states


def _fold_dag(rs, states, dag):
    """Fold through a geodesic DAG of middle galleries: propagate
    (chamber, dag node) pairs and collect the states at the sink."""
    src, edges = dag
    layer = {(d, src) for d in states}
    out = set()
    while layer:
        nxt = set()
        for d, node in layer:
            succs = edges[node]
            if not succs:
                out.add(d)
                continue
            for c, node2 in succs:
                for n in step_options(rs, d, c):
                    nxt.add((n, node2))
        layer = nxt
    return out


def fold_composite_all(rs, smg_t, dep_index, b_elt):
    """Folding endpoints over every All-mode composite for the type-edge
    pair, folding the shared middle-gallery DAG in one pass."""
    prefix, dags, suffix = composite_segments(rs, smg_t, dep_index, b_elt)
    states = _fold_labels(rs, {rs.identity}, prefix)
    if dags is None:
        mid = states
    else:
        mid = set()
        for dag in dags:
            mid.update(_fold_dag(rs, states, dag))
    return _fold_labels(rs, mid, suffix)


def fold_class(rs, params, b):
    """Folding endpoints over all composites of the class instance."""
    from .gallery import class_targets
    b_elt = rs.translation(b.lam)
    out = set()
    for smg_t, dep in class_targets(rs, params):
        out.update(fold_composite_all(rs, smg_t, dep, b_elt))
    return out


def fold_limit(rs, cls, p, w, b, q_max, stability_window=4, radius=None):
    """Union of class foldings for q = 0..q_max.  Reports whether the union
    was stable over the final window of q values ("stable") or still
    growing when the budget ran out ("truncated").  With a radius, only
    growth inside that window counts against stability (the full set keeps
    growing outward forever)."""
    from .gallery import ClassParams
    out = set()
    last_new = 0
    for q in range(q_max + 1):
        if cls == "I2" and q == 0:
            continue
        res = fold_class(rs, ClassParams(cls, p, q, w), b)
        new = res - out
        if radius is not None:
            new = {g for g in new if rs.length(g) <= radius}
        if new:
            last_new = q
        out.update(res)
    stable = q_max - last_new >= stability_window
    return out, ("stable" if stable else "truncated")
