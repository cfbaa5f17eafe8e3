"""Gallery types: standard minimal galleries, minimal-gallery enumeration,
composite galleries for a conjugacy representative, and the parametrized
I1/I2 class galleries with their stabilized half-infinite tails."""

from __future__ import annotations

from dataclasses import dataclass

from .weyl import root_system, vec_add, vec_sub, vec_neg, vec_dot, mat_vec


@dataclass(frozen=True)
class GalleryType:
    start: tuple          # AffineElement
    labels: tuple         # cotype labels

    def __len__(self):
        return len(self.labels)


@dataclass(frozen=True)
class DepartureSpec:
    index: int            # edge crossed between SMG chambers index and index+1
    wall: tuple           # (root covector, level K) in scaled coordinates


@dataclass(frozen=True)
class ConjugacyRep:
    kind: str
    lam: tuple            # dominant translation vector in lattice coords
    degeneracy: str       # Identity, DegenLow, DegenHigh, NonDegenerate


def conjugacy_rep(kind, lam):
    lam = tuple(lam)
    rs = root_system(kind)
    if not rs.in_lattice(lam):
        raise ValueError("b exponents %r not in the %s lattice" % (lam, kind))
    vals = [vec_dot(a, lam) for a in rs.positive_roots]
    if any(v < 0 for v in vals):
        raise ValueError("b exponents %r not dominant for %s" % (lam, kind))
    if all(v == 0 for v in vals):
        deg = "Identity"
    elif kind == "A2":
        a, b2 = lam[0], lam[1]
        if a + 2 * b2 == 0:
            deg = "DegenLow"
        elif a + 2 * b2 == 2 * a + b2:
            deg = "DegenHigh"
        else:
            deg = "NonDegenerate"
    elif kind == "C2":
        if lam[1] == 0:
            deg = "DegenLow"
        elif lam[0] == lam[1]:
            deg = "DegenHigh"
        else:
            deg = "NonDegenerate"
    else:
        deg = "NonDegenerate"
    return ConjugacyRep(kind, lam, deg)


# ---------------------------------------------------------------------------
# rays and sectors

RAY_DIRS = {
    # per positive-root index: primitive direction spanning that wall family
    "A1": [(1,)],
    "A2": [(1, 1, -2), (2, -1, -1), (1, -2, 1)],
    "C2": [(1, 1), (1, 0), (1, -1), (0, 1)],
    "G2": [(1, 2), (2, 3), (1, 1), (0, 1), (1, 3), (1, 0)],
}

# rays whose strips carry the primary (first) SMG segment
PRIMARY_RAYS = {
    "A2": {(2, -1, -1), (-1, 2, -1), (-1, -1, 2)},
    "C2": {(1, 0), (-1, 0), (0, 1), (0, -1)},
    "G2": None,  # filled below after cyclic ordering
}

# class designators: I1 sector (primary dir, secondary dir) and I1 departure
# wall family; I2 corridor (family index, direction).  A2 values fixed by the
# golden-figure calibration; C2 values by the directions figure.
CLASS_TABLE = {
    "A2": {"i1_sector": ((-1, 2, -1), (-2, 1, 1)), "horiz_family": 1,
           "c4": (1, (-2, 1, 1))},
    "C2": {"i1_sector": ((0, -1), (-1, -1)), "horiz_family": 0,
           "c4": (0, (-1, -1))},
}


def _proj2(rs, v):
    if rs.kind == "A2":
        return (v[0] - v[1], v[1] - v[2])
    return (v[0], v[1])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _angle_key(p):
    # exact ccw order starting just above the positive x-axis
    half = 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1
    return (half, p)


def _sort_ccw(rs, dirs):
    import functools

    def cmp(u, v):
        pu, pv = _proj2(rs, u), _proj2(rs, v)
        hu = 0 if (pu[1] > 0 or (pu[1] == 0 and pu[0] > 0)) else 1
        hv = 0 if (pv[1] > 0 or (pv[1] == 0 and pv[0] > 0)) else 1
        if hu != hv:
            return -1 if hu < hv else 1
        c = _cross(pu, pv)
        return 0 if c == 0 else (-1 if c > 0 else 1)

    return sorted(dirs, key=functools.cmp_to_key(cmp))


class SectorData:
    """Cyclically ordered rays and the sector table for one root system."""

    def __init__(self, rs):
        self.rs = rs
        if rs.rank == 1:
            self.rays = [(1,), (-1,)]
            self.ray_family = {(1,): 0, (-1,): 0}
            self.sectors = {}
            return
        dirs = []
        for v in RAY_DIRS[rs.kind]:
            dirs.append(tuple(v))
            dirs.append(vec_neg(v))
        self.rays = _sort_ccw(rs, dirs)
        self.ray_family = {}
        for i, v in enumerate(RAY_DIRS[rs.kind]):
            self.ray_family[tuple(v)] = i
            self.ray_family[vec_neg(v)] = i
        if rs.kind == "A1":
            self.sectors = {}
            return
        primary = PRIMARY_RAYS.get(rs.kind)
        if primary is None:
            primary = set(self.rays[0::2])  # alternating choice (G2, unvalidated)
        n = len(self.rays)
        self.sectors = {}
        for i in range(n):
            u, v = self.rays[i], self.rays[(i + 1) % n]
            mid = vec_add(u, v)
            key = tuple(1 if vec_dot(a, mid) > 0 else -1
                        for a in rs.positive_roots)
            in_p = (u in primary, v in primary)
            assert in_p[0] != in_p[1], "primary rays must alternate"
            u1, u2 = (u, v) if in_p[0] else (v, u)
            self.sectors[key] = (u1, u2)


_sector_cache = {}


def sector_data(rs):
    sd = _sector_cache.get(rs.kind)
    if sd is None:
        sd = SectorData(rs)
        _sector_cache[rs.kind] = sd
    return sd


# ---------------------------------------------------------------------------
# classification and straight walks

def classify(rs, target):
    """('corridor', family, direction) or ('region', (u1, u2))."""
    b = rs.barycenter(target)
    if rs.rank == 1:
        d = b[0] - rs.bary0[0]
        return ("corridor", 0, (1,) if d >= 0 else (-1,))
    bands = []
    for a in rs.positive_roots:
        x = vec_dot(a, b)
        bands.append(x // rs.scale)
    zero = [i for i, m in enumerate(bands) if m == 0]
    if zero:
        # pick the zero family whose strip the target is farthest along
        best, bestval = None, -1
        for i in zero:
            v = RAY_DIRS[rs.kind][i]
            t = _walk_coord(rs, b, v)
            if abs(t) > bestval:
                bestval, best = abs(t), (i, v if t > 0 else vec_neg(v))
        return ("corridor", best[0], best[1])
    sd = sector_data(rs)
    key = tuple(1 if m > 0 else -1 for m in bands)
    return ("region", sd.sectors[key])


def _walk_coord(rs, p, v):
    """Signed coordinate of p - bary0 along v (transverse part ignored)."""
    d = vec_sub(p, rs.bary0)
    if rs.dim == 1:
        return d[0] * v[0]
    pd, pv = _proj2(rs, d), _proj2(rs, v)
    # component of pd along pv: sign of dot in the projected plane
    return pd[0] * pv[0] + pd[1] * pv[1]


def straight_step(rs, cur, u):
    """Cross the facet of `cur` first met by a ray from its barycenter
    along direction u.  Returns (label, next alcove)."""
    b = rs.barycenter(cur)
    best = None
    for c in range(rs.rank + 1):
        a, kk = rs.wall(cur, c)
        den = vec_dot(a, u)
        if den == 0:
            continue
        num = kk - vec_dot(a, b)
        if num * den <= 0:
            continue  # crossing is behind
        if den < 0:
            num, den = -num, -den
        if best is None or num * best[2] < best[1] * den:
            best = (c, num, den)
        # corner hit: keep the smaller label (deterministic tie-break)
    if best is None:
        raise AssertionError("no wall ahead in direction %r" % (u,))
    c = best[0]
    return c, rs.adjacent(cur, c)


def lex_min_gallery(rs, a, b):
    """Lexicographically least minimal gallery label sequence from a to b
    (coincides with the unique minimal gallery when there is only one)."""
    labels = []
    chambers = [a]
    cur = a
    d = gallery_distance(rs, a, b)
    while d > 0:
        for c in range(rs.rank + 1):
            n = rs.adjacent(cur, c)
            if gallery_distance(rs, n, b) == d - 1:
                labels.append(c)
                chambers.append(n)
                cur = n
                d -= 1
                break
        else:
            raise AssertionError("no distance-decreasing neighbor")
    return labels, chambers


def smg_info(rs, target):
    """Labels, realization chambers, and turn index of the SMG to target."""
    if target == rs.identity:
        return [], [rs.identity], 0
    cls = classify(rs, target)
    chambers = [rs.identity]
    labels = []
    if cls[0] == "corridor":
        labels, chambers = lex_min_gallery(rs, rs.identity, target)
        turn = len(labels)
    else:
        u1, u2 = cls[1]
        par = [a for a in rs.positive_roots if vec_dot(a, u2) == 0]
        bt = rs.barycenter(target)
        goal = [vec_dot(a, bt) // rs.scale for a in par]
        cur = rs.identity
        while [vec_dot(a, rs.barycenter(cur)) // rs.scale
               for a in par] != goal:
            c, cur = straight_step(rs, cur, u1)
            labels.append(c)
            chambers.append(cur)
        turn = len(labels)
        l2, c2 = lex_min_gallery(rs, cur, target)
        labels.extend(l2)
        chambers.extend(c2[1:])
    assert len(labels) == rs.length(target), \
        "SMG is not minimal for %r" % (target,)
    return labels, chambers, turn


def smg(rs, target):
    labels, _, _ = smg_info(rs, target)
    return GalleryType(rs.identity, tuple(labels))


# ---------------------------------------------------------------------------
# minimal galleries between alcoves

def gallery_distance(rs, a, b):
    return rs.length(rs.compose(rs.invert(a), b))


def minimal_galleries(rs, a, b):
    """All minimal gallery label sequences from alcove a to alcove b."""
    out = []

    def rec(cur, d, acc):
        if d == 0:
            out.append(tuple(acc))
            return
        for c in range(rs.rank + 1):
            nxt = rs.adjacent(cur, c)
            if gallery_distance(rs, nxt, b) == d - 1:
                acc.append(c)
                rec(nxt, d - 1, acc)
                acc.pop()

    rec(a, gallery_distance(rs, a, b), [])
    return out


def geodesic_dag(rs, a, b):
    """DAG of all minimal galleries a -> b: node -> [(label, node)], nodes
    keyed by (alcove, remaining distance)."""
    d0 = gallery_distance(rs, a, b)
    edges = {}
    frontier = {a}
    for d in range(d0, 0, -1):
        nxt = set()
        for cur in frontier:
            lst = []
            for c in range(rs.rank + 1):
                n = rs.adjacent(cur, c)
                if gallery_distance(rs, n, b) == d - 1:
                    lst.append((c, n))
                    nxt.add(n)
            edges[(cur, d)] = [(c, (n, d - 1)) for c, n in lst]
        frontier = nxt
    edges[(b, 0)] = []
    return (a, d0), edges


def parallelogram(rs, a, b):
    """Alcoves lying on some minimal gallery from a to b."""
    d0 = gallery_distance(rs, a, b)
    seen = {a}
    frontier = [a]
    for _ in range(d0):
        nxt = []
        for g in frontier:
            for c in range(rs.rank + 1):
                h = rs.adjacent(g, c)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return {g for g in seen
            if gallery_distance(rs, a, g) + gallery_distance(rs, g, b) == d0}


# ---------------------------------------------------------------------------
# composite galleries

def departure(rs, smg_labels, chambers, index):
    c = smg_labels[index]
    return DepartureSpec(index, rs.wall(chambers[index], c))


def composite(rs, smg_t, dep_index, b_elt, gamma2="All", b1_style="double"):
    """Composite gallery types for the type-edge pair (smg_t, departure at
    dep_index), for the representative element b_elt (a translation for the
    superset families; any affine element for appendage use).

    Returns a list of GalleryTypes anchored at C_M (the re-anchored type of
    x^{-1}Gamma_x).
    """
    labels = list(smg_t.labels)
    chambers = _realize(rs, smg_t)
    m = len(labels)
    if not (0 <= dep_index < m):
        raise ValueError("departure index out of range")
    ce = labels[dep_index]
    inner = labels[dep_index + 1:]
    rev = list(reversed(inner))
    if b_elt == rs.identity:
        if b1_style == "double":
            mids = [(ce, ce)]
        else:
            mids = [(ce,)]
        return [GalleryType(rs.identity, tuple(rev) + mid + tuple(inner))
                for mid in mids]
    md, md1 = chambers[dep_index], chambers[dep_index + 1]
    us = [md, md1]
    vs = [rs.compose(b_elt, md), rs.compose(b_elt, md1)]
    pairs = [(u, v) for u in us for v in vs]
    dmin = min(gallery_distance(rs, u, v) for u, v in pairs)
    types = []
    seen = set()
    for u, v in pairs:
        if gallery_distance(rs, u, v) != dmin:
            continue
        for mid in minimal_galleries(rs, u, v):
            t = tuple(rev) + (ce,) + mid + (ce,) + tuple(inner)
            if t not in seen:
                seen.add(t)
                types.append(GalleryType(rs.identity, t))
    if gamma2 == "Canonical":
        types = [min(types, key=lambda g: g.labels)]
    return types


def composite_segments(rs, smg_t, dep_index, b_elt):
    """Segmented form of the All-mode composite for one-pass DAG folding:
    (start, [prefix labels], [(dag_source, dag_edges)...], [suffix labels])."""
    labels = list(smg_t.labels)
    chambers = _realize(rs, smg_t)
    ce = labels[dep_index]
    inner = tuple(labels[dep_index + 1:])
    rev = tuple(reversed(inner))
    if b_elt == rs.identity:
        return rev + (ce, ce), None, inner
    md, md1 = chambers[dep_index], chambers[dep_index + 1]
    us = [md, md1]
    vs = [rs.compose(b_elt, md), rs.compose(b_elt, md1)]
    pairs = [(u, v) for u in us for v in vs]
    dmin = min(gallery_distance(rs, u, v) for u, v in pairs)
    dags = [geodesic_dag(rs, u, v) for u, v in pairs
            if gallery_distance(rs, u, v) == dmin]
    return rev + (ce,), dags, (ce,) + inner


def _realize(rs, t):
    cur = t.start
    out = [cur]
    for c in t.labels:
        cur = rs.adjacent(cur, c)
        out.append(cur)
    return out


def realize(rs, t):
    """Standard (all-cross) realization: the chamber sequence."""
    return _realize(rs, t)


# ---------------------------------------------------------------------------
# class galleries

@dataclass(frozen=True)
class ClassParams:
    cls: str              # "I1" or "I2"
    p: int                # I1 only; odd
    q: int
    w: int                # finite Weyl index of the target


def _strip_period(rs, u):
    """Chambers per lattice period along a strip in direction u."""
    lam = tuple(u)
    if not rs.in_lattice(lam):
        lam = tuple(2 * x for x in u)
    return rs.length(rs.translation(lam))


def _wall_family(rs, wall):
    a, _ = wall
    for i, r in enumerate(rs.positive_roots):
        if r == a:
            return i
    raise AssertionError("wall covector not a positive root")


_record_cache = {}


def _smg_record(rs, g, dist):
    labels, chambers, turn = smg_info(rs, g)
    fams = tuple(_wall_family(rs, rs.wall(chambers[i], labels[i]))
                 for i in range(len(labels)))
    return (g, dist, turn, g[1], tuple(labels), fams)


def sector_records(rs, sector, radius):
    """SMG records (target, dist, turn, w, labels, wall families) for every
    chamber of the sector within the radius."""
    key = (rs.kind, "sector", sector)
    cached = _record_cache.get(key)
    if cached is not None and cached[0] >= radius:
        return cached[1]
    recs = []
    for g, d in rs.alcoves_within(radius).items():
        cls = classify(rs, g)
        if cls[0] == "region" and cls[1] == sector:
            recs.append(_smg_record(rs, g, d))
    recs.sort(key=lambda r: (r[1], r[4]))
    _record_cache[key] = (radius, recs)
    return recs


def corridor_records(rs, corridor, radius):
    """SMG records for corridor chambers within the radius, on the side of
    the given direction.  BFS stays inside the band (bands are convex, so
    band distance is gallery distance)."""
    fam, u = corridor
    key = (rs.kind, "corridor", fam, u)
    cached = _record_cache.get(key)
    if cached is not None and cached[0] >= radius:
        return cached[1]
    if rs.rank == 1:
        recs = []
        cur = rs.identity
        for m in range(1, radius + 1):
            c, cur = straight_step(rs, cur, u)
            recs.append(_smg_record(rs, cur, m))
        _record_cache[key] = (radius, recs)
        return recs
    a = rs.positive_roots[fam]
    dist = {rs.identity: 0}
    frontier = [rs.identity]
    for m in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for c in range(rs.rank + 1):
                h = rs.adjacent(g, c)
                if h in dist:
                    continue
                v = vec_dot(a, rs.barycenter(h))
                if not 0 < v < rs.scale:
                    continue
                dist[h] = m
                nxt.append(h)
        frontier = nxt
    recs = []
    for g, m in dist.items():
        if m == 0:
            continue
        if _walk_coord(rs, rs.barycenter(g), u) <= 0:
            continue
        recs.append(_smg_record(rs, g, m))
    recs.sort(key=lambda r: (r[1], r[4]))
    _record_cache[key] = (radius, recs)
    return recs


def class_targets(rs, params):
    """(smg_type, departure index) pairs for the class instance: every phase
    within two lattice periods of the designated sector or corridor (all
    sectors/corridors for kinds without a pinned designator table)."""
    out = []
    if params.cls == "I1":
        if params.p < 1 or params.p % 2 == 0:
            raise ValueError("I1 requires odd p >= 1")
        table = CLASS_TABLE.get(rs.kind)
        if rs.kind == "A1":
            sectors = []
        elif table is not None:
            sectors = [table["i1_sector"]]
        else:
            sectors = sorted(set(sector_data(rs).sectors.values()))
        horiz = table["horiz_family"] if table is not None else None
        for sec in sectors:
            period = _strip_period(rs, sec[0])
            amax = params.p + 2 * period
            if params.q == 0:
                # targets on the primary ray itself
                fam = sector_data(rs).ray_family[sec[0]]
                recs = corridor_records(rs, (fam, sec[0]), amax)
            else:
                recs = sector_records(rs, sec, amax + params.q)
            for g, dist, turn, w, labels, fams in recs:
                if w != params.w or dist - turn != params.q:
                    continue
                d = turn - params.p
                if d < 0 or turn > amax:
                    continue
                if horiz is not None and fams[d] != horiz:
                    continue
                out.append((GalleryType(rs.identity, labels), d))
    elif params.cls == "I2":
        table = CLASS_TABLE.get(rs.kind)
        if rs.kind == "A1":
            corridors = [(0, (1,))]
        elif table is not None:
            corridors = [table["c4"]]
        else:
            corridors = [(i, v) for i, v in enumerate(RAY_DIRS[rs.kind])]
            corridors += [(i, vec_neg(v))
                          for i, v in enumerate(RAY_DIRS[rs.kind])]
        for cor in corridors:
            period = _strip_period(rs, cor[1])
            mmax = max(params.q, 1) + 2 * period
            for g, m, turn, w, labels, fams in corridor_records(rs, cor, mmax):
                if w != params.w or m < max(params.q, 1):
                    continue
                d = m - params.q
                if d < 0 or d >= m:
                    continue
                out.append((GalleryType(rs.identity, labels), d))
    else:
        raise ValueError("unknown class %r" % (params.cls,))
    return out


def class_composite(rs, params, b, gamma2="All", b1_style="double"):
    """Composite gallery types for the (t, e) pair determined by params."""
    b_elt = rs.translation(b.lam)
    types = []
    seen = set()
    for smg_t, dep in class_targets(rs, params):
        for t in composite(rs, smg_t, dep, b_elt, gamma2=gamma2,
                           b1_style=b1_style):
            if t.labels not in seen:
                seen.add(t.labels)
                types.append(t)
    return types


def omega_tail(rs, cls, p, w, b, depth, q_budget=60):
    """Terminal segment of the half-infinite gallery: the stabilized tail of
    the canonical class composites for growing q."""
    agree, prev = 0, None
    found = False
    for q in range(1, q_budget + 1):
        types = class_composite(rs, ClassParams(cls, p, q, w), b,
                                gamma2="Canonical")
        if not types:
            continue
        found = True
        t = types[0]
        if len(t.labels) < depth:
            continue
        chs = _realize(rs, t)
        tail = (chs[len(t.labels) - depth], t.labels[-depth:])
        if prev is not None and tail == prev:
            agree += 1
            if agree >= 3:
                return GalleryType(tail[0], tail[1])
        else:
            agree = 0
        prev = tail
    if not found:
        return None
    raise RuntimeError(
        "omega tail did not stabilize (cls=%s p=%d w=%d depth=%d)"
        % (cls, p, w, depth))
