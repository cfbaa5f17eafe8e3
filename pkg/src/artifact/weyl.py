"""Exact integer models of the rank-1/2 affine Weyl groups.

Points live in scaled integer coordinates (scale clears all alcove-vertex
denominators), translations in the unscaled coroot lattice.  An affine
element is a pair (translation, finite index); it doubles as the alcove
label g*C_M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

Vec = tuple
Mat = tuple  # tuple of row tuples

KINDS = ("A1", "A2", "C2", "G2")


def mat_vec(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def ident(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def reflection_matrix(n, covector, coroot):
    # x -> x - <covector, x> * coroot
    return tuple(
        tuple((1 if i == j else 0) - coroot[i] * covector[j] for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class SymmetryOp:
    kind: str           # Identity, FlipMid_A1, Rot120_A2, Rot240_A2, FlipVert_C2
    matrix: Mat
    shift: Vec          # scaled-coordinate translation part


@dataclass
class RootSystemData:
    kind: str
    rank: int
    dim: int
    simple_roots: list          # covectors, index 1..rank stored at 0..rank-1
    simple_coroots: list
    positive_roots: list        # covectors
    positive_coroots: list
    highest_root: Vec
    highest_coroot: Vec
    finite_weyl: list           # matrices, index 0 = identity
    w_names: list
    base_vertices_scaled: list  # index = vertex type, 0 = v_M
    scale: int

    # ---- construction -------------------------------------------------

    def __post_init__(self):
        n = self.dim
        self.id_mat = ident(n)
        self.w_index = {m: i for i, m in enumerate(self.finite_weyl)}
        nw = len(self.finite_weyl)
        self.w_mul = [
            [self.w_index[mat_mul(self.finite_weyl[i], self.finite_weyl[j])]
             for j in range(nw)]
            for i in range(nw)
        ]
        self.w_inv = [0] * nw
        for i in range(nw):
            for j in range(nw):
                if self.w_mul[i][j] == 0:
                    self.w_inv[i] = j
        self.bary0 = tuple(
            sum(v[i] for v in self.base_vertices_scaled) // (self.rank + 1)
            for i in range(n)
        )
        # simple affine generators: index 0 = reflection across <highest,x>=1,
        # index c>=1 = reflection across <alpha_c,x>=0
        self.gen = []
        s0 = self.w_index[reflection_matrix(n, self.highest_root, self.highest_coroot)]
        self.gen.append((self.highest_coroot, s0))
        for c in range(1, self.rank + 1):
            sc = self.w_index[reflection_matrix(
                n, self.simple_roots[c - 1], self.simple_coroots[c - 1])]
            self.gen.append((tuple(0 for _ in range(n)), sc))
        self.identity = (tuple(0 for _ in range(n)), 0)
        self._len_cache = {}
        self._from_bary = {}
        self._vtype_cache = {}

    # ---- lattice ------------------------------------------------------

    def in_lattice(self, t):
        if self.kind == "A1":
            return t[0] % 2 == 0
        if self.kind == "A2":
            return sum(t) == 0
        return True  # C2, G2: full Z^2

    # ---- group operations ---------------------------------------------

    def compose(self, g, h):
        tg, wg = g
        th, wh = h
        return (vec_add(tg, mat_vec(self.finite_weyl[wg], th)), self.w_mul[wg][wh])

    def invert(self, g):
        t, w = g
        wi = self.w_inv[w]
        return (vec_neg(mat_vec(self.finite_weyl[wi], t)), wi)

    def apply(self, g, p):
        """Apply g to a scaled point."""
        t, w = g
        return vec_add(mat_vec(self.finite_weyl[w], p),
                       tuple(self.scale * x for x in t))

    def translation(self, t):
        return (tuple(t), 0)

    def barycenter(self, g):
        return self.apply(g, self.bary0)

    def from_barycenter(self, p):
        g = self._from_bary.get(p)
        if g is not None:
            return g
        for w in range(len(self.finite_weyl)):
            q = vec_sub(p, mat_vec(self.finite_weyl[w], self.bary0))
            if all(x % self.scale == 0 for x in q):
                t = tuple(x // self.scale for x in q)
                if self.in_lattice(t):
                    g = (t, w)
                    self._from_bary[p] = g
                    return g
        raise ValueError("point is not an alcove barycenter: %r" % (p,))

    def adjacent(self, g, c):
        return self.compose(g, self.gen[c])

    # ---- walls and sides ----------------------------------------------

    def wall(self, g, c):
        """Wall containing the cotype-c facet of alcove g.

        Returns (covector a, K): the wall is {p : a(p) = K} in scaled
        coordinates, with a a positive root covector.
        """
        t, w = g
        wi = self.w_inv[w]
        mi = self.finite_weyl[wi]
        a0 = self.highest_root if c == 0 else self.simple_roots[c - 1]
        # a(p) for p in g-frame: a0(M^{-1}(p - scale*t))
        a = tuple(vec_dot(a0, tuple(mi[i][j] for i in range(self.dim)))
                  for j in range(self.dim))
        k0 = self.scale if c == 0 else 0
        kk = k0 + vec_dot(a, tuple(self.scale * x for x in t))
        if a in self._neg_root_set():
            a = vec_neg(a)
            kk = -kk
        return (a, kk)

    def _neg_root_set(self):
        ns = getattr(self, "_negset", None)
        if ns is None:
            ns = set(vec_neg(a) for a in self.positive_roots)
            self._negset = ns
        return ns

    def facet_side(self, g, c, p):
        """+1 if p is on the C_M side of alcove g's cotype-c wall."""
        a, kk = self.wall(g, c)
        s = vec_dot(a, p) - kk
        s0 = vec_dot(a, self.bary0) - kk
        if s == 0:
            return 0
        return 1 if (s > 0) == (s0 > 0) else -1

    # ---- length, words ------------------------------------------------

    def length(self, g):
        r = self._len_cache.get(g)
        if r is not None:
            return r
        b = self.barycenter(g)
        n = 0
        for a in self.positive_roots:
            x, y = vec_dot(a, self.bary0), vec_dot(a, b)
            if x > y:
                x, y = y, x
            n += y // self.scale - x // self.scale
        self._len_cache[g] = n
        return n

    def reduced_word(self, g):
        word = []
        lg = self.length(g)
        while lg > 0:
            for c in range(self.rank + 1):
                h = self.compose(self.gen[c], g)
                lh = self.length(h)
                if lh < lg:
                    word.append(c)
                    g, lg = h, lh
                    break
            else:
                raise AssertionError("no descent found")
        return word

    def norm_sum(self, w, lam):
        m, acc, cur = self.finite_weyl[w], tuple(lam), tuple(lam)
        # order of w
        x, d = m, 1
        while x != self.id_mat:
            x, d = mat_mul(x, m), d + 1
        for _ in range(d - 1):
            cur = mat_vec(m, cur)
            acc = vec_add(acc, cur)
        return acc

    # ---- enumeration ---------------------------------------------------

    def alcoves_within(self, radius):
        """All alcoves at gallery distance <= radius from C_M (BFS)."""
        dist = {self.identity: 0}
        frontier = [self.identity]
        for d in range(1, radius + 1):
            nxt = []
            for g in frontier:
                for c in range(self.rank + 1):
                    h = self.adjacent(g, c)
                    if h not in dist:
                        dist[h] = d
                        nxt.append(h)
            frontier = nxt
        return dist

    # ---- symmetry -------------------------------------------------------

    def symmetry_ops(self):
        ops = [SymmetryOp("Identity", self.id_mat, tuple(0 for _ in range(self.dim)))]
        if self.kind == "A1":
            ops.append(SymmetryOp("FlipMid_A1", ((-1,),), (2,)))
        elif self.kind == "A2":
            rot = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
            ops.append(SymmetryOp("Rot120_A2", rot, (6, -3, -3)))
            ops.append(SymmetryOp("Rot240_A2", mat_mul(rot, rot), (3, 3, -6)))
        elif self.kind == "C2":
            ops.append(SymmetryOp("FlipVert_C2", ((0, -1), (-1, 0)), (3, 3)))
        return ops

    def symmetry_apply(self, op, g):
        p = self.barycenter(g)
        return self.from_barycenter(vec_add(mat_vec(op.matrix, p), op.shift))

    # ---- vertices -------------------------------------------------------

    def vertex_type(self, v):
        """Type of a scaled vertex point (orbit under the affine group)."""
        r = self._vtype_cache.get(v)
        if r is not None:
            return r
        for i, base in enumerate(self.base_vertices_scaled):
            for w in range(len(self.finite_weyl)):
                q = vec_sub(v, mat_vec(self.finite_weyl[w], base))
                if all(x % self.scale == 0 for x in q) and \
                        self.in_lattice(tuple(x // self.scale for x in q)):
                    self._vtype_cache[v] = i
                    return i
        raise ValueError("not a vertex of the tiling: %r" % (v,))

    def alcove_vertices(self, g):
        return [self.apply(g, v) for v in self.base_vertices_scaled]

    def facet_vertices(self, g, c):
        """The cotype-c facet of alcove g, as a sorted tuple of scaled vertices."""
        vs = [self.apply(g, v) for i, v in enumerate(self.base_vertices_scaled)
              if i != c]
        return tuple(sorted(vs))

    def sort_key(self, g):
        return (g[0], g[1])


def _names_from_rf(rs_mats, r, f, order_r):
    mats, names = [], []
    cur = ident(len(r))
    for i in range(order_r):
        nm = "1" if i == 0 else ("r" if i == 1 else "r%d" % i)
        mats.append(cur)
        names.append(nm)
        cur = mat_mul(cur, r)
    cur = f
    for i in range(order_r):
        nm = "f" if i == 0 else ("rf" if i == 1 else "r%df" % i)
        mats.append(mat_mul(mats[i], f))
        names.append(nm)
    assert len(set(mats)) == 2 * order_r
    assert set(mats) == set(rs_mats)
    return mats, names


def _gen_weyl(simple_pairs, n):
    gens = [reflection_matrix(n, a, av) for a, av in simple_pairs]
    seen = {ident(n)}
    frontier = [ident(n)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mat_mul(m, g)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def root_system(kind):
    if kind == "A1":
        simples = [(1,)]
        cosimples = [(2,)]
        pos = [(1,)]
        copos = [(2,)]
        theta, cotheta = (1,), (2,)
        verts = [(0,), (2,)]
        scale = 2
        mats = [((1,),), ((-1,),)]
        names = ["1", "s"]
    elif kind == "A2":
        simples = [(1, -1, 0), (0, 1, -1)]
        cosimples = [(1, -1, 0), (0, 1, -1)]
        pos = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
        copos = list(pos)
        theta, cotheta = (1, 0, -1), (1, 0, -1)
        verts = [(0, 0, 0), (6, -3, -3), (3, 3, -6)]
        scale = 9
        w = _gen_weyl(list(zip(simples, cosimples)), 3)
        assert len(w) == 6
        r = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
        f = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
        mats, names = _names_from_rf(w, r, f, 3)
    elif kind == "C2":
        simples = [(1, -1), (0, 2)]
        cosimples = [(1, -1), (0, 1)]
        pos = [(1, -1), (0, 2), (1, 1), (2, 0)]
        copos = [(1, -1), (0, 1), (1, 1), (1, 0)]
        theta, cotheta = (2, 0), (1, 0)
        verts = [(0, 0), (3, 0), (3, 3)]
        scale = 6
        w = _gen_weyl(list(zip(simples, cosimples)), 2)
        assert len(w) == 8
        r = ((0, 1), (-1, 0))
        f = ((0, -1), (-1, 0))
        mats, names = _names_from_rf(w, r, f, 4)
    elif kind == "G2":
        simples = [(2, -1), (-3, 2)]
        cosimples = [(1, 0), (0, 1)]
        pos = [(2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)]
        copos = [(1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2)]
        theta, cotheta = (0, 1), (1, 2)
        verts = [(0, 0), (12, 18), (9, 18)]
        scale = 18
        w = _gen_weyl(list(zip(simples, cosimples)), 2)
        assert len(w) == 12
        r = ((2, -1), (3, -1))
        f = ((2, -1), (3, -2))
        mats, names = _names_from_rf(w, r, f, 6)
    else:
        raise ValueError("unknown kind %r" % (kind,))
    rank = len(simples)
    rs = RootSystemData(
        kind=kind, rank=rank, dim=len(theta),
        simple_roots=simples, simple_coroots=cosimples,
        positive_roots=pos, positive_coroots=copos,
        highest_root=theta, highest_coroot=cotheta,
        finite_weyl=mats, w_names=names,
        base_vertices_scaled=verts, scale=scale,
    )
    return rs
