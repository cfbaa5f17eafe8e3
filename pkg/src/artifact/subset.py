"""Certified-nonempty chamber sets: norm-zero seeds for b = 1, closure under
the length rules and symmetry, and appendage certification."""

from __future__ import annotations

from .weyl import root_system
from .gallery import GalleryType, conjugacy_rep, composite
from .folding import fold_all
from .superset import ChamberSet, GROUP_KIND, conjugate_seeds


def _gen_elt(rs, c):
    tr, w = rs.gen[c]
    return (tr, w)


def kr_seed(group, radius, b_exp=None):
    """Alcoves t_lam * w * C_M with norm_sum(w, lam) = 0, within radius.
    Only available for b = 1."""
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    if b_exp is not None:
        b = conjugacy_rep(kind, b_exp)
        if b.degeneracy != "Identity":
            raise ValueError("norm-zero seeding applies only to b = 1")
    zero = tuple(0 for _ in range(rs.dim))
    chambers = []
    prov = {}
    for g in rs.alcoves_within(radius):
        lam, w = g
        if rs.norm_sum(w, lam) == zero:
            chambers.append(g)
            prov[g] = ("seed",)
    chambers.sort(key=rs.sort_key)
    return ChamberSet(group, zero, "Subset", radius,
                      (("method", "kr"), ("status", "stable")),
                      tuple(chambers)), prov


def closure_expand(seed, radius=None, max_passes=None, provenance=None):
    """Least fixed point, within the window, of:
    rule A: l(sw) > l(w) and l(ws) < l(w)  =>  add sw   (and mirrored);
    rule B: l(sws) = l(w)                  =>  add sws;
    rule C: symmetry images.
    Worklist runs by increasing length, then canonical order."""
    rs = root_system(GROUP_KIND[seed.group])
    if radius is None:
        radius = seed.window
    members = set(seed.chambers)
    prov = dict(provenance) if provenance else {g: ("seed",)
                                               for g in seed.chambers}
    queue = sorted(members, key=lambda g: (rs.length(g), rs.sort_key(g)))
    passes = 0
    while queue:
        passes += 1
        if max_passes is not None and passes > max_passes:
            break
        new = []

        def add(g, why):
            if g not in members and rs.length(g) <= radius:
                members.add(g)
                prov[g] = why
                new.append(g)

        for g in queue:
            lg = rs.length(g)
            for c in range(rs.rank + 1):
                s = _gen_elt(rs, c)
                sw = rs.compose(s, g)
                ws = rs.compose(g, s)
                sws = rs.compose(s, ws)
                lsw, lws = rs.length(sw), rs.length(ws)
                if rs.length(sws) == lg:
                    add(sws, ("B", c, g))
                if lsw > lg and lws < lg:
                    add(sw, ("A-left", c, g))
                if lws > lg and lsw < lg:
                    add(ws, ("A-right", c, g))
            for op in rs.symmetry_ops():
                add(rs.symmetry_apply(op, g), ("C", op.kind, g))
        queue = sorted(new, key=lambda g: (rs.length(g), rs.sort_key(g)))
    chambers = sorted(members, key=rs.sort_key)
    flags = dict(seed.flags)
    flags["method"] = flags.get("method", "seed") + "+closure"
    return ChamberSet(seed.group, seed.b, "Subset", radius,
                      tuple(sorted(flags.items())), tuple(chambers)), prov


def replay_provenance(rs, g, prov):
    """Check that a provenance chain derives g from a seed by the rules."""
    why = prov[g]
    if why[0] == "seed":
        return True
    rule, key, parent = why
    if not replay_provenance(rs, parent, prov):
        return False
    lg = rs.length(parent)
    if rule == "C":
        ops = {op.kind: op for op in rs.symmetry_ops()}
        return rs.symmetry_apply(ops[key], parent) == g
    s = _gen_elt(rs, key)
    sw = rs.compose(s, parent)
    ws = rs.compose(parent, s)
    if rule == "B":
        sws = rs.compose(s, ws)
        return sws == g and rs.length(sws) == lg
    if rule == "A-left":
        return sw == g and rs.length(sw) > lg and rs.length(ws) < lg
    if rule == "A-right":
        return ws == g and rs.length(ws) > lg and rs.length(sw) < lg
    return False


def appendage_certify(group, tilde_b, neighbor_role):
    """Certify a chamber from a one-step appendage across a facet of C_M.

    tilde_b is an affine element (lam, w) with norm_sum(w, lam) = 0 (i.e.
    sigma-conjugate to 1); neighbor_role is the facet cotype (0..rank) of
    the off-apartment neighbor.  Returns the folded chamber if the
    appendage composite folds in a unique way, else None."""
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    lam, w = tilde_b
    zero = tuple(0 for _ in range(rs.dim))
    if rs.norm_sum(w, tuple(lam)) != zero:
        raise ValueError("appendage element must be norm-zero")
    if not 0 <= neighbor_role <= rs.rank:
        raise ValueError("neighbor role out of range")
    smg_t = GalleryType(rs.identity, (neighbor_role,))
    out = set()
    for t in composite(rs, smg_t, 0, (tuple(lam), w)):
        out |= fold_all(rs, t)
    if len(out) == 1:
        return next(iter(out))
    return None


def subset_for(group, b_exp, radius):
    """S2 for the given b: norm-zero seeds closed under the rules for b = 1;
    the W-conjugate seeds closed under the rules otherwise (partial)."""
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    b = conjugacy_rep(kind, b_exp)
    if b.degeneracy == "Identity":
        seed, prov = kr_seed(group, radius)
        return closure_expand(seed, radius)
    seeds = sorted(conjugate_seeds(rs, b), key=rs.sort_key)
    prov = {g: ("seed",) for g in seeds}
    seed = ChamberSet(group, tuple(b.lam), "Subset", radius,
                      (("method", "conjugates"), ("status", "partial")),
                      tuple(g for g in seeds if rs.length(g) <= radius))
    return closure_expand(seed, radius, provenance=prov)
