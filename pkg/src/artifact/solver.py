"""Verdict assembly: sandwich the certified subset and the computed superset
into per-chamber NONEMPTY / EMPTY / UNKNOWN verdicts, with the rank-1
closed forms and the extended-group decorations."""

from __future__ import annotations

from dataclasses import dataclass

from .weyl import root_system
from .gallery import conjugacy_rep
from .superset import (GROUP_KIND, superset_classes, superset_complete,
                       conjugate_seeds, ChamberSet, _finish)
from .subset import subset_for
from . import folding, gallery


@dataclass(frozen=True)
class VerdictMap:
    group: str
    b: tuple
    window: int
    entries: tuple            # sorted (alcove, verdict, provenance) triples
    flags: tuple

    def verdict(self, g):
        for a, v, _ in self.entries:
            if a == g:
                return v
        raise KeyError(g)

    @property
    def exact(self):
        return all(v != "UNKNOWN" for _, v, _ in self.entries)

    def chambers(self, verdict):
        return tuple(a for a, v, _ in self.entries if v == verdict)

    def flag(self, key):
        return dict(self.flags).get(key)


# ---------------------------------------------------------------------------
# rank-1 closed forms

def sl2_solution(s):
    """Membership predicate over the chamber index i."""
    if s < 0:
        raise ValueError("s must be >= 0")

    def member(i):
        if s == 0:
            return i == 0 or i % 2 != 0
        a = abs(i)
        return a == 2 * s or (a > 2 * s and (a - 2 * s) % 2 == 1)

    return member


def sl2_inverse(i):
    """All s with a nonempty set at chamber index i."""
    a = abs(i)
    if a % 2 == 0:
        return {a // 2}
    return set(range(a // 2 + 1))


@dataclass(frozen=True)
class ExtendedVerdict:
    base: object              # VerdictMap, or tuple of indices for rank 1
    det_component: int
    modulus: int              # 0 = plain integer


def gl2_variants(variant, window=12, pgl2=False):
    """First-component chamber indices and the det component.

    variant: ("diagonal", alpha, beta) or ("antidiagonal", alpha)."""
    if variant[0] == "diagonal":
        _, alpha, beta = variant
        m = abs(alpha - beta)
        if m == 0:
            member = sl2_solution(0)
        else:
            def member(i, m=m):
                a = abs(i)
                return a == m or (a > m and (a - m) % 2 == 1)
        det = alpha + beta
    elif variant[0] == "antidiagonal":
        _, alpha = variant
        if alpha % 2 == 0:
            raise ValueError("antidiagonal variant requires odd alpha")
        def member(i):
            return i % 2 == 0
        det = alpha
    else:
        raise ValueError("unknown variant %r" % (variant[0],))
    idx = tuple(i for i in range(-window, window + 1) if member(i))
    mod = 2 if pgl2 else 0
    return ExtendedVerdict(idx, det % 2 if pgl2 else det, mod)


def extended_decorate(group_variant, base):
    """Attach the det component to a base verdict map; chamber verdicts are
    unchanged (the two chamber sets coincide for these groups)."""
    group_variant = group_variant.lower()
    mods = {"gl3": 0, "pgl3": 3, "gsp4": 0, "psp4": 2}
    if group_variant not in mods:
        raise ValueError("unsupported extended group %r" % (group_variant,))
    mod = mods[group_variant]
    det = 0                   # v(det b) = 0 for the representative family
    return ExtendedVerdict(base, det % mod if mod else det, mod)


# ---------------------------------------------------------------------------
# orchestration

def _a1_index(rs, g):
    return (rs.barycenter(g)[0] - 1) // 2


def solve(group, b_exp, radius=8, p_max=9, q_max=25, method="classes",
          threads=1, dep_budget=None):
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    b = conjugacy_rep(kind, b_exp)

    if method == "classes":
        sup = superset_classes(group, b_exp, p_max=p_max, q_max=q_max,
                               radius=radius, threads=threads)
    elif method == "complete":
        sup = superset_complete(group, b_exp, radius=radius,
                                dep_budget=dep_budget, threads=threads)
    elif method == "halfinf":
        sup = superset_halfinf(group, b_exp, p_max=p_max, q_max=q_max,
                               radius=radius, threads=threads)
    else:
        raise ValueError("unknown method %r" % (method,))
    supset = set(sup.chambers)

    closed_form = None
    if kind == "A1":
        s = b.lam[0] // 2
        closed_form = sl2_solution(s)

    sub, prov = subset_for(group, b_exp, radius)
    subset_chambers = set(sub.chambers)

    # a certified chamber missing from the superset means the superset
    # budget was too small for this window
    truncated = (sup.flag("status") == "truncated"
                 or (closed_form is None
                     and not subset_chambers <= supset))
    empty_verdict = "EMPTY-at-budget" if truncated else "EMPTY"
    entries = []
    for g in sorted(rs.alcoves_within(radius), key=rs.sort_key):
        if closed_form is not None:
            if closed_form(_a1_index(rs, g)):
                entries.append((g, "NONEMPTY", "closed-form"))
            else:
                entries.append((g, empty_verdict, None))
            continue
        if g in subset_chambers:
            entries.append((g, "NONEMPTY", prov.get(g, ("seed",))[0]))
        elif g in supset:
            entries.append((g, "UNKNOWN", None))
        else:
            entries.append((g, empty_verdict, None))
    flags = {"method": method, "status": sup.flag("status"),
             "validated": sup.flag("validated"),
             "subset_partial": dict(sub.flags).get("status") == "partial"}
    vm = VerdictMap(group, tuple(b.lam), radius, tuple(entries),
                    tuple(sorted(flags.items())))
    return vm


def superset_halfinf(group, b_exp, p_max=9, q_max=60, radius=8, threads=1,
                     depth=None):
    """Superset via stabilized half-infinite tails instead of q-unions."""
    from concurrent.futures import ThreadPoolExecutor
    kind = GROUP_KIND[group]
    rs = root_system(kind)
    b = conjugacy_rep(kind, b_exp)
    lb = rs.length(rs.translation(b.lam))
    if depth is None:
        depth = 4 * radius + 2 * lb + 16
    jobs = []
    for w in range(len(rs.finite_weyl)):
        jobs.append(("I2", 1, w))
        for p in range(1, p_max + 1, 2):
            jobs.append(("I1", p, w))

    def run(job):
        cls, p, w = job
        try:
            tail = gallery.omega_tail(rs, cls, p, w, b, depth,
                                      q_budget=q_max)
        except RuntimeError:
            return None           # tail not stabilized within the q budget
        if tail is None:
            return set()
        return folding.fold_all(rs, tail)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    raw = set(conjugate_seeds(rs, b))
    status = "stable"
    for r in results:
        if r is None:
            status = "truncated"
        else:
            raw |= r
    flags = {"method": "halfinf", "status": status, "depth": depth,
             "validated": kind != "G2"}
    return _finish(rs, group, b, "Superset", radius, flags, raw)


def compare(a, bset):
    """Symmetric-difference report for two chamber sets."""
    if (a.group, a.b, a.window) != (bset.group, bset.b, bset.window):
        raise ValueError("chamber sets describe different windows")
    sa, sb = set(a.chambers), set(bset.chambers)
    return {
        "group": a.group, "b": list(a.b), "window": a.window,
        "only_first": sorted(sa - sb),
        "only_second": sorted(sb - sa),
        "common": len(sa & sb),
        "exact": sa == sb,
    }
