"""Rendering of chamber sets and verdict maps: SVG (one polygon per window
alcove) and a coarse ASCII fallback.  Output is deterministic: elements are
emitted in canonical alcove order and all coordinates are exact multiples
of 1/8, so formatting is platform independent."""

from __future__ import annotations

from .weyl import root_system
from .superset import GROUP_KIND, ChamberSet
from .solver import VerdictMap

FILL = {
    "NONEMPTY": "#4a8f5c",
    "EMPTY": "#ffffff",
    "EMPTY-at-budget": "#d9d9d9",
    "UNKNOWN": "#e8c547",
    "member": "#5b84b1",
    "other": "#ffffff",
}

GLYPH = {
    "NONEMPTY": "N",
    "EMPTY": ".",
    "EMPTY-at-budget": ",",
    "UNKNOWN": "?",
    "member": "#",
    "other": ".",
}


def _proj(kind, p):
    # exact eighths only
    if kind == "A1":
        return (p[0], 0)
    if kind == "A2":
        x, y = p[0] - p[1], p[1] - p[2]
        return (x + y / 2, y * 0.875)
    if kind == "C2":
        return ((p[0] + p[1]) / 2, (p[0] - p[1]) / 2)
    if kind == "G2":
        return (p[0] - p[1] / 2, p[1] * 0.875)
    raise ValueError(kind)


def _items(obj, radius):
    """(alcove, class-key) pairs in canonical order for the window."""
    rs = root_system(GROUP_KIND[obj.group])
    if radius is None:
        radius = obj.window
    if isinstance(obj, VerdictMap):
        verdicts = {g: v for g, v, _ in obj.entries}
        default = None
    else:
        members = set(obj.chambers)
        verdicts, default = None, None
    out = []
    for g in sorted(rs.alcoves_within(radius), key=rs.sort_key):
        if verdicts is not None:
            key = verdicts.get(g, "other")
        else:
            key = "member" if g in members else "other"
        out.append((g, key))
    return rs, out


def _polygon(rs, kind, g):
    pts = [_proj(kind, v) for v in rs.alcove_vertices(g)]
    if kind == "A1":
        (a, _), (b, _) = pts
        pts = [(a, 0), (b, 0), (b, 2), (a, 2)]
    return pts


def _fmt(x):
    s = "%.3f" % (float(x),)
    return s.rstrip("0").rstrip(".") or "0"


def render_svg(obj, radius=None, unit=12):
    rs, items = _items(obj, radius)
    kind = GROUP_KIND[obj.group]
    polys = [( _polygon(rs, kind, g), key) for g, key in items]
    xs = [x for pts, _ in polys for x, _ in pts]
    ys = [y for pts, _ in polys for _, y in pts]
    x0, y0 = min(xs), min(ys)
    w = (max(xs) - x0) * unit + 2 * unit
    h = (max(ys) - y0) * unit + 2 * unit
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %s %s">'
        % (_fmt(w), _fmt(h)),
    ]
    for pts, key in polys:
        coords = " ".join(
            "%s,%s" % (_fmt((x - x0) * unit + unit),
                       _fmt(h - ((y - y0) * unit + unit)))
            for x, y in pts)
        lines.append(
            '<polygon points="%s" fill="%s" stroke="#333" stroke-width="0.6"/>'
            % (coords, FILL[key]))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_ascii(obj, radius=None):
    rs, items = _items(obj, radius)
    kind = GROUP_KIND[obj.group]
    cells = {}
    for g, key in items:
        x, y = _proj(kind, rs.barycenter(g))
        col = int(round(2 * x / rs.scale * 3))
        row = int(round(2 * y / rs.scale * 3))
        cells[(row, col)] = GLYPH[key]
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    r0, c0 = rows[0], cols[0]
    grid = [[" "] * (cols[-1] - c0 + 1) for _ in range(rows[-1] - r0 + 1)]
    for (r, c), ch in cells.items():
        grid[r - r0][c - c0] = ch
    body = "\n".join("".join(line) for line in reversed(grid))
    legend = "legend: N nonempty  ? unknown  . empty  , empty-at-budget  # member"
    return body + "\n" + legend + "\n"
