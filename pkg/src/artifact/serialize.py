"""Canonical JSON for chamber sets and verdict maps.

The encoding is deterministic: sorted keys, fixed separators, sorted body,
ASCII only.  Equal objects serialize to identical bytes regardless of how
(or on how many threads) they were computed.
"""

from __future__ import annotations

import json

from .weyl import root_system
from .superset import GROUP_KIND, ChamberSet
from .solver import VerdictMap


def _rs_for(group):
    return root_system(GROUP_KIND[group])


def _alcove_obj(rs, g):
    lam, w = g
    return {"translation": list(lam), "finite": rs.w_names[w]}


def _alcove_from(rs, obj):
    w = rs.w_names.index(obj["finite"])
    return (tuple(obj["translation"]), w)


def _dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True)


def serialize(obj):
    """Canonical JSON string for a ChamberSet or VerdictMap."""
    if isinstance(obj, ChamberSet):
        rs = _rs_for(obj.group)
        header = {"group": obj.group, "b": list(obj.b), "kind": obj.kind,
                  "window": obj.window,
                  "flags": {str(k): v for k, v in obj.flags}}
        body = [_alcove_obj(rs, g) for g in obj.chambers]
        return _dumps({"header": header, "body": body})
    if isinstance(obj, VerdictMap):
        rs = _rs_for(obj.group)
        header = {"group": obj.group, "b": list(obj.b),
                  "kind": "Exact" if obj.exact else "Verdict",
                  "window": obj.window,
                  "flags": {str(k): v for k, v in obj.flags}}
        body = []
        for g, v, prov in obj.entries:
            item = _alcove_obj(rs, g)
            item["verdict"] = v
            if prov is not None:
                item["provenance"] = prov
            body.append(item)
        return _dumps({"header": header, "body": body})
    raise TypeError("cannot serialize %r" % (type(obj).__name__,))


def deserialize(text):
    """Inverse of serialize; the round trip is lossless."""
    doc = json.loads(text)
    header, body = doc["header"], doc["body"]
    group = header["group"]
    rs = _rs_for(group)
    flags = tuple(sorted(header["flags"].items()))
    if header["kind"] in ("Superset", "Subset"):
        chambers = tuple(_alcove_from(rs, it) for it in body)
        return ChamberSet(group, tuple(header["b"]), header["kind"],
                          header["window"], flags, chambers)
    entries = []
    for it in body:
        g = _alcove_from(rs, it)
        entries.append((g, it["verdict"], it.get("provenance")))
    return VerdictMap(group, tuple(header["b"]), header["window"],
                      tuple(entries), flags)
