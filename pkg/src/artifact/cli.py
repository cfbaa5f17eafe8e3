"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 computation error,
3 budget truncation under --strict.
"""

from __future__ import annotations

import argparse
import sys

from .superset import (GROUP_KIND, superset_classes, superset_complete)
from .subset import kr_seed, subset_for
from . import solver
from .solver import solve, superset_halfinf, compare, sl2_solution, sl2_inverse
from .serialize import serialize, deserialize
from .render import render_svg, render_ascii

GROUPS = sorted(GROUP_KIND)


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % (message,))
        sys.exit(1)


def _parse_b(text, group):
    parts = [int(x) for x in text.split(",")]
    return tuple(parts)


def _zero_b(group):
    dims = {"A1": 1, "A2": 3, "C2": 2, "G2": 2}
    return tuple(0 for _ in range(dims[GROUP_KIND[group]]))


def _load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            k, _, v = line.partition("=")
            out[k.strip()] = v.strip()
    return out


def _apply_config(args, cfg):
    # config supplies defaults; explicit flags win
    casts = {"radius": int, "pmax": int, "qmax": int, "depbudget": int,
             "threads": int, "b": str, "method": str, "format": str,
             "group": str, "strict": lambda v: v.lower() in ("1", "true")}
    for k, v in cfg.items():
        if k not in casts:
            raise ValueError("unknown config key %r" % (k,))
        if k in args._explicit:
            continue
        setattr(args, k, casts[k](v))


def build_parser():
    p = Parser(prog="adlv", description="Nonemptiness of affine "
               "Deligne-Lusztig sets for split rank <= 2 groups.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, need_group=True):
        if need_group:
            sp.add_argument("--group", choices=GROUPS, default="sl3")
            sp.add_argument("--b", default=None,
                            help="dominant exponents, comma separated")
        sp.add_argument("--radius", type=int, default=8)
        sp.add_argument("--pmax", type=int, default=9)
        sp.add_argument("--qmax", type=int, default=25)
        sp.add_argument("--depbudget", type=int, default=None)
        sp.add_argument("--method", choices=["classes", "complete",
                                             "halfinf"], default="classes")
        sp.add_argument("--format", choices=["json", "svg", "ascii"],
                        default="json")
        sp.add_argument("--out", default=None)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--seed-only", dest="seed_only", action="store_true")
        sp.add_argument("--config", default=None)
        sp.add_argument("--strict", action="store_true")

    for name in ("solve", "superset", "subset", "compare", "fold", "render"):
        sp = sub.add_parser(name)
        common(sp)
        if name == "fold":
            sp.add_argument("labels", help="gallery word, comma separated")
        if name == "render":
            sp.add_argument("input", nargs="?", default=None,
                            help="serialized JSON file; computed if omitted")
    sp = sub.add_parser("sl2-table")
    sp.add_argument("--smax", type=int, default=4)
    sp.add_argument("--imax", type=int, default=9)
    sp.add_argument("--out", default=None)
    return p


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render(obj, fmt, radius=None):
    if fmt == "json":
        return serialize(obj)
    if fmt == "svg":
        return render_svg(obj, radius=radius)
    return render_ascii(obj, radius=radius)


def _superset(args, b):
    if args.method == "classes":
        return superset_classes(args.group, b, p_max=args.pmax,
                                q_max=args.qmax, radius=args.radius,
                                threads=args.threads)
    if args.method == "complete":
        return superset_complete(args.group, b, radius=args.radius,
                                 dep_budget=args.depbudget,
                                 threads=args.threads)
    return superset_halfinf(args.group, b, p_max=args.pmax,
                            q_max=args.qmax, radius=args.radius,
                            threads=args.threads)


def main(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    args._explicit = {a.lstrip("-").split("=")[0].replace("-", "_")
                      for a in argv if a.startswith("--")}
    try:
        if getattr(args, "config", None):
            _apply_config(args, _load_config(args.config))

        if args.cmd == "sl2-table":
            lines = []
            for s in range(args.smax + 1):
                member = sl2_solution(s)
                row = [str(i) for i in range(-args.imax, args.imax + 1)
                       if member(i)]
                lines.append("s=%d: %s" % (s, " ".join(row)))
            for i in range(args.imax + 1):
                lines.append("i=%d: s in {%s}" % (
                    i, ",".join(str(s) for s in sorted(sl2_inverse(i)))))
            _emit("\n".join(lines) + "\n", args.out)
            return 0

        b = (_parse_b(args.b, args.group) if args.b
             else _zero_b(args.group))

        if args.cmd == "solve":
            vm = solve(args.group, b, radius=args.radius, p_max=args.pmax,
                       q_max=args.qmax, method=args.method,
                       threads=args.threads, dep_budget=args.depbudget)
            _emit(_render(vm, args.format), args.out)
            if args.strict and vm.flag("status") == "truncated":
                return 3
            return 0

        if args.cmd == "superset":
            cs = _superset(args, b)
            _emit(_render(cs, args.format), args.out)
            if args.strict and cs.flag("status") == "truncated":
                return 3
            return 0

        if args.cmd == "subset":
            if args.seed_only:
                cs, _ = kr_seed(args.group, args.radius, b)
            else:
                cs, _ = subset_for(args.group, b, args.radius)
            _emit(_render(cs, args.format), args.out)
            return 0

        if args.cmd == "compare":
            sup = _superset(args, b)
            sub, _ = subset_for(args.group, b, args.radius)
            rep = compare(sup, sub)
            import json
            _emit(json.dumps(rep, sort_keys=True, indent=1) + "\n", args.out)
            if args.strict and sup.flag("status") == "truncated":
                return 3
            return 0

        if args.cmd == "fold":
            from .weyl import root_system
            from .gallery import GalleryType
            from .folding import fold_all
            rs = root_system(GROUP_KIND[args.group])
            word = tuple(int(x) for x in args.labels.split(","))
            if any(not 0 <= c <= rs.rank for c in word):
                raise ValueError("labels must be cotypes 0..%d" % rs.rank)
            ends = fold_all(rs, GalleryType(rs.identity, word))
            names = rs.w_names
            lines = ["%s %s" % (",".join(str(x) for x in g[0]), names[g[1]])
                     for g in sorted(ends, key=rs.sort_key)]
            _emit("\n".join(lines) + "\n", args.out)
            return 0

        if args.cmd == "render":
            if args.input:
                with open(args.input) as fh:
                    obj = deserialize(fh.read())
                fmt = args.format if args.format != "json" else "svg"
                _emit(_render(obj, fmt), args.out)
            else:
                vm = solve(args.group, b, radius=args.radius,
                           p_max=args.pmax, q_max=args.qmax,
                           method=args.method, threads=args.threads)
                fmt = args.format if args.format != "json" else "svg"
                _emit(_render(vm, fmt), args.out)
            return 0

        parser.error("unknown command")
    except (ValueError, RuntimeError, OSError, KeyError) as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
