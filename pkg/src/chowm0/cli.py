"""chowm0 command line.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import chowring
from .classes import chern_classes, chern_roots, mumford_k, normal_top_chern, UnsupportedStratum
from .deformations import ordered_deformations, quotient_by_source, quotient_by_target
from .extension import extend_class, restrict_pushforward, NotInvariant
from .polycore import PolynomialParseError
from .strata import StratumRing, stratum_generators, ring_of, verify_generators_and_relation
from .trees import (STRATUM_NAMES, MultiplicityTooHigh, TreeParseError, canonical_encode,
                    enumerate_trees, parse_tree)


class UsageError(Exception):
    pass


def default_degree(fallback: int = 10) -> int:
    raw = os.environ.get("CHOWM0_MAX_DEGREE")
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CHOWM0_MAX_DEGREE must be an integer, got {raw!r}")


def _tree(text):
    return parse_tree(text)


def _ring(text) -> StratumRing:
    return ring_of(parse_tree(text))


def _emit(out, args, data, lines):
    if getattr(args, "json", False):
        out.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


# -- subcommands ----------------------------------------------------------

def cmd_trees_list(args, out):
    trees = enumerate_trees(args.max_edges, args.max_multiplicity)
    data = [{"encoding": canonical_encode(t), "edges": t.n_edges, "tree": t.to_text()} for t in trees]
    _emit(out, args, data, [d["encoding"] for d in data])
    return 0


def cmd_deform_count(args, out):
    target, source = _tree(args.target), _tree(args.source)
    defs = ordered_deformations(target, source)
    data = {"count": len(defs), "maps": [list(d.vertex_map) for d in defs]}
    lines = [str(len(defs))]
    if args.classes:
        split = quotient_by_source if args.classes == "source" else quotient_by_target
        classes = split(defs)
        sizes = [len(c) for c in classes]
        data["classes"] = {"kind": args.classes, "count": len(classes), "sizes": sizes,
                           "members": [[list(d.vertex_map) for d in c] for c in classes]}
        lines.append(f"classes={len(classes)} sizes={','.join(map(str, sizes))}")
    _emit(out, args, data, lines)
    return 0


def cmd_stratum_ring(args, out):
    S = _ring(args.tree)
    D = args.degree if args.degree is not None else default_degree()
    molien = S.molien_series(D)
    data = {"stratum": S.label or S.tree.to_text(), "variables": list(S.variables),
            "degrees": list(S.degrees), "group_order": S.order, "molien": molien}
    lines = [f"variables: {' '.join(S.variables)}",
             f"group order: {S.order}",
             f"molien 0..{D}: {' '.join(map(str, molien))}"]
    status = 0
    if S.label in STRATUM_NAMES:
        gens, rels = stratum_generators(S.label)
        rep = verify_generators_and_relation(S, gens, rels, D, strict=False)
        data["generators"] = [str(g) for g in gens]
        data["relations"] = [str(r) for r in rels]
        data["verified"] = rep.passed
        lines += [f"generators: {', '.join(str(g) for g in gens)}",
                  f"relations: {', '.join(str(r) for r in rels) or 'none'}"]
        lines += rep.text().splitlines()
        status = 0 if rep.passed else 1
    _emit(out, args, data, lines)
    return status


def _tuple_data(t):
    return {"degree": t.degree, "entries": {k: str(t[k]) for k in STRATUM_NAMES}}


def _tuple_lines(t):
    return [f"degree {t.degree}"] + [f"{k}: {t[k]}" for k in STRATUM_NAMES]


def cmd_class_gamma(args, out):
    S = _ring(args.tree)
    if args.restrict:
        T = _ring(args.restrict)
        val = restrict_pushforward(1, S, T)
        data = {"stratum": args.tree, "restrict": args.restrict, "value": str(val)}
    else:
        val = normal_top_chern(S)
        data = {"stratum": args.tree, "value": str(val)}
    _emit(out, args, data, [str(val)])
    return 0


def cmd_class_mumford(args, out):
    if args.m < 1:
        raise UsageError("m must be positive")
    val = mumford_k(_ring(args.stratum), args.m)
    _emit(out, args, {"m": args.m, "stratum": args.stratum, "value": str(val)}, [str(val)])
    return 0


def cmd_class_chern(args, out):
    S = _ring(args.stratum)
    cs = chern_classes(S)
    data = {"stratum": args.stratum, "c": [str(c) for c in cs]}
    lines = [f"c{i}: {c}" for i, c in enumerate(cs, 1)]
    if not S.is_point:
        roots = chern_roots(S)
        data["roots"] = [str(r) for r in roots]
        lines.insert(0, "roots: " + ", ".join(str(r) for r in roots))
    _emit(out, args, data, lines)
    return 0


def cmd_class_extend(args, out):
    S = _ring(args.stratum)
    t = extend_class(S.parse(args.poly), S)
    _emit(out, args, _tuple_data(t), _tuple_lines(t))
    return 0


def _report_out(out, args, rep):
    if getattr(args, "json", False):
        out.write(json.dumps({"title": rep.title, "passed": rep.passed,
                              "lines": [l.text() for l in rep.lines], "notes": rep.notes}, indent=2) + "\n")
    else:
        out.write(rep.text() + "\n")
    return 0 if rep.passed else 1


def cmd_verify_theorem(args, out):
    D = args.degree if args.degree is not None else default_degree()
    P = chowring.corrected_presentation(D) if args.corrected else chowring.theorem_presentation()
    rep = chowring.verify_presentation(P, D, strict=False)
    return _report_out(out, args, rep)


def cmd_verify_json(args, out):
    D = args.degree if args.degree is not None else default_degree()
    with open(args.file) if args.file != "-" else sys.stdin as fh:
        P = chowring.Presentation.from_json(fh.read())
    rep = chowring.verify_presentation(P, D, strict=False)
    return _report_out(out, args, rep)


def cmd_presentation(args, out):
    if args.corrected:
        if args.max_nodes != 3:
            raise UsageError("--corrected applies to --max-nodes 3 only")
        D = args.degree if args.degree is not None else default_degree()
        P = chowring.corrected_presentation(D)
    else:
        P = chowring.presentation(args.max_nodes)
    if args.json:
        out.write(P.to_json() + "\n")
    else:
        out.write(P.title + "\n")
        out.write("generators: " + ", ".join(f"{n}({d})" for n, d in zip(P.names, P.degrees)) + "\n")
        for k, r in enumerate(P.relations, 1):
            out.write(f"relation {k}: {r}\n")
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chowm0", description="Chow ring of rational nodal curves with at most three nodes")
    sub = p.add_subparsers(dest="command", required=True)

    trees = sub.add_parser("trees").add_subparsers(dest="action", required=True)
    tl = trees.add_parser("list")
    tl.add_argument("--max-edges", type=int, default=3)
    tl.add_argument("--max-multiplicity", type=int, default=None)
    tl.add_argument("--json", action="store_true")
    tl.set_defaults(func=cmd_trees_list)

    deform = sub.add_parser("deform").add_subparsers(dest="action", required=True)
    dc = deform.add_parser("count")
    dc.add_argument("target")
    dc.add_argument("source")
    dc.add_argument("--classes", choices=["source", "target"])
    dc.add_argument("--json", action="store_true")
    dc.set_defaults(func=cmd_deform_count)

    stratum_p = sub.add_parser("stratum").add_subparsers(dest="action", required=True)
    sr = stratum_p.add_parser("ring")
    sr.add_argument("tree")
    sr.add_argument("--degree", type=int)
    sr.add_argument("--json", action="store_true")
    sr.set_defaults(func=cmd_stratum_ring)

    cls = sub.add_parser("class").add_subparsers(dest="action", required=True)
    cg = cls.add_parser("gamma")
    cg.add_argument("tree")
    cg.add_argument("--restrict")
    cg.add_argument("--json", action="store_true")
    cg.set_defaults(func=cmd_class_gamma)
    cm = cls.add_parser("mumford")
    cm.add_argument("m", type=int)
    cm.add_argument("--stratum", required=True)
    cm.add_argument("--json", action="store_true")
    cm.set_defaults(func=cmd_class_mumford)
    cc = cls.add_parser("chern")
    cc.add_argument("--stratum", required=True)
    cc.add_argument("--json", action="store_true")
    cc.set_defaults(func=cmd_class_chern)
    ce = cls.add_parser("extend")
    ce.add_argument("--stratum", required=True)
    ce.add_argument("--poly", required=True)
    ce.add_argument("--json", action="store_true")
    ce.set_defaults(func=cmd_class_extend)

    ver = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    vt = ver.add_parser("theorem")
    vt.add_argument("--degree", type=int)
    vt.add_argument("--corrected", action="store_true",
                    help="use the relation list repaired and completed by linear algebra")
    vt.add_argument("--json", action="store_true")
    vt.set_defaults(func=cmd_verify_theorem)
    vj = ver.add_parser("json")
    vj.add_argument("file", help="presentation JSON, or - for stdin")
    vj.add_argument("--degree", type=int)
    vj.add_argument("--json", action="store_true")
    vj.set_defaults(func=cmd_verify_json)

    pr = sub.add_parser("presentation")
    pr.add_argument("--max-nodes", type=int, choices=[1, 2, 3], default=3)
    pr.add_argument("--corrected", action="store_true")
    pr.add_argument("--degree", type=int)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_presentation)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args, out)
    except (TreeParseError, PolynomialParseError) as exc:
        err.write(f"chowm0: parse error at position {exc.position}: expected {exc.expected}\n")
        return 2
    except (UsageError, UnsupportedStratum, MultiplicityTooHigh, NotInvariant, ValueError, OSError) as exc:
        err.write(f"chowm0: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
