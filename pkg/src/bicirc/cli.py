"""Command line entry points.

    bicirc search --d 6 --max-order 50 --twice-odd
    bicirc analyze --named petersen_complement
    bicirc verify-s5
    bicirc classify-circulant 6 1,2,4,5
    bicirc coset-roundtrip --graph petersen_complement
    bicirc named clebsch --graph6
    bicirc coverage --max-n 30
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import census, circulant, coset, section5
from .bicirculant import in_family_F, named_graph, primitive_case_check
from .graph import Graph, from_json, graph6_decode, graph6_encode
from .perm import DEFAULT_ELEMENT_CAP, CapExceeded
from .symmetry import (
    all_minimal_block_systems,
    is_arc_transitive,
    is_edge_transitive,
    is_vertex_transitive,
    search_automorphisms,
)

log = logging.getLogger("bicirc")


def _load_graph(args) -> Graph:
    if args.named:
        return named_graph(args.named)
    if args.graph6:
        return graph6_decode(args.graph6)
    if args.json:
        return from_json(Path(args.json).read_text())
    raise SystemExit("give one of --named, --graph6 or --json")


def cmd_search(args) -> int:
    job = census.CensusJob(
        d=args.d, max_order=args.max_order, twice_odd=args.twice_odd,
        jobs=args.jobs, element_cap=args.element_cap, all_records=args.all_records,
    )
    result = census.search(job)
    fmt = args.format or (Path(args.out).suffix.lstrip(".") if args.out else "json")
    text = result.to_csv() if fmt == "csv" else result.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    for c in result.classes:
        line = f"class {c['class_id']}: {c['representative']} order={c['order']} |Aut|={c['aut_order']}"
        if args.graph6:
            line += " " + graph6_encode(named_graph(c["representative"]))
        print(line, file=sys.stderr)
    print(f"{len(result.classes)} edge-transitive class(es); counts {result.counts['total']}",
          file=sys.stderr)
    if result.undecided and not args.allow_undecided:
        return 2
    return 0


def analyze_graph(g: Graph, d: int | None = None, cap: int = DEFAULT_ELEMENT_CAP) -> dict:
    search = search_automorphisms(g)
    G = search.group(cap)
    report = {
        "n": g.n,
        "edges": g.edge_count,
        "valence": g.valence(),
        "aut_order": search.order,
        "vertex_transitive": is_vertex_transitive(g, G),
        "edge_transitive": is_edge_transitive(g, G),
        "arc_transitive": is_arc_transitive(g, G),
    }
    if report["vertex_transitive"]:
        systems = all_minimal_block_systems(G)
        report["primitive"] = not systems
        report["minimal_block_systems"] = [
            [sorted(c) for c in s.blocks.canonical()] for s in systems
        ]
    d = d if d is not None else g.valence()
    if d is not None:
        try:
            w = in_family_F(g, d, cap)
            report["family_witness"] = None if w is None else {
                "rho": w.rho.cycle_str(), "cycle_orbit": list(w.cycle_orbit),
            }
        except CapExceeded as exc:
            report["family_witness"] = f"undecided: {exc}"
    report["primitive_case_check"] = primitive_case_check(g)
    return report


def cmd_analyze(args) -> int:
    try:
        g = _load_graph(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(analyze_graph(g, args.d, args.element_cap), indent=1))
    return 0


def cmd_verify_s5(args) -> int:
    report = section5.run_section5()
    if args.json:
        print(section5.report_json(report))
    passed = sum(c["pass"] for c in report["claims"])
    for c in report["claims"]:
        print(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['claim']}", file=sys.stderr)
    print(f"{passed}/{len(report['claims'])} claims pass", file=sys.stderr)
    return 0 if passed == len(report["claims"]) else 1


def cmd_classify(args) -> int:
    S = tuple(int(t) for t in args.S.split(","))
    sym = circulant.CirculantSymbol(args.n, S)
    try:
        rep = circulant.classify_arc_transitive_circulant(sym)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(rep.as_dict(), indent=1))
    return 0


def cmd_coset_roundtrip(args) -> int:
    g = named_graph(args.graph)
    G = search_automorphisms(g).group(args.element_cap)
    rt = coset.coset_roundtrip(g, G, v=args.vertex)
    print(json.dumps({
        "graph": args.graph,
        "isomorphic": rt.isomorphic,
        "valence_formula": rt.valence_formula,
        "valence_graph": rt.valence_graph,
        "g": rt.spec.g.cycle_str(),
        "H_order": rt.spec.H.order,
    }, indent=1))
    print(f"isomorphic: {str(rt.isomorphic).lower()}", file=sys.stderr)
    return 0 if rt.isomorphic else 1


def cmd_named(args) -> int:
    g = named_graph(args.name)
    if args.graph6:
        print(graph6_encode(g))
    else:
        print(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}))
    return 0


def cmd_coverage(args) -> int:
    rep = circulant.exhaustive_case_coverage(args.max_n, bound=args.bound)
    text = rep.to_csv() if args.format == "csv" else rep.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{len(rep.rows)} circulants, {len(rep.unclassified)} without a case",
          file=sys.stderr)
    return 0 if not rep.unclassified else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicirc", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="census of edge-transitive graphs in F(d)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--max-order", type=int, required=True)
    par = s.add_mutually_exclusive_group()
    par.add_argument("--twice-odd", dest="twice_odd", action="store_true", default=True)
    par.add_argument("--all-parities", dest="twice_odd", action="store_false")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
    s.add_argument("--out")
    s.add_argument("--format", choices=["csv", "json"])
    s.add_argument("--graph6", action="store_true", help="print class representatives in graph6")
    s.add_argument("--all-records", action="store_true", help="also list pruned symbols")
    s.add_argument("--allow-undecided", action="store_true",
                   help="exit 0 even when some symbols stayed undecided")
    s.set_defaults(func=cmd_search)

    a = sub.add_parser("analyze", help="symmetry report for one graph")
    a.add_argument("--named")
    a.add_argument("--graph6")
    a.add_argument("--json", help="edge-list JSON file")
    a.add_argument("--d", type=int)
    a.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-s5", help="the A5/S5 five-cycle checks")
    v.add_argument("--json", action="store_true", help="print the full JSON report")
    v.set_defaults(func=cmd_verify_s5)

    c = sub.add_parser("classify-circulant", help="case analysis of an arc-transitive circulant")
    c.add_argument("n", type=int)
    c.add_argument("S", help="comma separated connection set")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("coset-roundtrip", help="rebuild a graph as a coset graph")
    r.add_argument("--graph", required=True)
    r.add_argument("--vertex", type=int, default=0)
    r.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
    r.set_defaults(func=cmd_coset_roundtrip)

    nm = sub.add_parser("named", help="print a named graph")
    nm.add_argument("name")
    nm.add_argument("--graph6", action="store_true")
    nm.set_defaults(func=cmd_named)

    cv = sub.add_parser("coverage", help="classify all arc-transitive circulants up to n")
    cv.add_argument("--max-n", type=int, default=30)
    cv.add_argument("--bound", type=int, default=30)
    cv.add_argument("--format", choices=["csv", "json"], default="csv")
    cv.add_argument("--out")
    cv.set_defaults(func=cmd_coverage)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
