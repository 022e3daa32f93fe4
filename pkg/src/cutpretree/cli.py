"""Command-line front end.

Exit codes: 0 ok, 1 cut family violates a condition, 2 input or parse error,
3 internal consistency failure, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import io
from .actions import Automorphism, induce, permutation_as_labels, verify_equivariance
from .cuts import CutSystem, articulation_cuts, validate
from .errors import AxiomViolation, ConsistencyError, InputError, ResourceError
from .fixtures import FIXTURES
from .oracles import compare_with_block_cut_tree, random_connected_graph
from .pretree import Pretree, median
from .theorems import run_all
from .tree import export, realize

EXIT_OK, EXIT_AXIOM, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_ORACLE = 0, 1, 2, 3, 4


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _load_system_inputs(args):
    space = io.read_graph(args.graph)
    if args.gen == "articulation":
        cuts = articulation_cuts(space)
    elif args.cuts:
        cuts = io.read_cuts(args.cuts)
    else:
        raise InputError("give --cuts FILE or --gen articulation")
    return space, cuts


def _build_pretree(args) -> Pretree:
    space, cuts = _load_system_inputs(args)
    p = Pretree(CutSystem.build(space, cuts), checked=getattr(args, "checked", False))
    if getattr(args, "checked", False):
        failures = {k: v for k, v in run_all(p, natural_orders=len(p) <= 15).items() if v}
        if failures:
            raise ConsistencyError(f"theorem checks failed: {sorted(failures)}")
    return p


def cmd_verify(args) -> int:
    space, cuts = _load_system_inputs(args)
    report = validate(space, cuts)
    _emit(report.to_dict(), args.json, report.summary())
    return EXIT_OK if report.ok else EXIT_AXIOM


def cmd_build(args) -> int:
    p = _build_pretree(args)
    print(json.dumps(p.to_dict(betweenness=args.betweenness), indent=2))
    return EXIT_OK


def cmd_tree(args) -> int:
    p = _build_pretree(args)
    sys.stdout.write(export(realize(p, verify=True), args.format))
    return EXIT_OK


def cmd_median(args) -> int:
    p = _build_pretree(args)
    picks = [p.find(s.split(",")) for s in args.selectors]
    m = median(p, *picks)
    _emit({"median": {"kind": m.kind.value, "support": list(map(str, m.support.members))}},
          args.json, m.label())
    return EXIT_OK


def cmd_act(args) -> int:
    p = _build_pretree(args)
    g = Automorphism.from_mapping(p.system, io.read_permutation(args.perm))
    perm = induce(p, g)
    report = verify_equivariance(p, g)
    out = {"permutation": permutation_as_labels(perm), "equivariant": report.ok}
    text = "\n".join(f"{k} -> {v}" for k, v in out["permutation"].items())
    _emit(out, args.json, text + f"\nequivariant: {report.ok}")
    if not report.ok:
        raise ConsistencyError("induced map does not preserve betweenness or tree edges")
    return EXIT_OK


def cmd_oracle_blockcut(args) -> int:
    graphs = []
    if args.graph:
        graphs.append(("input", io.read_graph(args.graph)))
    if args.random:
        rng = random.Random(args.seed)
        for i in range(args.random):
            n = rng.randint(args.min_n, args.max_n)
            graphs.append((f"random-{i}", random_connected_graph(rng, n, rng.choice([0.05, 0.15, 0.3]))))
    if not graphs:
        raise InputError("give a GRAPH file and/or --random N")
    rows = []
    for name, space in graphs:
        cmp = compare_with_block_cut_tree(space)
        rows.append({"graph": name, "vertices": len(space), "match": cmp.ok, "diff": cmp.diff})
    mismatches = [r for r in rows if not r["match"]]
    text = "\n".join(f"{r['graph']}: {'match' if r['match'] else 'MISMATCH ' + json.dumps(r['diff'])}"
                     for r in rows)
    text += f"\n{len(rows) - len(mismatches)}/{len(rows)} match"
    _emit({"results": rows, "mismatches": len(mismatches)}, args.json, text)
    return EXIT_ORACLE if mismatches else EXIT_OK


def cmd_fixtures(args) -> int:
    if not args.out:
        for f in FIXTURES.values():
            status = "valid" if f.valid else f"fails condition {f.failing_condition}"
            print(f"{f.name}: {len(f.space)} vertices, {len(f.cuts)} cuts, {status}")
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for f in FIXTURES.values():
        (out / f"{f.name}.graph.json").write_text(io.graph_to_json(f.space))
        (out / f"{f.name}.cuts.json").write_text(io.cuts_to_json(f.cuts))
    print(f"wrote {2 * len(FIXTURES)} files to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutpretree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p):
        p.add_argument("graph", help="graph file (JSON or edge list)")
        p.add_argument("--cuts", help="cut family JSON file")
        p.add_argument("--gen", choices=["articulation"], help="generate the cut family")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--checked", action="store_true",
                       help="recompute betweenness from definitions and run all theorem checks")

    p = sub.add_parser("verify", help="check the three admissibility conditions")
    system_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", help="emit the pretree elements as JSON")
    system_args(p)
    p.add_argument("--betweenness", action="store_true", help="include every (x, b, c) with x in (b, c)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("tree", help="export the realized tree")
    system_args(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("median", help="median of three elements given by their supports")
    system_args(p)
    p.add_argument("selectors", nargs=3, help="comma-joined vertex lists, e.g. a,b")
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("act", help="transport a graph automorphism to the pretree")
    system_args(p)
    p.add_argument("--perm", required=True, help="JSON object mapping vertex to vertex")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("oracle-blockcut", help="compare against the classical block-cut tree")
    p.add_argument("graph", nargs="?")
    p.add_argument("--random", type=int, default=0, help="number of random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_blockcut)

    p = sub.add_parser("fixtures", help="list the bundled fixtures or write them to a directory")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AxiomViolation as exc:
        print(exc.report.summary(), file=sys.stderr)
        return EXIT_AXIOM
    except (InputError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
