"""Command-line interface.

Exit codes: 0 success / property holds, 1 property violation (including
inputs that fail partial-cube recognition where one is required), 2 usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import convexity, harness
from .constructions import (
    AmalgamSpec,
    cartesian_product,
    expansion,
    gated_amalgam,
    gen,
    theta_contraction,
)
from .errors import (
    BoundExceededError,
    ConstructionError,
    DisconnectedGraphError,
    GraphFormatError,
    NotPartialCubeError,
)
from .graphs import Graph, induced_subgraph, parse_graph, serialize_graph
from .theta import cube_embedding, djokovic_violation, is_partial_cube


def _read_graph(path: str | None) -> Graph:
    if path is None or path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit_graph(g: Graph, out: str | None) -> None:
    text = serialize_graph(g)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_vertex_list(text: str) -> list:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ConstructionError(f"expected a comma-separated vertex list, got {text!r}")


def _parse_glue(text: str) -> dict:
    glue = {}
    for pair in text.split(","):
        pair = pair.strip()
        if not pair:
            continue
        try:
            a, b = pair.split(":")
            glue[int(a)] = int(b)
        except ValueError:
            raise ConstructionError(f"glue pairs look like '0:3,1:4', got {text!r}")
    return glue


def _cmd_gen(args) -> int:
    _emit_graph(gen(args.family, *args.params), args.output)
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args.file)
    what = args.what
    if what == "pc":
        witness = djokovic_violation(g)
        if witness is None:
            print("partial cube: true")
            return 0
        print(f"partial cube: false  witness: {json.dumps(witness)}")
        return 1
    if what == "att":
        bad = convexity.att_convexity_violation(g)
        if bad is None:
            print("att-convex: true")
            return 0
        print(
            "att-convex: false  copoint "
            f"K={sorted(bad.k)} att={sorted(bad.att)} at={bad.at}"
        )
        return 1
    if what == "ph":
        print(f"ph = {convexity.pre_hull_number(g)}")
        return 0
    # gated: audit the gate structure of the graph
    gated = harness._gated_masks(g, convexity.DEFAULT_ORACLE_BOUND)
    for vs in gated:
        if not convexity.is_convex(g, vs):
            print(f"gated set {sorted(vs)} is not convex")
            return 1
    print(f"gated sets: {len(gated)}, all convex")
    if is_partial_cube(g) and convexity.pre_hull_number(g) <= 1:
        for vs in gated:
            sub, _ = induced_subgraph(g, vs)
            if convexity.pre_hull_number(sub) > 1:
                print(f"gated subgraph {sorted(vs)} has ph > 1")
                return 1
        print("every gated subgraph keeps ph <= 1")
    return 0


def _cmd_product(args) -> int:
    g0 = _read_graph(args.file0)
    g1 = _read_graph(args.file1)
    _emit_graph(cartesian_product(g0, g1).graph, args.output)
    return 0


def _cmd_expand(args) -> int:
    g = _read_graph(args.file)
    v0, v1 = (_parse_vertex_list(t) for t in args.cover)
    _emit_graph(expansion(g, v0, v1).graph, args.output)
    return 0


def _cmd_contract(args) -> int:
    g = _read_graph(args.file)
    _emit_graph(theta_contraction(g, args.klass).graph, args.output)
    return 0


def _cmd_amalgam(args) -> int:
    g0 = _read_graph(args.file0)
    g1 = _read_graph(args.file1)
    spec = AmalgamSpec(g0, g1, _parse_glue(args.glue))
    _emit_graph(gated_amalgam(spec).graph, args.output)
    return 0


def _cmd_embed(args) -> int:
    g = _read_graph(args.file)
    emb = cube_embedding(g)
    sys.stdout.write(emb.serialize())
    return 0


def _cmd_verify(args) -> int:
    corpus = harness.enumerate_corpus(
        max_exhaustive_n=args.n,
        random_tier=(args.random_count, (7, 10), args.seed),
    )
    report = harness.run_all_checks(corpus, seed=args.seed)
    for check, results in sorted(report.by_check().items()):
        tally = {"pass": 0, "fail": 0, "skip": 0}
        for r in results:
            tally[r.status] += 1
        print(
            f"{check:34s} pass={tally['pass']:4d} fail={tally['fail']:3d} "
            f"skip={tally['skip']:3d}"
        )
    failures = report.failures()
    for r in failures:
        print(f"FAIL {r.check} on {r.graph_id}: {json.dumps(r.witness)}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    print(f"total: {report.counts()}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialcube",
        description="Geodesic convexity and partial-cube analysis for small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a named family instance")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("check", help="run one analysis on a graph file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--what", choices=("pc", "att", "ph", "gated"), default="pc")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("product", help="cartesian product of two graph files")
    p.add_argument("file0")
    p.add_argument("file1")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("expand", help="expansion along a proper cover")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--cover", nargs=2, required=True, metavar=("V0", "V1"))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("contract", help="collapse one relation class")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--class", dest="klass", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_contract)

    p = sub.add_parser("amalgam", help="gated amalgam of two graph files")
    p.add_argument("file0")
    p.add_argument("file1")
    p.add_argument("--glue", required=True, help="pairs like '0:3,1:4'")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_amalgam)

    p = sub.add_parser("embed", help="isometric binary labeling of a partial cube")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("verify", help="run the full verification harness")
    p.add_argument("--n", type=int, default=harness.DEFAULT_EXHAUSTIVE_N)
    p.add_argument("--seed", type=int, default=harness.DEFAULT_RANDOM_TIER[2])
    p.add_argument(
        "--random-count", type=int, default=harness.DEFAULT_RANDOM_TIER[0]
    )
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NotPartialCubeError as exc:
        print(f"not a partial cube: {json.dumps(exc.witness)}", file=sys.stderr)
        return 1
    except (
        GraphFormatError,
        ConstructionError,
        DisconnectedGraphError,
        BoundExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
