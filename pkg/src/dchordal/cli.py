"""Command-line interface: ``dchordal {recognize,color,check,gen,reduce,bench}``.

Every command except ``bench`` prints one JSON object on
stdout. Exit status is 0 for a positive verdict, 1 for a negative one and
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import dimacs
from .bench import benchmark
from .coloring import three_color, three_color_checked, validate_coloring
from .errors import Disconnected, GraphError, NotApplicable
from .generators import Family, GenSpec, generate, reduce_3col_to_4col
from .graph import Graph, components, induced_subgraph, is_connected

POSITIVE = {"dually_chordal", "colorable", "holds", "generated", "reduced"}


@dataclass
class RunResult:
    command: str
    input: str
    verdict: str
    colors: Optional[dict[int, int]] = None
    report: dict = field(default_factory=dict)
    timing_ms: Optional[float] = None
    seed: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict in POSITIVE else 1


def write_result(r: RunResult) -> str:
    out = {"command": r.command, "input": r.input, "verdict": r.verdict}
    if r.colors is not None:
        out["colors"] = {str(v): c for v, c in sorted(r.colors.items())}
    if r.report:
        out["report"] = r.report
    out["timing_ms"] = None if r.timing_ms is None else round(r.timing_ms, 3)
    out["seed"] = r.seed
    return json.dumps(out)


def _colors_1based(colors) -> dict[int, int]:
    return {v + 1: c for v, c in enumerate(colors)}


def cmd_recognize(args) -> RunResult:
    from .recognition import find_mno

    G = dimacs.read_dimacs(args.file)
    t0 = time.perf_counter()
    mno = find_mno(G)
    ms = (time.perf_counter() - t0) * 1e3
    if mno is None:
        return RunResult("recognize", args.file, "not_dually_chordal",
                         report={"detail": "no maximum neighbourhood ordering"}, timing_ms=ms)
    report = {
        "order": [v + 1 for v in mno.order],
        "max_neighbour": [u + 1 for u in mno.witness],
    }
    return RunResult("recognize", args.file, "dually_chordal", report=report, timing_ms=ms)


def _color_one(G: Graph, unchecked: bool):
    return three_color(G) if unchecked else three_color_checked(G)


def cmd_color(args) -> RunResult:
    G = dimacs.read_dimacs(args.file)
    parts = [list(range(G.n))]
    if args.per_component and not is_connected(G):
        parts = components(G)
    colors = [0] * G.n
    ms = 0.0
    for part in parts:
        H, index_map = induced_subgraph(G, part) if len(parts) > 1 else (G, part)
        t0 = time.perf_counter()
        try:
            c = _color_one(H, args.unchecked)
        except NotApplicable as e:
            ms += (time.perf_counter() - t0) * 1e3
            report = {"detail": str(e), "vertex": index_map[e.witness] + 1}
            return RunResult("color", args.file, "not_applicable", report=report, timing_ms=ms)
        ms += (time.perf_counter() - t0) * 1e3
        if c is None:
            return RunResult("color", args.file, "not_3_colorable", timing_ms=ms)
        for i, v in enumerate(index_map):
            colors[v] = c.colors[i]
    assert validate_coloring(G, colors, 3)
    return RunResult("color", args.file, "colorable", colors=_colors_1based(colors), timing_ms=ms)


def cmd_check(args) -> RunResult:
    from . import checks

    G = dimacs.read_dimacs(args.file)
    t0 = time.perf_counter()
    verdict, report = checks.run_check(G, args.property)
    ms = (time.perf_counter() - t0) * 1e3
    return RunResult("check", args.file, verdict, report=report, timing_ms=ms)


def cmd_gen(args) -> RunResult:
    spec = GenSpec(args.n, args.density, args.seed, Family(args.family), args.block_rate)
    G = generate(spec)
    dimacs.save_dimacs(G, args.output, comment=f"{spec.family.value} n={spec.n} density={spec.density} seed={spec.seed}")
    return RunResult("gen", args.output, "generated", report={"n": G.n, "m": G.m, "family": spec.family.value},
                     seed=args.seed)


def cmd_reduce(args) -> RunResult:
    G = dimacs.read_dimacs(args.file)
    H = reduce_3col_to_4col(G)
    dimacs.save_dimacs(H, args.output, comment=f"universal vertex {H.n} added to {args.file}")
    return RunResult("reduce", args.file, "reduced", report={"output": args.output, "n": H.n, "m": H.m})


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = benchmark(Family(args.family), sizes, args.seed, args.density, args.repeats)
    print("n,m,time_ms")
    for r in rows:
        print(f"{r.n},{r.m},{r.time_ms:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dchordal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="find a maximum neighbourhood ordering")
    p.add_argument("file")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("color", help="3-colour a graph whose blocks are locally connected")
    p.add_argument("file")
    p.add_argument("--unchecked", action="store_true", help="skip the block local-connectivity check")
    p.add_argument("--per-component", action="store_true", help="colour each connected component separately")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check", help="verify a structural property on one graph")
    p.add_argument("file")
    p.add_argument("--property", required=True,
                   choices=["tree", "theorem3", "lemma3", "lemma4", "construction"])
    p.set_defaults(func=cmd_check)

    families = [f.value for f in Family]
    p = sub.add_parser("gen", help="generate a seeded graph as DIMACS")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--block-rate", type=float, default=0.1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="add a universal vertex (3-col to 4-col reduction)")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="time 3-colouring on generated graphs, CSV on stdout")
    p.add_argument("--family", default=Family.LOCALLY_CONNECTED_BLOCKS.value, choices=families)
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float, default=0.0)
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        result = args.func(args)
    except (GraphError, OSError, ValueError) as e:
        if isinstance(e, Disconnected):
            print(f"error: {e} (use --per-component with 'color')", file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return 2
    if isinstance(result, int):
        return result
    print(write_result(result))
    return result.exit_code


def main():
    sys.exit(run())
