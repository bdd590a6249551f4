"""DIMACS ``.col`` reading and writing (1-based labels on disk, 0-based in memory)."""

from __future__ import annotations

from .errors import BadEdgeLine, BadHeader, LoopEdge, VertexOutOfRange
from .graph import Graph, from_edges


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise BadHeader("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise BadHeader(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise BadHeader(f"non-integer counts in {line!r}", lineno) from None
            if n < 0:
                raise BadHeader("negative vertex count", lineno)
            continue
        if parts[0] == "e":
            if n is None:
                raise BadHeader("edge line before problem line", lineno)
            if len(parts) != 3:
                raise BadEdgeLine(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise BadEdgeLine(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"vertex out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise LoopEdge(u, lineno)
            edges.append((u - 1, v - 1))
            continue
        raise BadEdgeLine(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise BadHeader("missing 'p edge <n> <m>' line")
    return from_edges(n, edges)


def write_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_dimacs(path) -> Graph:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def save_dimacs(G: Graph, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(write_dimacs(G, comment))
