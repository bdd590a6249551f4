"""Single-graph verification of the structural results, shared by the CLI and the tests.

Each check returns ``(verdict, report)`` where verdict is ``"holds"``,
``"violated"`` or ``"not_applicable"`` (the graph falls outside the
statement's hypothesis).
"""

from __future__ import annotations

from typing import Optional

from .errors import NoCompatibleTree
from .graph import Graph
from .oracle import (
    brute_force_k_colorable,
    find_chordless_cycles,
    find_imperfection,
    is_clique_chordal,
    maximal_cliques,
    wheel_hub,
)
from .recognition import (
    CompatibleTree,
    build_compatible_tree,
    find_mno,
    tree_path_interior,
    verify_compatible_tree,
)
from .structure import (
    blocks_locally_connected,
    construction_order,
    find_k4,
    is_locally_connected,
    validate_construction_order,
)

HOLDS, VIOLATED, NOT_APPLICABLE = "holds", "violated", "not_applicable"


def max_tree_path_size(G: Graph, T: CompatibleTree) -> int:
    """Largest ``|P_T[u, v]|`` (endpoints included) over the edges of ``G``."""
    return max((len(tree_path_interior(T, u, v)) + 2 for u, v in G.edges()), default=0)


def check_tree(G: Graph, T: Optional[CompatibleTree] = None) -> tuple[str, dict]:
    mno = find_mno(G)
    if mno is None:
        return NOT_APPLICABLE, {"dually_chordal": False}
    cliques = maximal_cliques(G)
    if T is None:
        try:
            T = build_compatible_tree(G, mno, cliques)
        except NoCompatibleTree as e:
            return VIOLATED, {"dually_chordal": True, "error": str(e)}
    rep = verify_compatible_tree(G, T, cliques)
    k4_free = find_k4(G) is None
    longest = max_tree_path_size(G, T)
    report = {
        "dually_chordal": True,
        "route": T.route,
        "spanning": rep.spanning,
        "cond3": rep.cond3,
        "cond2": rep.cond2,
        "clique_path": rep.clique_path,
        "k4_free": k4_free,
        "max_tree_path": longest,
    }
    ok = rep.ok and rep.cond2 == rep.cond3 and (not k4_free or longest <= 3)
    return (HOLDS if ok else VIOLATED), report


def check_theorem3(G: Graph) -> tuple[str, dict]:
    """Dually chordal: 3-colourable iff perfect and K4-free."""
    if find_mno(G) is None:
        return NOT_APPLICABLE, {"dually_chordal": False}
    colourable = brute_force_k_colorable(G, 3) is not None
    k4 = find_k4(G)
    bad = find_imperfection(G)
    report = {
        "dually_chordal": True,
        "three_colorable": colourable,
        "k4": None if k4 is None else [v + 1 for v in k4],
        "perfect": bad is None,
    }
    if bad is not None:
        report["odd_antihole" if bad.antihole else "odd_hole"] = [v + 1 for v in bad.vertices]
    ok = colourable == (k4 is None and bad is None)
    return (HOLDS if ok else VIOLATED), report


def check_lemma3(G: Graph, T: Optional[CompatibleTree] = None) -> tuple[str, dict]:
    """K4-free dually chordal: every induced cycle of length >= 4 has a hub and avoids T."""
    mno = find_mno(G)
    if mno is None or find_k4(G) is not None:
        return NOT_APPLICABLE, {"dually_chordal": mno is not None, "k4_free": find_k4(G) is None}
    if T is None:
        T = build_compatible_tree(G, mno)
    cycles = find_chordless_cycles(G, 4)
    failures = []
    for c in cycles:
        hub, tree_ok = wheel_hub(G, c, T)
        if hub is None or not tree_ok:
            failures.append({"cycle": [v + 1 for v in c.vertices],
                             "hub": None if hub is None else hub + 1, "tree_edge_free": tree_ok})
    report = {"cycles": len(cycles), "failures": failures}
    return (HOLDS if not failures else VIOLATED), report


def check_lemma4(G: Graph) -> tuple[str, dict]:
    """Clique-chordal implies every block is locally connected."""
    cc = is_clique_chordal(G)
    blc = blocks_locally_connected(G)
    report = {"clique_chordal": cc, "blocks_locally_connected": blc}
    if not cc:
        return NOT_APPLICABLE, report
    return (HOLDS if blc else VIOLATED), report


def check_construction(G: Graph) -> tuple[str, dict]:
    """Connected locally connected graphs grow from one edge by two-adjacent-neighbour steps."""
    ok, w = is_locally_connected(G)
    if not ok:
        return NOT_APPLICABLE, {"locally_connected": False, "vertex": w + 1}
    co = construction_order(G)
    report = {"locally_connected": True, "order": None if co is None else [v + 1 for v in co.order]}
    return (HOLDS if co is not None and validate_construction_order(G, co) else VIOLATED), report


CHECKS = {
    "tree": check_tree,
    "theorem3": check_theorem3,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "construction": check_construction,
}


def run_check(G: Graph, name: str) -> tuple[str, dict]:
    return CHECKS[name](G)
