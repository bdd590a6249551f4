"""Recognising a dually chordal graph and building its compatible tree.

The 4-wheel is dually chordal: its hub is a maximum neighbour of every
vertex. The tree that simply hangs each vertex off its ordering witness
is not always compatible, so the builder falls back to a maximum-weight
spanning tree weighted by clique membership.
"""

from dchordal import find_mno
from dchordal.oracle import maximal_cliques
from dchordal.graph import cycle, wheel
from dchordal.recognition import build_compatible_tree, verify_compatible_tree

G = wheel(4)
mno = find_mno(G)
print("ordering:", mno.order)
print("maximum neighbours:", mno.witness)

cliques = maximal_cliques(G)
T = build_compatible_tree(G, mno, cliques)
print("tree edges:", sorted(T.edges()), "via", T.route)
print("verification:", verify_compatible_tree(G, T, cliques))

# A chordless 5-cycle has no maximum neighbourhood ordering at all.
print("C5 ordering:", find_mno(cycle(5)))
