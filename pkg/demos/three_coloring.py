"""Three-colouring graphs whose blocks are locally connected.

Inside a locally connected block every colour is forced once two adjacent
vertices are coloured, so the algorithm either finds the colouring or
proves none exists, in linear time.
"""

from dchordal import Family, GenSpec, three_color
from dchordal.coloring import three_color_checked
from dchordal.errors import NotApplicable
from dchordal.generators import gen_locally_connected_blocks
from dchordal.graph import cycle, diamond, wheel

print("diamond:", three_color(diamond()).colors)
print("odd wheel W5:", three_color(wheel(5)))       # hub plus odd rim needs 4 colours
print("even wheel W4:", three_color(wheel(4)).colors)

G = gen_locally_connected_blocks(GenSpec(30, 0.2, seed=7, family=Family.LOCALLY_CONNECTED_BLOCKS))
c = three_color(G)
print(f"generated n={G.n} m={G.m}:", "not 3-colourable" if c is None else c.colors)

# The checked entry point refuses inputs outside its guarantee.
try:
    three_color_checked(cycle(4))
except NotApplicable as e:
    print("C4 rejected at vertex", e.witness)
