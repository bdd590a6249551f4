"""3-colouring and structure of dually chordal graphs.

The central routine is :func:`three_color`, a linear-time bucket-queue
colouring that is exact on graphs whose blocks are locally connected
(which includes every dually chordal and every clique-chordal graph).
"""

from .coloring import Coloring, ColorState, three_color, three_color_checked, two_color, validate_coloring
from .errors import (
    BadEdgeLine,
    BadHeader,
    DimacsError,
    Disconnected,
    GraphError,
    LoopEdge,
    NoCompatibleTree,
    NotApplicable,
    PreconditionViolated,
    TooLarge,
    VerificationFailed,
    VertexOutOfRange,
)
from .generators import (
    Family,
    GenSpec,
    add_universal_vertex,
    gen_connected_random,
    gen_dually_chordal,
    gen_k4_free_dually_chordal,
    gen_locally_connected_blocks,
    generate,
    reduce_3col_to_4col,
)
from .graph import Graph, complement, from_edges, induced_subgraph, is_connected
from .recognition import (
    CompatibleTree,
    MaxNeighbourhoodOrdering,
    build_compatible_tree,
    exhaustive_mno_search,
    find_mno,
    maximum_neighbour,
    tree_path_interior,
    verify_compatible_tree,
)
from .structure import (
    BlockDecomposition,
    ConstructionOrder,
    blocks,
    blocks_locally_connected,
    construction_order,
    find_k4,
    is_locally_connected,
)

__version__ = "0.1.0"
