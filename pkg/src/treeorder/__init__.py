"""Total orders from rise indices on locally ordered oriented trees."""

from treeorder.errors import InputError, ParseError
from treeorder.kernels import BACKEND
from treeorder.trees import (
    DirectedEdgeUse,
    ExplicitTree,
    Geodesic,
    LocallyOrderedTree,
    OrientedEdge,
    Relation,
    RiseBreakdown,
    barycentric_subdivide,
    check_total_order_axioms,
    compare_vertices,
    geodesic,
    rise_index,
    sort_vertices,
)

__version__ = "0.1.0"
