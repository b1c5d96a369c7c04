"""Oriented trees with local edge orders and the rise-index vertex order.

A tree is oriented when every edge has an origin and a terminus, and locally
ordered when the edges around each vertex carry a strict total order.  For
two vertices ``x`` and ``y`` the rise index walks the unique geodesic from
``x`` to ``y``, counting +1/-1 per edge traversed with/against its
orientation and +1/-1 per interior vertex where the outgoing edge is
locally greater/smaller than the incoming one.  ``x < y`` exactly when the
rise index is positive, and this is always a total order.

Two kinds of trees implement :class:`LocallyOrderedTree`: finite
:class:`ExplicitTree` values built from edge lists, and implicit trees
(Bass-Serre trees, Cayley graphs) whose links may be infinite and which only
answer local questions on demand.
"""

from __future__ import annotations

import abc
import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from treeorder.errors import InputError

Vertex = Hashable
EdgeId = Hashable


class Relation(enum.IntEnum):
    """Outcome of a three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class OrientedEdge:
    eid: EdgeId
    origin: Vertex
    terminus: Vertex

    def __post_init__(self):
        if self.origin == self.terminus:
            raise InputError(f"edge {self.eid!r} is a loop at {self.origin!r}")

    def other(self, v: Vertex) -> Vertex:
        if v == self.origin:
            return self.terminus
        if v == self.terminus:
            return self.origin
        raise InputError(f"vertex {v!r} is not an endpoint of edge {self.eid!r}")


@dataclass(frozen=True)
class DirectedEdgeUse:
    """An edge together with the direction it is traversed in (+1 or -1)."""

    eid: EdgeId
    exponent: int

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise InputError(f"exponent must be +1 or -1, got {self.exponent!r}")


@dataclass(frozen=True)
class Geodesic:
    vertices: Tuple[Vertex, ...]
    steps: Tuple[DirectedEdgeUse, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.steps) + 1:
            raise InputError("a geodesic has exactly one more vertex than steps")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def target(self) -> Vertex:
        return self.vertices[-1]

    def reversed(self) -> "Geodesic":
        return Geodesic(
            tuple(reversed(self.vertices)),
            tuple(DirectedEdgeUse(s.eid, -s.exponent) for s in reversed(self.steps)),
        )


@dataclass(frozen=True)
class RiseBreakdown:
    edge_rise: int
    vertex_rise: int

    @property
    def total(self) -> int:
        return self.edge_rise + self.vertex_rise


class LocallyOrderedTree(abc.ABC):
    """What the rise index needs from a tree.

    Implementations only have to answer local questions, so trees with
    infinitely many edges at a vertex are fine as long as
    :meth:`local_compare` and :meth:`geodesic` can be computed.
    """

    @abc.abstractmethod
    def endpoints(self, eid: EdgeId) -> Tuple[Vertex, Vertex]:
        """Return ``(origin, terminus)`` of an edge."""

    @abc.abstractmethod
    def local_compare(self, v: Vertex, e: EdgeId, f: EdgeId) -> int:
        """Negative if ``e`` precedes ``f`` in the local order at ``v``, zero if equal, else positive."""

    @abc.abstractmethod
    def geodesic(self, x: Vertex, y: Vertex) -> Geodesic:
        """The unique reduced path from ``x`` to ``y``."""

    def has_vertex(self, v: Vertex) -> bool:
        return True

    def step_exponent(self, v: Vertex, eid: EdgeId) -> int:
        return 1 if self.endpoints(eid)[0] == v else -1


class ExplicitTree(LocallyOrderedTree):
    """A finite oriented tree with a ranked list of edges at every vertex.

    ``local_orders`` maps a vertex to its adjacent edge ids in ascending
    local order.  Vertices with fewer than two adjacent edges may be left
    out; any listed ranking must cover exactly the adjacent edges.
    """

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[OrientedEdge],
        local_orders: Optional[Mapping[Vertex, Sequence[EdgeId]]] = None,
    ):
        self._vertices: Tuple[Vertex, ...] = tuple(vertices)
        if not self._vertices:
            raise InputError("a tree needs at least one vertex")
        self._index: Dict[Vertex, int] = {}
        for v in self._vertices:
            if v in self._index:
                raise InputError(f"duplicate vertex {v!r}")
            self._index[v] = len(self._index)

        self._edges: Dict[EdgeId, OrientedEdge] = {}
        adjacency: Dict[Vertex, List[EdgeId]] = {v: [] for v in self._vertices}
        for e in edges:
            if e.eid in self._edges:
                raise InputError(f"duplicate edge {e.eid!r}")
            for end in (e.origin, e.terminus):
                if end not in self._index:
                    raise InputError(f"edge {e.eid!r} references unknown vertex {end!r}")
            self._edges[e.eid] = e
            adjacency[e.origin].append(e.eid)
            adjacency[e.terminus].append(e.eid)

        if len(self._edges) != len(self._vertices) - 1:
            kind = "disconnected" if len(self._edges) < len(self._vertices) - 1 else "cyclic"
            raise InputError(
                f"graph is {kind}: {len(self._vertices)} vertices but {len(self._edges)} edges"
            )
        self._check_connected(adjacency)

        local_orders = dict(local_orders or {})
        for v in local_orders:
            if v not in self._index:
                raise InputError(f"local order given for unknown vertex {v!r}")
        self._orders: Dict[Vertex, Tuple[EdgeId, ...]] = {}
        self._rank: Dict[Vertex, Dict[EdgeId, int]] = {}
        for v in self._vertices:
            adjacent = adjacency[v]
            ranking = local_orders.get(v)
            if ranking is None:
                if len(adjacent) >= 2:
                    raise InputError(f"missing local order at vertex {v!r}")
                ranking = tuple(adjacent)
            ranking = tuple(ranking)
            if len(set(ranking)) != len(ranking):
                raise InputError(f"local order at {v!r} repeats an edge")
            if set(ranking) != set(adjacent):
                missing = sorted(map(str, set(adjacent) - set(ranking)))
                extra = sorted(map(str, set(ranking) - set(adjacent)))
                raise InputError(
                    f"local order at {v!r} must list exactly its adjacent edges"
                    f" (missing {missing}, not adjacent {extra})"
                )
            self._orders[v] = ranking
            self._rank[v] = {eid: r for r, eid in enumerate(ranking)}

    def _check_connected(self, adjacency: Mapping[Vertex, List[EdgeId]]) -> None:
        start = self._vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for eid in adjacency[v]:
                w = self._edges[eid].other(v)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self._vertices):
            # n - 1 edges and not connected means some component has a cycle
            raise InputError("graph is disconnected")

    # -- structure --------------------------------------------------------

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[OrientedEdge, ...]:
        return tuple(self._edges.values())

    def edge(self, eid: EdgeId) -> OrientedEdge:
        try:
            return self._edges[eid]
        except KeyError:
            raise InputError(f"unknown edge {eid!r}") from None

    def local_order(self, v: Vertex) -> Tuple[EdgeId, ...]:
        self._require(v)
        return self._orders[v]

    def adjacent_edges(self, v: Vertex) -> Tuple[EdgeId, ...]:
        return self.local_order(v)

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._index

    def index_of(self, v: Vertex) -> int:
        self._require(v)
        return self._index[v]

    def __len__(self) -> int:
        return len(self._vertices)

    def __repr__(self) -> str:
        return f"ExplicitTree({len(self._vertices)} vertices)"

    def _require(self, v: Vertex) -> None:
        if v not in self._index:
            raise InputError(f"unknown vertex {v!r}")

    # -- LocallyOrderedTree -------------------------------------------------

    def endpoints(self, eid: EdgeId) -> Tuple[Vertex, Vertex]:
        e = self.edge(eid)
        return e.origin, e.terminus

    def local_compare(self, v: Vertex, e: EdgeId, f: EdgeId) -> int:
        self._require(v)
        ranks = self._rank[v]
        try:
            return ranks[e] - ranks[f]
        except KeyError as exc:
            raise InputError(f"edge {exc.args[0]!r} is not adjacent to {v!r}") from None

    def geodesic(self, x: Vertex, y: Vertex) -> Geodesic:
        self._require(x)
        self._require(y)
        if x == y:
            return Geodesic((x,), ())
        parent: Dict[Vertex, Optional[EdgeId]] = {x: None}
        queue = deque([x])
        while queue:
            v = queue.popleft()
            if v == y:
                break
            for eid in self._orders[v]:
                w = self._edges[eid].other(v)
                if w not in parent:
                    parent[w] = eid
                    queue.append(w)
        vertices = [y]
        steps = []
        v = y
        while v != x:
            eid = parent[v]
            edge = self._edges[eid]
            u = edge.other(v)
            steps.append(DirectedEdgeUse(eid, 1 if edge.origin == u else -1))
            vertices.append(u)
            v = u
        vertices.reverse()
        steps.reverse()
        return Geodesic(tuple(vertices), tuple(steps))

    # -- flat arrays for the compiled kernels ------------------------------

    @cached_property
    def csr(self) -> Tuple[np.ndarray, ...]:
        """Adjacency in CSR form: ``(start, neighbour, sign, rank_here, rank_there)``.

        Slot ``k`` in ``start[v]:start[v+1]`` is an edge at vertex ``v``;
        ``sign`` is +1 when leaving ``v`` along it follows the orientation,
        ``rank_here``/``rank_there`` are its local ranks at ``v`` and at the
        neighbour.
        """
        n = len(self._vertices)
        start = np.zeros(n + 1, dtype=np.int64)
        nbr = np.empty(2 * (n - 1), dtype=np.int64)
        sign = np.empty_like(nbr)
        here = np.empty_like(nbr)
        there = np.empty_like(nbr)
        k = 0
        for i, v in enumerate(self._vertices):
            for eid in self._orders[v]:
                edge = self._edges[eid]
                w = edge.other(v)
                nbr[k] = self._index[w]
                sign[k] = 1 if edge.origin == v else -1
                here[k] = self._rank[v][eid]
                there[k] = self._rank[w][eid]
                k += 1
            start[i + 1] = k
        for arr in (start, nbr, sign, here, there):
            arr.setflags(write=False)
        return start, nbr, sign, here, there

    @cached_property
    def rise_matrix(self) -> np.ndarray:
        """``M[i, j] = rise(vertices[i], vertices[j])`` for every pair."""
        from treeorder import kernels

        m = kernels.rise_matrix(*self.csr)
        m.setflags(write=False)
        return m


# -- operations ----------------------------------------------------------


def geodesic(tree: LocallyOrderedTree, x: Vertex, y: Vertex) -> Geodesic:
    if not tree.has_vertex(x):
        raise InputError(f"unknown vertex {x!r}")
    if not tree.has_vertex(y):
        raise InputError(f"unknown vertex {y!r}")
    return tree.geodesic(x, y)


def path_rise(tree: LocallyOrderedTree, path: Geodesic) -> RiseBreakdown:
    """Rise counts along an already computed geodesic."""
    edge_rise = sum(step.exponent for step in path.steps)
    vertex_rise = 0
    for i in range(1, len(path.steps)):
        c = tree.local_compare(path.vertices[i], path.steps[i - 1].eid, path.steps[i].eid)
        vertex_rise += 1 if c < 0 else -1
    return RiseBreakdown(edge_rise, vertex_rise)


def rise_index(tree: LocallyOrderedTree, x: Vertex, y: Vertex) -> RiseBreakdown:
    return path_rise(tree, geodesic(tree, x, y))


def compare_vertices(tree: LocallyOrderedTree, x: Vertex, y: Vertex) -> Relation:
    if not tree.has_vertex(x):
        raise InputError(f"unknown vertex {x!r}")
    if x == y:
        return Relation.EQ
    return Relation.LT if rise_index(tree, x, y).total > 0 else Relation.GT


def sort_vertices(tree: ExplicitTree) -> List[Vertex]:
    """All vertices in ascending rise-index order.

    The number of vertices below ``v`` is the count of positive entries in
    its column of the rise matrix, which gives each vertex its slot directly.
    """
    below = (tree.rise_matrix > 0).sum(axis=0)
    out: List[Any] = [None] * len(tree)
    for v, slot in zip(tree.vertices, below):
        out[slot] = v
    return out


@dataclass
class AxiomReport:
    ok: bool
    vertices: int
    pairs: int
    triples: int
    violation: Optional[str] = None
    witness: Tuple[Vertex, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        if self.ok:
            return f"OK {self.vertices} vertices, {self.pairs} pairs, {self.triples} triples"
        return f"FAIL {self.violation}: " + " ".join(map(str, self.witness))


_VIOLATIONS = {
    1: "rise is zero for distinct vertices",
    2: "rise is even for distinct vertices",
    3: "rise is not antisymmetric",
    4: "triple sum is not +1 or -1",
    5: "triple sum exceeds 1",
    6: "order is not transitive",
}


def check_total_order_axioms(tree: ExplicitTree) -> AxiomReport:
    """Exhaustively verify the rise function yields a total order.

    Checks every ordered pair for nonzero odd antisymmetric rise, every
    triple of distinct vertices for a triangle sum of +1 or -1 (and at most
    1 in general), and transitivity of the resulting strict order.
    """
    from treeorder import kernels

    n = len(tree)
    code, i, j, k = kernels.check_rise_matrix(tree.rise_matrix)
    report = AxiomReport(True, n, n * (n - 1), n * (n - 1) * (n - 2))
    if code:
        vs = tree.vertices
        witness = (vs[i], vs[j]) if code <= 3 else (vs[i], vs[j], vs[k])
        report.ok = False
        report.violation = _VIOLATIONS[code]
        report.witness = witness
    return report


def barycentric_subdivide(tree: ExplicitTree) -> ExplicitTree:
    """Insert a midpoint vertex on every edge.

    Edge ``e: o -> t`` becomes midpoint ``e.0`` with half-edges
    ``e.minus: o -> e.0`` and ``e.plus: t -> e.0``, ordered
    ``e.minus < e.plus`` at the midpoint.  Original vertices keep their
    local orders with each edge replaced by its half at that vertex.
    """
    names = {}
    for e in tree.edges:
        key = str(e.eid)
        names[e.eid] = (f"{key}.0", f"{key}.minus", f"{key}.plus")
    clash = {mid for mid, _, _ in names.values()} & set(tree.vertices)
    if clash:
        raise InputError(f"midpoint names collide with existing vertices: {sorted(map(str, clash))}")

    vertices = list(tree.vertices) + [names[e.eid][0] for e in tree.edges]
    edges = []
    orders: Dict[Vertex, List[EdgeId]] = {}
    for e in tree.edges:
        mid, minus, plus = names[e.eid]
        edges.append(OrientedEdge(minus, e.origin, mid))
        edges.append(OrientedEdge(plus, e.terminus, mid))
        orders[mid] = [minus, plus]
    for v in tree.vertices:
        orders[v] = [
            names[eid][1] if tree.edge(eid).origin == v else names[eid][2]
            for eid in tree.local_order(v)
        ]
    return ExplicitTree(vertices, edges, orders)


def is_ascending_path(tree: LocallyOrderedTree, path: Geodesic) -> bool:
    return all(compare_vertices(tree, a, b) is Relation.LT for a, b in itertools.pairwise(path.vertices))
