"""Depth-first and breadth-first orders on rooted trees as rise-index orders.

A family order ranks, at every vertex ``v``, the set made of ``v`` and its
children.  The induced depth-first order puts children ranked below ``v``
(and their subtrees) before ``v`` and children ranked above it after ``v``;
with the parent always first this is pre-order, always last post-order.

:func:`realize_dfs` and :func:`realize_bfs` build edge orientations and local
edge orders whose rise-index order is exactly the traversal order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from treeorder.errors import InputError
from treeorder.trees import ExplicitTree, OrientedEdge, Relation

Vertex = Hashable

MODES = ("pre", "post", "bfs", "custom")


class RootedTree:
    def __init__(self, root: Vertex, children: Mapping[Vertex, Sequence[Vertex]]):
        self.root = root
        self.parent: Dict[Vertex, Optional[Vertex]] = {root: None}
        self.children: Dict[Vertex, Tuple[Vertex, ...]] = {}
        order = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            kids = tuple(children.get(v, ()))
            self.children[v] = kids
            for c in kids:
                if c in self.parent:
                    raise InputError(f"vertex {c!r} has two parents or lies on a cycle")
                self.parent[c] = v
                order.append(c)
                queue.append(c)
        unreachable = set(children) - set(self.parent)
        for kids in children.values():
            unreachable.update(set(kids) - set(self.parent))
        if unreachable:
            raise InputError(f"vertices not reachable from the root: {sorted(map(str, unreachable))}")
        self.vertices: Tuple[Vertex, ...] = tuple(order)
        self.depth: Dict[Vertex, int] = {root: 0}
        for v in self.vertices[1:]:
            self.depth[v] = self.depth[self.parent[v]] + 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.parent

    def __repr__(self) -> str:
        return f"RootedTree(root={self.root!r}, {len(self)} vertices)"

    def require(self, v: Vertex) -> None:
        if v not in self.parent:
            raise InputError(f"unknown vertex {v!r}")

    def ancestors(self, v: Vertex) -> List[Vertex]:
        """``v`` followed by its ancestors up to the root."""
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def is_ancestor(self, a: Vertex, v: Vertex) -> bool:
        while v is not None:
            if v == a:
                return True
            v = self.parent[v]
        return False


class FamilyOrder:
    """For each vertex, a strict ranking of itself together with its children."""

    def __init__(self, tree: RootedTree, rankings: Mapping[Vertex, Sequence[Vertex]]):
        self.tree = tree
        self.rankings: Dict[Vertex, Tuple[Vertex, ...]] = {}
        for v in tree.vertices:
            ranking = tuple(rankings.get(v, (v,) + tree.children[v]))
            expected = {v, *tree.children[v]}
            if len(set(ranking)) != len(ranking) or set(ranking) != expected:
                raise InputError(f"family order at {v!r} must rank {v!r} and its children exactly once")
            self.rankings[v] = ranking
        extra = set(rankings) - set(tree.parent)
        if extra:
            raise InputError(f"family order given for unknown vertices {sorted(map(str, extra))}")
        self._rank = {v: {w: i for i, w in enumerate(r)} for v, r in self.rankings.items()}

    @classmethod
    def with_parent_at(cls, tree: RootedTree, where: str, child_order: Optional[Mapping[Vertex, Sequence[Vertex]]] = None):
        """Parent ``"first"`` or ``"last"``; children keep ``child_order`` (default: tree order)."""
        rankings = {}
        for v in tree.vertices:
            kids = tuple(child_order[v]) if child_order and v in child_order else tree.children[v]
            rankings[v] = (v,) + kids if where == "first" else kids + (v,)
        return cls(tree, rankings)

    @classmethod
    def parent_first(cls, tree: RootedTree) -> "FamilyOrder":
        return cls.with_parent_at(tree, "first")

    @classmethod
    def parent_last(cls, tree: RootedTree) -> "FamilyOrder":
        return cls.with_parent_at(tree, "last")

    def rank(self, v: Vertex, w: Vertex) -> int:
        return self._rank[v][w]

    def precedes(self, v: Vertex, a: Vertex, b: Vertex) -> bool:
        r = self._rank[v]
        return r[a] < r[b]

    def children_in_order(self, v: Vertex) -> Tuple[Vertex, ...]:
        return tuple(w for w in self.rankings[v] if w != v)

    def split(self, v: Vertex) -> Tuple[Tuple[Vertex, ...], Tuple[Vertex, ...]]:
        """Children ranked below ``v`` and above ``v``, each ascending."""
        r = self.rankings[v]
        i = r.index(v)
        return r[:i], r[i + 1 :]

    def is_parent_first(self) -> bool:
        return all(r[0] == v for v, r in self.rankings.items())


def _check(tree: RootedTree, fam: FamilyOrder) -> None:
    if fam.tree is not tree:
        raise InputError("family order belongs to a different tree")


def dfs_compare(x: Vertex, y: Vertex, tree: RootedTree, fam: FamilyOrder) -> Relation:
    """Compare two vertices in the depth-first order induced by ``fam``."""
    _check(tree, fam)
    tree.require(x)
    tree.require(y)
    if x == y:
        return Relation.EQ
    up_x = tree.ancestors(x)
    up_y = tree.ancestors(y)
    # strip the shared tail to find the nearest common ancestor
    i, j = len(up_x) - 1, len(up_y) - 1
    while i > 0 and j > 0 and up_x[i - 1] == up_y[j - 1]:
        i -= 1
        j -= 1
    v = up_x[i]
    if v == y:
        child = up_x[i - 1]
        return Relation.LT if fam.precedes(y, child, y) else Relation.GT
    if v == x:
        child = up_y[j - 1]
        return Relation.LT if fam.precedes(x, x, child) else Relation.GT
    return Relation.LT if fam.precedes(v, up_x[i - 1], up_y[j - 1]) else Relation.GT


def dfs_sequence(tree: RootedTree, fam: FamilyOrder) -> List[Vertex]:
    """The traversal itself: expand each vertex's ranking, emitting the vertex at its own slot."""
    _check(tree, fam)
    out = []
    stack = [(tree.root, False)]
    while stack:
        v, emit = stack.pop()
        if emit:
            out.append(v)
            continue
        for w in reversed(fam.rankings[v]):
            stack.append((w, True) if w == v else (w, False))
    return out


def bfs_compare(x: Vertex, y: Vertex, tree: RootedTree, fam: FamilyOrder) -> Relation:
    """Breadth-first order: by depth, then by the parents' order, then by ``fam``."""
    _check(tree, fam)
    if not fam.is_parent_first():
        raise InputError("breadth-first order needs every parent ranked first in its family")
    tree.require(x)
    tree.require(y)
    if x == y:
        return Relation.EQ
    dx, dy = tree.depth[x], tree.depth[y]
    if dx != dy:
        return Relation.LT if dx < dy else Relation.GT
    while tree.parent[x] != tree.parent[y]:
        x, y = tree.parent[x], tree.parent[y]
    return Relation.LT if fam.precedes(tree.parent[x], x, y) else Relation.GT


def bfs_sequence(tree: RootedTree, fam: FamilyOrder) -> List[Vertex]:
    _check(tree, fam)
    out = []
    queue = deque([tree.root])
    while queue:
        v = queue.popleft()
        out.append(v)
        queue.extend(fam.children_in_order(v))
    return out


@dataclass
class Realization:
    """Orientation of every parent-child edge and the local edge ranking at every vertex.

    Edge ids are ``"e_<child>"`` (each non-root vertex owns the edge to its parent).
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[OrientedEdge, ...]
    local_orders: Dict[Vertex, Tuple[str, ...]]

    def tree(self) -> ExplicitTree:
        return ExplicitTree(self.vertices, self.edges, self.local_orders)


def edge_name(child: Vertex) -> str:
    return f"e_{child}"


def realize_dfs(tree: RootedTree, fam: FamilyOrder) -> Realization:
    """Children below the parent point up at it, children above are pointed down at.

    At ``v`` with ranking ``l_1 .. l_m, v, r_1 .. r_n`` the local order is
    ``e_r1 < .. < e_rn < e_v < e_l1 < .. < e_lm`` (``e_v`` is the edge to the
    parent, absent at the root).
    """
    _check(tree, fam)
    edges = []
    orders = {}
    for v in tree.vertices:
        lower, upper = fam.split(v)
        for c in lower:
            edges.append(OrientedEdge(edge_name(c), c, v))
        for c in upper:
            edges.append(OrientedEdge(edge_name(c), v, c))
        ranking = [edge_name(c) for c in upper]
        if v != tree.root:
            ranking.append(edge_name(v))
        ranking.extend(edge_name(c) for c in lower)
        orders[v] = tuple(ranking)
    return Realization(tree.vertices, tuple(edges), orders)


def realize_bfs(tree: RootedTree, fam: FamilyOrder) -> Realization:
    """All edges point away from the root; the parent edge is least at every vertex."""
    _check(tree, fam)
    if not fam.is_parent_first():
        raise InputError("breadth-first realization needs every parent ranked first in its family")
    edges = []
    orders = {}
    for v in tree.vertices:
        kids = fam.children_in_order(v)
        edges.extend(OrientedEdge(edge_name(c), v, c) for c in kids)
        ranking = [] if v == tree.root else [edge_name(v)]
        ranking.extend(edge_name(c) for c in kids)
        orders[v] = tuple(ranking)
    return Realization(tree.vertices, tuple(edges), orders)


def family_for_mode(tree: RootedTree, mode: str, fam: Optional[FamilyOrder] = None) -> FamilyOrder:
    """The family order a traversal mode uses.

    ``pre`` and ``bfs`` put the parent first, ``post`` last; sibling order
    comes from ``fam`` when given, else from the tree.  ``custom`` uses
    ``fam`` unchanged.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if mode == "custom":
        if fam is None:
            raise InputError("custom mode needs a family order")
        return fam
    child_order = {v: fam.children_in_order(v) for v in tree.vertices} if fam else None
    return FamilyOrder.with_parent_at(tree, "last" if mode == "post" else "first", child_order)


def number_traversal(tree: RootedTree, mode: str, fam: Optional[FamilyOrder] = None) -> Dict[Vertex, int]:
    """1-based position of every vertex in the chosen traversal."""
    fam = family_for_mode(tree, mode, fam)
    seq = bfs_sequence(tree, fam) if mode == "bfs" else dfs_sequence(tree, fam)
    return {v: i + 1 for i, v in enumerate(seq)}


def realize(tree: RootedTree, mode: str, fam: Optional[FamilyOrder] = None) -> Realization:
    fam = family_for_mode(tree, mode, fam)
    return realize_bfs(tree, fam) if mode == "bfs" else realize_dfs(tree, fam)


def sorted_by(tree: RootedTree, fam: FamilyOrder, mode: str = "dfs") -> List[Vertex]:
    """Vertices sorted with the rule-based comparator (not the traversal)."""
    cmp = bfs_compare if mode == "bfs" else dfs_compare
    return sorted(tree.vertices, key=cmp_to_key(lambda a, b: int(cmp(a, b, tree, fam))))
