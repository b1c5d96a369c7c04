"""Random trees for property checks and benchmarks."""

from __future__ import annotations

import random
from typing import Optional, Tuple

from treeorder.rooted import FamilyOrder, RootedTree
from treeorder.trees import ExplicitTree, OrientedEdge


def random_parents(n: int, rng: random.Random) -> list:
    """``parents[i]`` for ``i >= 1`` is an earlier vertex.

    Each call draws a chain bias so shapes range from bushy random
    recursive trees to long paths.
    """
    chain = rng.random()
    return [None] + [i - 1 if rng.random() < chain else rng.randrange(i) for i in range(1, n)]


def random_tree(n: int, rng: Optional[random.Random] = None) -> ExplicitTree:
    """A tree on vertices ``0..n-1`` with random shape, orientations and local orders."""
    rng = rng or random.Random()
    parents = random_parents(n, rng)
    # relabel so vertex 0 is not always the hub of the recursive construction
    labels = list(range(n))
    rng.shuffle(labels)
    edges = []
    for child in range(1, n):
        a, b = labels[parents[child]], labels[child]
        if rng.random() < 0.5:
            a, b = b, a
        edges.append(OrientedEdge(f"e{child}", a, b))
    adjacent = {v: [] for v in range(n)}
    for e in edges:
        adjacent[e.origin].append(e.eid)
        adjacent[e.terminus].append(e.eid)
    for ranking in adjacent.values():
        rng.shuffle(ranking)
    return ExplicitTree(range(n), edges, adjacent)


def random_rooted_tree(
    n: int, rng: Optional[random.Random] = None, parent_first: bool = False
) -> Tuple[RootedTree, FamilyOrder]:
    """A random rooted tree on ``0..n-1`` (root 0) with a random family order."""
    rng = rng or random.Random()
    parents = random_parents(n, rng)
    children = {v: [] for v in range(n)}
    for child in range(1, n):
        children[parents[child]].append(child)
    for kids in children.values():
        rng.shuffle(kids)
    tree = RootedTree(0, children)
    rankings = {}
    for v in tree.vertices:
        kids = list(tree.children[v])
        rng.shuffle(kids)
        if parent_first:
            rankings[v] = [v] + kids
        else:
            kids.insert(rng.randrange(len(kids) + 1), v)
            rankings[v] = kids
    return tree, FamilyOrder(tree, rankings)
