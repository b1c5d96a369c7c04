import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from treeorder import kernels
from treeorder.trees import ExplicitTree, OrientedEdge

DATA = Path(__file__).parent / "data"

PRE_LABELS = {f"v{i}": i for i in range(1, 15)}
# post-order labels of the same vertices
POST_LABELS = {
    "v1": 14, "v2": 5, "v3": 1, "v4": 4, "v5": 2, "v6": 3, "v7": 8,
    "v8": 6, "v9": 7, "v10": 13, "v11": 12, "v12": 9, "v13": 10, "v14": 11,
}


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]


@st.composite
def trees(draw, max_vertices=12):
    n = draw(st.integers(1, max_vertices))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    flips = draw(st.lists(st.booleans(), min_size=n - 1, max_size=n - 1))
    edges = []
    for child, (p, flip) in enumerate(zip(parents, flips), start=1):
        a, b = (child, p) if flip else (p, child)
        edges.append(OrientedEdge(f"e{child}", a, b))
    adjacent = {v: [] for v in range(n)}
    for e in edges:
        adjacent[e.origin].append(e.eid)
        adjacent[e.terminus].append(e.eid)
    orders = {v: draw(st.permutations(r)) for v, r in adjacent.items()}
    return ExplicitTree(range(n), edges, orders)


def path_tree(local_b):
    """a -e1-> b -e2-> c with the given ranking at b."""
    return ExplicitTree(
        "abc",
        [OrientedEdge("e1", "a", "b"), OrientedEdge("e2", "b", "c")],
        {"b": local_b},
    )


def tripod():
    return ExplicitTree(
        ["x", "y", "z", "v"],
        [OrientedEdge("e1", "x", "v"), OrientedEdge("e2", "y", "v"), OrientedEdge("e3", "z", "v")],
        {"v": ["e1", "e2", "e3"]},
    )
