import itertools
import random

import pytest
from conftest import path_tree, tripod, trees
from hypothesis import given, settings

import oracles
from treeorder import InputError
from treeorder.generate import random_tree
from treeorder.trees import (
    DirectedEdgeUse,
    ExplicitTree,
    Geodesic,
    OrientedEdge,
    Relation,
    barycentric_subdivide,
    check_total_order_axioms,
    compare_vertices,
    geodesic,
    is_ascending_path,
    rise_index,
    sort_vertices,
)


def single_vertex():
    return ExplicitTree(["a"], [])


def single_edge():
    return ExplicitTree("ab", [OrientedEdge("e", "a", "b")])


# -- construction ----------------------------------------------------------


def test_rejects_loops_and_bad_shapes():
    with pytest.raises(InputError):
        OrientedEdge("e", "a", "a")
    with pytest.raises(InputError, match="disconnected"):
        ExplicitTree("ab", [])
    with pytest.raises(InputError, match="cyclic"):
        ExplicitTree("ab", [OrientedEdge("e", "a", "b"), OrientedEdge("f", "b", "a")])
    with pytest.raises(InputError, match="at least one vertex"):
        ExplicitTree([], [])
    with pytest.raises(InputError, match="unknown vertex"):
        ExplicitTree("ab", [OrientedEdge("e", "a", "c")])


def test_disconnected_with_a_cycle():
    edges = [OrientedEdge("e1", "a", "b"), OrientedEdge("e2", "b", "c"), OrientedEdge("e3", "c", "a")]
    with pytest.raises(InputError, match="disconnected"):
        ExplicitTree("abcd", edges, {"a": ["e1", "e3"], "b": ["e1", "e2"], "c": ["e2", "e3"]})


def test_local_order_validation():
    with pytest.raises(InputError, match="missing local order"):
        ExplicitTree("abc", [OrientedEdge("e1", "a", "b"), OrientedEdge("e2", "b", "c")])
    with pytest.raises(InputError, match="repeats"):
        path_tree(["e1", "e1"])
    with pytest.raises(InputError, match="exactly its adjacent"):
        path_tree(["e1"])


def test_unknown_vertex_is_an_input_error():
    t = single_edge()
    for op in (geodesic, rise_index, compare_vertices):
        with pytest.raises(InputError):
            op(t, "a", "zz")
        with pytest.raises(InputError):
            op(t, "zz", "a")


# -- geodesics -------------------------------------------------------------


def test_geodesic_identity():
    g = geodesic(single_edge(), "a", "a")
    assert g.vertices == ("a",) and len(g) == 0


def test_geodesic_on_path():
    g = geodesic(path_tree(["e1", "e2"]), "a", "c")
    assert g.vertices == ("a", "b", "c")
    assert g.steps == (DirectedEdgeUse("e1", 1), DirectedEdgeUse("e2", 1))
    back = geodesic(path_tree(["e1", "e2"]), "c", "a")
    assert back == g.reversed()
    assert [s.exponent for s in back.steps] == [-1, -1]


def test_geodesic_matches_bfs_oracle(rng):
    for _ in range(60):
        t = random_tree(rng.randint(1, 40), rng)
        vs = list(t.vertices)
        for _ in range(10):
            x, y = rng.choice(vs), rng.choice(vs)
            got = geodesic(t, x, y)
            assert list(got.vertices) == oracles.bfs_path(t, x, y)
            assert len({s.eid for s in got.steps}) == len(got.steps)
            for (a, b), step in zip(zip(got.vertices, got.vertices[1:]), got.steps):
                e = t.edge(step.eid)
                assert (e.origin, e.terminus) == ((a, b) if step.exponent == 1 else (b, a))


@given(trees())
def test_geodesic_uniqueness(t):
    for x, y in itertools.product(t.vertices, repeat=2):
        g = geodesic(t, x, y)
        assert geodesic(t, g.source, g.target) == g
        assert len(set(g.vertices)) == len(g.vertices)


def test_geodesic_rejects_malformed():
    with pytest.raises(InputError):
        Geodesic(("a",), (DirectedEdgeUse("e", 1),))
    with pytest.raises(InputError):
        DirectedEdgeUse("e", 0)


# -- rise index -----------------------------------------------------------


def test_rise_examples():
    assert rise_index(single_vertex(), "a", "a").total == 0
    t = single_edge()
    assert rise_index(t, "a", "b").total == 1
    assert rise_index(t, "b", "a").total == -1
    r = rise_index(path_tree(["e1", "e2"]), "a", "c")
    assert (r.edge_rise, r.vertex_rise, r.total) == (2, 1, 3)
    r = rise_index(path_tree(["e2", "e1"]), "a", "c")
    assert (r.edge_rise, r.vertex_rise, r.total) == (2, -1, 1)


def test_tripod():
    t = tripod()
    expected = {("x", "y"): 1, ("y", "z"): 1, ("z", "x"): -1}
    for (a, b), value in expected.items():
        assert oracles.rise_by_definition(t, a, b) == value
        assert rise_index(t, a, b).total == value
    assert sum(expected.values()) == 1
    assert check_total_order_axioms(t).ok


def test_rise_matches_definition_oracle(rng):
    for _ in range(40):
        t = random_tree(rng.randint(1, 15), rng)
        for x, y in itertools.product(t.vertices, repeat=2):
            want = oracles.rise_by_definition(t, x, y)
            assert rise_index(t, x, y).total == want
            assert t.rise_matrix[t.index_of(x), t.index_of(y)] == want


@given(trees())
def test_rise_bounds_and_parity(t):
    for x, y in itertools.product(t.vertices, repeat=2):
        r = rise_index(t, x, y)
        n = len(geodesic(t, x, y))
        assert abs(r.edge_rise) <= n
        assert abs(r.vertex_rise) <= max(0, n - 1)
        assert r.total == -rise_index(t, y, x).total
        if x != y:
            assert r.total % 2 == 1


@given(trees(max_vertices=9))
def test_triangle_identity(t):
    for x, y, z in itertools.product(t.vertices, repeat=3):
        s = rise_index(t, x, y).total + rise_index(t, y, z).total + rise_index(t, z, x).total
        if len({x, y, z}) == 3:
            assert s in (1, -1)
        else:
            assert s == 0


# -- comparison and sorting ------------------------------------------------


def test_compare_examples():
    t = single_edge()
    assert compare_vertices(t, "a", "a") is Relation.EQ
    assert compare_vertices(t, "a", "b") is Relation.LT
    assert compare_vertices(t, "b", "a") is Relation.GT
    assert str(Relation.LT) == "LT"


@pytest.mark.parametrize("seed", range(5))
def test_positive_chain_ascends_whatever_the_local_orders(seed):
    rng = random.Random(seed)
    n = 8
    vs = [f"v{i}" for i in range(n + 1)]
    edges = [OrientedEdge(f"c{i}", vs[i], vs[i + 1]) for i in range(n)]
    # hang extra leaves so interior vertices have real choices to make
    extra = []
    for i in range(1, n):
        extra.append(OrientedEdge(f"l{i}", f"w{i}", vs[i]) if rng.random() < 0.5 else OrientedEdge(f"l{i}", vs[i], f"w{i}"))
    orders = {}
    for i in range(1, n):
        r = [f"c{i - 1}", f"c{i}", f"l{i}"]
        rng.shuffle(r)
        orders[vs[i]] = r
    t = ExplicitTree(vs + [f"w{i}" for i in range(1, n)], edges + extra, orders)
    for a, b in itertools.combinations(vs, 2):
        assert compare_vertices(t, a, b) is Relation.LT
    assert is_ascending_path(t, geodesic(t, vs[0], vs[-1]))


@given(trees())
def test_ascending_path_property(t):
    for x, y in itertools.product(t.vertices, repeat=2):
        g = geodesic(t, x, y)
        if all(s.exponent == 1 for s in g.steps):
            assert is_ascending_path(t, g)


def test_sort_examples():
    assert sort_vertices(single_vertex()) == ["a"]
    assert sort_vertices(single_edge()) == ["a", "b"]
    assert sort_vertices(tripod()) == ["x", "y", "z", "v"]


@given(trees())
def test_sort_is_strictly_ascending_and_total(t):
    seq = sort_vertices(t)
    assert sorted(seq) == sorted(t.vertices)
    for i, j in itertools.combinations(range(len(seq)), 2):
        assert compare_vertices(t, seq[i], seq[j]) is Relation.LT
    assert sort_vertices(t) == seq


@given(trees(max_vertices=8))
def test_compare_is_a_strict_total_order(t):
    vs = t.vertices
    for x, y in itertools.product(vs, repeat=2):
        outcomes = [compare_vertices(t, x, y) is r for r in Relation]
        assert sum(outcomes) == 1
    for x, y, z in itertools.product(vs, repeat=3):
        if compare_vertices(t, x, y) is Relation.LT and compare_vertices(t, y, z) is Relation.LT:
            assert compare_vertices(t, x, z) is Relation.LT


# -- axiom check -----------------------------------------------------------


def test_axioms_single_vertex():
    report = check_total_order_axioms(single_vertex())
    assert report.ok and report.pairs == 0 and report.triples == 0


@settings(max_examples=50)
@given(trees(max_vertices=20))
def test_axioms_hold(t):
    assert check_total_order_axioms(t).ok


# -- barycentric subdivision -------------------------------------------------


def test_subdivide_examples():
    assert sort_vertices(barycentric_subdivide(single_vertex())) == ["a"]
    s = barycentric_subdivide(single_edge())
    assert set(s.vertices) == {"a", "b", "e.0"}
    assert {(e.eid, e.origin, e.terminus) for e in s.edges} == {
        ("e.minus", "a", "e.0"),
        ("e.plus", "b", "e.0"),
    }
    assert s.local_order("e.0") == ("e.minus", "e.plus")
    assert sort_vertices(s) == ["a", "b", "e.0"]
    assert rise_index(s, "a", "b").total == 1


def test_subdivide_name_clash():
    t = ExplicitTree(["e.0", "b"], [OrientedEdge("e", "e.0", "b")])
    with pytest.raises(InputError, match="collide"):
        barycentric_subdivide(t)


@given(trees())
def test_subdivision_restricts_to_original_order(t):
    s = barycentric_subdivide(t)
    assert len(s) == 2 * len(t) - 1
    original = set(t.vertices)
    assert [v for v in sort_vertices(s) if v in original] == sort_vertices(t)
    assert check_total_order_axioms(s).ok
