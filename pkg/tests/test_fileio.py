import pytest
from conftest import DATA, trees
from hypothesis import given

from treeorder import ParseError
from treeorder.fileio import format_rooted, format_tree, parse_rooted, parse_tree
from treeorder.generate import random_rooted_tree
from treeorder.rooted import dfs_sequence
from treeorder.trees import sort_vertices


def test_empty_file():
    with pytest.raises(ParseError, match="no vertices"):
        parse_tree("")
    with pytest.raises(ParseError, match="no vertices"):
        parse_tree("# only a comment\n")


def test_two_isolated_vertices():
    with pytest.raises(ParseError, match="disconnected"):
        parse_tree("vertex a\nvertex b\n")


def test_sample_fixture():
    t = parse_tree(DATA / "sample14_pre.tree")
    assert len(t.vertices) == 14 and len(t.edges) == 13
    tree, _ = parse_rooted(DATA / "sample14.rooted")
    assert len(tree) == 14


@pytest.mark.parametrize(
    "text, fragment, line, column",
    [
        ("vertex a\nbogus a\n", "unknown directive", 2, 1),
        ("vertex a\nvertex a\n", "duplicate vertex", 2, 8),
        ("vertex a\nvertex b\nedge e a a\n", "loop", 3, 10),
        ("vertex a\nedge e a b\n", "undeclared vertex", 2, 1),
        ("vertex a\nvertex b\nvertex c\nedge e a b\nedge f b c\n", "no order line", 2, 1),
        ("vertex a\nvertex b\nvertex c\nedge e a b\nedge f b c\norder b e\n", "incomplete order", 6, 1),
        ("vertex a\nvertex b\nedge e a b\norder b e e\n", "repeats", 4, 1),
        ("vertex a\nvertex b\nedge e a b\norder b x\n", "unknown edge", 4, 1),
        ("vertex a\nedge\n", "expected", 2, 1),
    ],
)
def test_tree_errors_carry_location(text, fragment, line, column):
    with pytest.raises(ParseError, match=fragment) as info:
        parse_tree(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"<input>:{line}:{column}:")


def test_cyclic_graph():
    text = "vertex a\nvertex b\nedge e a b\nedge f b a\norder a e f\norder b e f\n"
    with pytest.raises(ParseError, match="cyclic"):
        parse_tree(text)


def test_comments_and_blank_lines():
    t = parse_tree("# header\nvertex a   # first\n\nvertex b\nedge e a b\n")
    assert sort_vertices(t) == ["a", "b"]


def test_source_name_in_message(tmp_path):
    p = tmp_path / "bad.tree"
    p.write_text("vertex a\nfoo\n")
    with pytest.raises(ParseError) as info:
        parse_tree(p)
    assert str(info.value).startswith(f"{p}:2:1:")


@given(trees())
def test_tree_round_trip(t):
    again = parse_tree(format_tree(t))
    assert [str(v) for v in sort_vertices(t)] == sort_vertices(again)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "no vertices"),
        ("child a b\n", "missing root"),
        ("root a\nroot b\n", "second root"),
        ("root a\nchild a b\nchild c b\n", "already has a parent"),
        ("root a\nchild a a\n", "own child"),
        ("root a\nchild a b\nvorder a b\n", "must contain 'self'"),
        ("root a\nchild a b\nvorder a self b b\n", "exactly once"),
        ("root a\nchild a b\nvorder z self\n", "unknown vertex"),
        ("root a\nchild b c\n", "not reachable"),
        ("root a\nnope\n", "unknown directive"),
    ],
)
def test_rooted_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_rooted(text)


def test_rooted_vorder():
    tree, fam = parse_rooted("root r\nchild r a\nchild r b\nvorder r b self a\n")
    assert fam.rankings["r"] == ("b", "r", "a")
    assert dfs_sequence(tree, fam) == ["b", "r", "a"]


def test_rooted_round_trip(rng):
    for _ in range(20):
        tree, fam = random_rooted_tree(rng.randint(1, 15), rng)
        tree2, fam2 = parse_rooted(format_rooted(tree, fam))
        relabel = {str(v): v for v in tree.vertices}
        assert [relabel[v] for v in dfs_sequence(tree2, fam2)] == dfs_sequence(tree, fam)
