"""Text formats for explicit trees and rooted trees.

Tree files::

    vertex <id>
    edge <eid> <origin> <terminus>
    order <vid> <eid> ...        # ascending local order

Every vertex with two or more edges needs exactly one ``order`` line.

Rooted-tree files::

    root <id>
    child <parent> <child>       # file order is sibling order
    vorder <vid> <item> ...      # children plus ``self`` for the parent

Ids are whitespace-free tokens; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from treeorder.errors import InputError, ParseError
from treeorder.rooted import FamilyOrder, RootedTree
from treeorder.trees import ExplicitTree, OrientedEdge

_TOKEN = re.compile(r"\S+")

Source = Union[str, Path]


def _lines(text: str) -> Iterator[Tuple[int, List[Tuple[str, int]]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]
        if tokens:
            yield lineno, tokens


def _read(source: Source) -> Tuple[str, str]:
    if isinstance(source, Path):
        return source.read_text(encoding="utf-8"), str(source)
    return source, "<input>"


def parse_tree(source: Source, name: Optional[str] = None) -> ExplicitTree:
    """Parse tree-file text (or a :class:`~pathlib.Path`) into an :class:`ExplicitTree`."""
    text, default_name = _read(source)
    name = name or default_name

    def fail(msg, line=0, col=0):
        return ParseError(msg, line, col, name)

    vertices: Dict[str, int] = {}
    edges: Dict[str, Tuple[OrientedEdge, int]] = {}
    orders: Dict[str, Tuple[List[str], int]] = {}
    for lineno, tokens in _lines(text):
        word, col = tokens[0]
        args = tokens[1:]
        if word == "vertex":
            if len(args) != 1:
                raise fail("expected: vertex <id>", lineno, col)
            vid, vcol = args[0]
            if vid in vertices:
                raise fail(f"duplicate vertex {vid!r}", lineno, vcol)
            vertices[vid] = lineno
        elif word == "edge":
            if len(args) != 3:
                raise fail("expected: edge <eid> <origin> <terminus>", lineno, col)
            (eid, ecol), (o, _), (t, tcol) = args
            if eid in edges:
                raise fail(f"duplicate edge {eid!r}", lineno, ecol)
            if o == t:
                raise fail(f"edge {eid!r} is a loop", lineno, tcol)
            edges[eid] = (OrientedEdge(eid, o, t), lineno)
        elif word == "order":
            if len(args) < 1:
                raise fail("expected: order <vid> <eid> ...", lineno, col)
            vid, vcol = args[0]
            if vid in orders:
                raise fail(f"second order line for vertex {vid!r}", lineno, vcol)
            orders[vid] = ([tok for tok, _ in args[1:]], lineno)
        else:
            raise fail(f"unknown directive {word!r}", lineno, col)

    if not vertices:
        raise fail("no vertices")
    adjacent: Dict[str, List[str]] = {v: [] for v in vertices}
    for eid, (e, lineno) in edges.items():
        for end in (e.origin, e.terminus):
            if end not in vertices:
                raise fail(f"edge {eid!r} references undeclared vertex {end!r}", lineno, 1)
            adjacent[end].append(eid)
    for vid, (ranking, lineno) in orders.items():
        if vid not in vertices:
            raise fail(f"order line for undeclared vertex {vid!r}", lineno, 1)
        if len(set(ranking)) != len(ranking):
            raise fail(f"order line for {vid!r} repeats an edge", lineno, 1)
        for eid in ranking:
            if eid not in edges:
                raise fail(f"order line for {vid!r} names unknown edge {eid!r}", lineno, 1)
            if eid not in adjacent[vid]:
                raise fail(f"edge {eid!r} is not adjacent to {vid!r}", lineno, 1)
        if set(ranking) != set(adjacent[vid]):
            raise fail(f"incomplete order line for {vid!r}: it has {len(adjacent[vid])} edges", lineno, 1)
    for vid, lineno in vertices.items():
        if len(adjacent[vid]) >= 2 and vid not in orders:
            raise fail(f"vertex {vid!r} has {len(adjacent[vid])} edges but no order line", lineno, 1)
    try:
        return ExplicitTree(
            vertices,
            [e for e, _ in edges.values()],
            {v: r for v, (r, _) in orders.items()},
        )
    except InputError as exc:
        raise fail(str(exc)) from None


def format_tree(tree: ExplicitTree) -> str:
    lines = [f"vertex {v}" for v in tree.vertices]
    lines.extend(f"edge {e.eid} {e.origin} {e.terminus}" for e in tree.edges)
    for v in tree.vertices:
        ranking = tree.local_order(v)
        if len(ranking) >= 2:
            lines.append(f"order {v} " + " ".join(map(str, ranking)))
    return "\n".join(lines) + "\n"


def parse_rooted(source: Source, name: Optional[str] = None) -> Tuple[RootedTree, FamilyOrder]:
    """Parse rooted-tree text; vertices without a ``vorder`` line rank the parent first."""
    text, default_name = _read(source)
    name = name or default_name

    def fail(msg, line=0, col=0):
        return ParseError(msg, line, col, name)

    root: Optional[str] = None
    children: Dict[str, List[str]] = {}
    parent_line: Dict[str, int] = {}
    vorders: Dict[str, Tuple[List[str], int]] = {}
    for lineno, tokens in _lines(text):
        word, col = tokens[0]
        args = tokens[1:]
        if word == "root":
            if len(args) != 1:
                raise fail("expected: root <id>", lineno, col)
            if root is not None:
                raise fail("second root line", lineno, col)
            root = args[0][0]
        elif word == "child":
            if len(args) != 2:
                raise fail("expected: child <parent> <child>", lineno, col)
            (p, _), (c, ccol) = args
            if c in parent_line:
                raise fail(f"vertex {c!r} already has a parent (line {parent_line[c]})", lineno, ccol)
            if p == c:
                raise fail(f"vertex {c!r} cannot be its own child", lineno, ccol)
            parent_line[c] = lineno
            children.setdefault(p, []).append(c)
        elif word == "vorder":
            if len(args) < 1:
                raise fail("expected: vorder <vid> <item> ...", lineno, col)
            vid, vcol = args[0]
            if vid in vorders:
                raise fail(f"second vorder line for {vid!r}", lineno, vcol)
            vorders[vid] = ([tok for tok, _ in args[1:]], lineno)
        else:
            raise fail(f"unknown directive {word!r}", lineno, col)

    if root is None:
        raise fail("no vertices" if not children else "missing root line")
    if root in parent_line:
        raise fail(f"root {root!r} has a parent", parent_line[root], 1)
    try:
        tree = RootedTree(root, children)
    except InputError as exc:
        raise fail(str(exc)) from None

    rankings = {}
    for vid, (items, lineno) in vorders.items():
        if vid not in tree:
            raise fail(f"vorder line for unknown vertex {vid!r}", lineno, 1)
        ranking = [vid if item == "self" else item for item in items]
        if "self" not in items:
            raise fail(f"vorder line for {vid!r} must contain 'self'", lineno, 1)
        if len(set(ranking)) != len(ranking) or set(ranking) != {vid, *tree.children[vid]}:
            raise fail(f"vorder line for {vid!r} must list 'self' and each child exactly once", lineno, 1)
        rankings[vid] = ranking
    return tree, FamilyOrder(tree, rankings)


def format_rooted(tree: RootedTree, fam: Optional[FamilyOrder] = None) -> str:
    lines = [f"root {tree.root}"]
    for v in tree.vertices:
        lines.extend(f"child {v} {c}" for c in tree.children[v])
    if fam is not None:
        for v in tree.vertices:
            default = (v,) + tree.children[v]
            if fam.rankings[v] != default:
                items = ["self" if w == v else str(w) for w in fam.rankings[v]]
                lines.append(f"vorder {v} " + " ".join(items))
    return "\n".join(lines) + "\n"
