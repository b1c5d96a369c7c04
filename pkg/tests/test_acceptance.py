"""The seven acceptance criteria, each run at full size.

Every test prints one ``PASS``/``FAIL`` line (visible in the pytest log)
and then asserts.  Runtime bounds are checked where a criterion states one.
"""

import itertools
import random
import time

import pytest
from conftest import DATA, PRE_LABELS, POST_LABELS

from treeorder.fileio import parse_rooted
from treeorder.free_group import all_defining_words, positive_cone, tau_u, verify_defining_word
from treeorder.free_product import bass_serre_geodesic, BassSerreTree, fp_compare, normal_forms, tau
from treeorder.generate import random_rooted_tree, random_tree
from treeorder.groups import FreeProduct, ball, word_invert, word_multiply
from treeorder.rooted import FamilyOrder, bfs_compare, dfs_compare, realize_bfs, realize_dfs
from treeorder.trees import (
    Relation,
    barycentric_subdivide,
    check_total_order_axioms,
    compare_vertices,
    path_rise,
    rise_index,
    sort_vertices,
)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
        assert ok, detail

    return emit


def test_criterion_1_order_axioms(report):
    rng = random.Random(1)
    start = time.perf_counter()
    failures = []
    triples = 0
    for i in range(500):
        t = random_tree(rng.randint(1, 40), rng)
        r = check_total_order_axioms(t)
        triples += r.triples
        if not r.ok:
            failures.append(f"tree {i}: {r}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    report(1, "order axioms on 500 random trees", ok, f"{triples} triples, {elapsed:.1f}s, failures {failures[:3]}")


def _labels_by_compare(vertices, cmp):
    return {v: 1 + sum(cmp(w, v) is Relation.LT for w in vertices) for v in vertices}


def test_criterion_2_labelings(report):
    tree, _ = parse_rooted(DATA / "sample14.rooted")
    mismatches = []
    for name, fam, expected in (
        ("parent-first", FamilyOrder.parent_first(tree), PRE_LABELS),
        ("parent-last", FamilyOrder.parent_last(tree), POST_LABELS),
    ):
        direct = _labels_by_compare(tree.vertices, lambda a, b: dfs_compare(a, b, tree, fam))
        realized_tree = realize_dfs(tree, fam).tree()
        realized = _labels_by_compare(tree.vertices, lambda a, b: compare_vertices(realized_tree, a, b))
        if direct != expected:
            mismatches.append(f"{name} dfs_compare")
        if realized != expected:
            mismatches.append(f"{name} realize_dfs")
    report(2, "pre-order and post-order labelings of the 14-vertex tree", not mismatches, f"mismatches {mismatches}")


def test_criterion_3_free_product_oracle(report):
    product = FreeProduct.from_spec("Z,Z,Z")
    start = time.perf_counter()
    elements = normal_forms(product, 4, 2)
    tree = BassSerreTree(product)
    bad = []
    for g in elements:
        if tau(g, product).total != path_rise(tree, bass_serre_geodesic(g, product)).total:
            bad.append(product.format(g))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60 and len(elements) == 7021
    report(3, "tau vs Bass-Serre rise", ok, f"{len(elements)} elements, {elapsed:.1f}s, mismatches {bad[:3]}")


def test_criterion_4_free_group_oracle(report):
    words = ball(2, 5)
    start = time.perf_counter()
    failures = []
    for u in all_defining_words(2):
        failures.extend(f"u = {u}: {msg}" for msg in verify_defining_word(words, u, pairs=True))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120 and len(words) == 485
    report(4, "tau_u vs Cayley rise, all pairs, 24 words", ok, f"{len(words)} words, {elapsed:.1f}s, failures {failures[:3]}")


def test_criterion_5_cone_and_invariance(report):
    words = ball(2, 5)
    short = ball(2, 3)
    problems = []
    for u in all_defining_words(2):
        for g in words:
            if tau_u(word_invert(g), u).total != -tau_u(g, u).total:
                problems.append(f"antisymmetry {g} under {u}")
        cone = positive_cone(short, u)
        for g, h in itertools.product(cone, repeat=2):
            if tau_u(word_multiply(g, h), u).total <= 0:
                problems.append(f"closure {g} * {h} under {u}")
    product = FreeProduct.from_spec("Z,Z,Z")
    for i in (1, 2, 3):
        for a, b in itertools.product(range(-4, 5), repeat=2):
            if fp_compare(product.syllable(i, a), product.syllable(i, b), product) is not Relation((a > b) - (a < b)):
                problems.append(f"extension {i}:{a} vs {i}:{b}")
    report(5, "antisymmetry, cone closure, factor extension", not problems, f"problems {problems[:3]}")


def test_criterion_6_bfs_law(report):
    rng = random.Random(6)
    problems = []
    pairs = 0
    for n in range(100):
        tree, fam = random_rooted_tree(rng.randint(1, 30), rng, parent_first=True)
        t = realize_bfs(tree, fam).tree()
        for y in tree.vertices:
            for k, x in enumerate(tree.ancestors(y)[1:], start=1):
                if rise_index(t, x, y).total != 2 * k - 1:
                    problems.append(f"tree {n}: rise({x},{y}) at distance {k}")
        for x, y in itertools.permutations(tree.vertices, 2):
            pairs += 1
            if compare_vertices(t, x, y) is not bfs_compare(x, y, tree, fam):
                problems.append(f"tree {n}: order differs on {x},{y}")
    report(6, "BFS distance law and order agreement", not problems, f"{pairs} pairs, problems {problems[:3]}")


def test_criterion_7_subdivision(report):
    rng = random.Random(7)
    problems = []
    for n in range(100):
        t = random_tree(rng.randint(1, 40), rng)
        original = set(t.vertices)
        inside = [v for v in sort_vertices(barycentric_subdivide(t)) if v in original]
        if inside != sort_vertices(t):
            problems.append(f"tree {n}")
    report(7, "subdivision restricts to the original order", not problems, f"problems {problems[:3]}")
