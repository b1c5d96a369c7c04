"""Command-line interface.

Exit status is 0 on success, 1 when a property check fails and 2 on usage
or parse errors.  ``--json`` switches any command to line-delimited JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import cmp_to_key
from pathlib import Path
from typing import Callable, List, Optional

from treeorder import fileio
from treeorder.errors import InputError
from treeorder.free_group import (
    DefiningWord,
    all_defining_words,
    fg_compare,
    positive_cone,
    tau_u,
    verify_defining_word,
)
from treeorder.free_product import bass_serre_rise, cone_enumerate, fp_compare, normal_forms, tau
from treeorder.groups import FreeProduct, ball, format_word, nf_invert, nf_multiply, parse_word, word_invert, word_multiply
from treeorder.rooted import MODES, number_traversal, realize
from treeorder.trees import (
    barycentric_subdivide,
    check_total_order_axioms,
    compare_vertices,
    rise_index,
    sort_vertices,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, record: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(record) + "\n")
        else:
            self.stream.write(text + "\n")


def _tree_record(tree) -> dict:
    return {
        "vertices": [str(v) for v in tree.vertices],
        "edges": [[str(e.eid), str(e.origin), str(e.terminus)] for e in tree.edges],
        "orders": {str(v): [str(e) for e in tree.local_order(v)] for v in tree.vertices},
    }


# -- tree commands -------------------------------------------------------


def cmd_sort(args, out: Output) -> int:
    tree = fileio.parse_tree(Path(args.tree))
    for rank, v in enumerate(sort_vertices(tree), start=1):
        out.emit(str(v), {"rank": rank, "vertex": str(v)})
    return EXIT_OK


def _rise_record(x, y, r) -> dict:
    return {"x": x, "y": y, "rise": r.total, "edge_rise": r.edge_rise, "vertex_rise": r.vertex_rise}


def cmd_compare(args, out: Output) -> int:
    tree = fileio.parse_tree(Path(args.tree))
    rel = compare_vertices(tree, args.x, args.y)
    r = rise_index(tree, args.x, args.y)
    out.emit(f"{rel} {r.total}", {"relation": str(rel), **_rise_record(args.x, args.y, r)})
    return EXIT_OK


def cmd_rise(args, out: Output) -> int:
    tree = fileio.parse_tree(Path(args.tree))
    r = rise_index(tree, args.x, args.y)
    out.emit(f"{r.total} edge={r.edge_rise} vertex={r.vertex_rise}", _rise_record(args.x, args.y, r))
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    tree = fileio.parse_tree(Path(args.tree))
    report = check_total_order_axioms(tree)
    out.emit(
        str(report),
        {
            "ok": report.ok,
            "vertices": report.vertices,
            "pairs": report.pairs,
            "triples": report.triples,
            "violation": report.violation,
            "witness": [str(v) for v in report.witness],
        },
    )
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_subdivide(args, out: Output) -> int:
    tree = barycentric_subdivide(fileio.parse_tree(Path(args.tree)))
    if out.as_json:
        out.emit("", _tree_record(tree))
    else:
        out.stream.write(fileio.format_tree(tree))
    return EXIT_OK


# -- free groups ---------------------------------------------------------


def _defining_word(args) -> DefiningWord:
    if args.u is None:
        return DefiningWord.lexicographic(args.k)
    return DefiningWord.parse(args.u, args.k)


def cmd_fg_tau(args, out: Output) -> int:
    u = _defining_word(args)
    for text in args.words:
        g = parse_word(text, args.k)
        w = tau_u(g, u)
        out.emit(
            f"{format_word(g)} -> {w.total} (tau_prime {w.tau_prime}, omega {w.omega})",
            {"word": format_word(g), "tau": w.total, "tau_prime": w.tau_prime, "omega": w.omega},
        )
    return EXIT_OK


def cmd_fg_compare(args, out: Output) -> int:
    u = _defining_word(args)
    g, h = parse_word(args.g, args.k), parse_word(args.h, args.k)
    rel = fg_compare(g, h, u)
    t = tau_u(word_multiply(word_invert(g), h), u).total
    out.emit(f"{rel} {t}", {"g": format_word(g), "h": format_word(h), "relation": str(rel), "tau": t})
    return EXIT_OK


def cmd_fg_cone(args, out: Output) -> int:
    u = _defining_word(args)
    cone = positive_cone(ball(args.k, args.maxlen), u)
    cone.sort(key=cmp_to_key(lambda a, b: int(fg_compare(a, b, u))))
    for g in cone:
        out.emit(format_word(g), {"word": format_word(g), "tau": tau_u(g, u).total})
    return EXIT_OK


def cmd_fg_verify(args, out: Output) -> int:
    words = ball(args.k, args.maxlen)
    defining = all_defining_words(args.k) if args.all_u else [_defining_word(args)]
    status = EXIT_OK
    for u in defining:
        failures = verify_defining_word(words, u, pairs=not args.no_pairs)
        suffix = f" (u = {u})" if args.all_u else ""
        if failures:
            status = EXIT_CHECK_FAILED
            for msg in failures[:20]:
                out.emit(f"FAIL {msg}", {"ok": False, "u": str(u), "failure": msg})
        else:
            out.emit(
                f"OK {len(words)} words checked{suffix}",
                {"ok": True, "u": str(u), "words": len(words)},
            )
    return status


# -- free products -------------------------------------------------------


def _product(args) -> FreeProduct:
    return FreeProduct.from_spec(args.factors, args.index_order)


def cmd_fp_tau(args, out: Output) -> int:
    product = _product(args)
    for text in args.elements:
        g = product.parse(text)
        t = tau(g, product)
        out.emit(
            f"{product.format(g)} -> {t.total} (pos {t.pos_syllables}, neg {t.neg_syllables},"
            f" jumps {t.jumps}, drops {t.drops})",
            {
                "element": product.format(g),
                "tau": t.total,
                "pos_syllables": t.pos_syllables,
                "neg_syllables": t.neg_syllables,
                "jumps": t.jumps,
                "drops": t.drops,
            },
        )
    return EXIT_OK


def cmd_fp_compare(args, out: Output) -> int:
    product = _product(args)
    g, h = product.parse(args.g), product.parse(args.h)
    rel = fp_compare(g, h, product)
    t = tau(nf_multiply(nf_invert(g, product), h, product), product).total
    out.emit(f"{rel} {t}", {"g": product.format(g), "h": product.format(h), "relation": str(rel), "tau": t})
    return EXIT_OK


def cmd_fp_cone(args, out: Output) -> int:
    product = _product(args)
    for g in cone_enumerate(product, args.max_syllables, args.exponent_bound):
        out.emit(product.format(g), {"element": product.format(g), "tau": tau(g, product).total})
    return EXIT_OK


def cmd_fp_verify(args, out: Output) -> int:
    product = _product(args)
    elements = normal_forms(product, args.max_syllables, args.exponent_bound)
    failures = []
    for g in elements:
        t = tau(g, product).total
        r = bass_serre_rise(g, product)
        if t != r:
            failures.append(f"tau({product.format(g)}) = {t} but Bass-Serre rise = {r}")
        if g and t % 2 == 0:
            failures.append(f"tau({product.format(g)}) = {t} is even")
    for msg in failures[:20]:
        out.emit(f"FAIL {msg}", {"ok": False, "failure": msg})
    if failures:
        return EXIT_CHECK_FAILED
    out.emit(f"OK {len(elements)} elements checked", {"ok": True, "elements": len(elements)})
    return EXIT_OK


# -- rooted trees --------------------------------------------------------


def cmd_rooted_number(args, out: Output) -> int:
    tree, fam = fileio.parse_rooted(Path(args.file))
    labels = number_traversal(tree, args.mode, fam)
    for v in tree.vertices:
        out.emit(f"{v} {labels[v]}", {"vertex": str(v), "label": labels[v]})
    return EXIT_OK


def cmd_rooted_realize(args, out: Output) -> int:
    tree, fam = fileio.parse_rooted(Path(args.file))
    realized = realize(tree, args.mode, fam).tree()
    if out.as_json:
        out.emit("", _tree_record(realized))
    else:
        out.stream.write(fileio.format_tree(realized))
    return EXIT_OK


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit line-delimited JSON records")

    parser = argparse.ArgumentParser(prog="treeorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, func: Callable, help_text: str):
        p = group.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = leaf(sub, "sort", cmd_sort, "list vertices in ascending rise order")
    p.add_argument("tree")
    for name, func, text in (("compare", cmd_compare, "compare two vertices"), ("rise", cmd_rise, "rise index breakdown")):
        p = leaf(sub, name, func, text)
        p.add_argument("tree")
        p.add_argument("x")
        p.add_argument("y")
    p = leaf(sub, "check", cmd_check, "verify the total-order axioms exhaustively")
    p.add_argument("tree")
    p = leaf(sub, "subdivide", cmd_subdivide, "print the barycentric subdivision")
    p.add_argument("tree")

    fg = sub.add_parser("fg", help="orders on free groups").add_subparsers(dest="fg_command", required=True)

    def fg_leaf(name, func, text):
        p = leaf(fg, name, func, text)
        p.add_argument("-k", type=int, required=True, help="rank")
        p.add_argument("-u", help="defining word (default: a1 .. ak ak^-1 .. a1^-1)")
        return p

    fg_leaf("tau", cmd_fg_tau, "weight of words").add_argument("words", nargs="+")
    p = fg_leaf("compare", cmd_fg_compare, "compare two words")
    p.add_argument("g")
    p.add_argument("h")
    fg_leaf("cone", cmd_fg_cone, "positive words in a ball, ascending").add_argument("--maxlen", type=int, required=True)
    p = fg_leaf("verify", cmd_fg_verify, "cross-check weight against the Cayley tree")
    p.add_argument("--maxlen", type=int, required=True)
    p.add_argument("--all-u", action="store_true", help="check every defining word of this rank")
    p.add_argument("--no-pairs", action="store_true", help="skip the all-pairs comparison")

    fp = sub.add_parser("fp", help="orders on free products").add_subparsers(dest="fp_command", required=True)

    def fp_leaf(name, func, text):
        p = leaf(fp, name, func, text)
        p.add_argument("--factors", required=True, help="comma-separated factors, e.g. Z,Z,Z or Z,Z^2")
        p.add_argument("--index-order", help="factor indices in ascending order, e.g. 3,1,2")
        return p

    fp_leaf("tau", cmd_fp_tau, "weight of elements").add_argument("elements", nargs="+")
    p = fp_leaf("compare", cmd_fp_compare, "compare two elements")
    p.add_argument("g")
    p.add_argument("h")
    for name, func, text in (
        ("cone", cmd_fp_cone, "positive elements within bounds, ascending"),
        ("verify", cmd_fp_verify, "cross-check weight against the Bass-Serre tree"),
    ):
        p = fp_leaf(name, func, text)
        p.add_argument("--max-syllables", type=int, required=True)
        p.add_argument("--exponent-bound", type=int, required=True)

    rooted = sub.add_parser("rooted", help="traversal orders on rooted trees").add_subparsers(
        dest="rooted_command", required=True
    )
    for name, func, text in (
        ("number", cmd_rooted_number, "label vertices by traversal position"),
        ("realize", cmd_rooted_realize, "print orientations and local orders inducing the traversal"),
    ):
        p = leaf(rooted, name, func, text)
        p.add_argument("--mode", choices=MODES, required=True)
        p.add_argument("file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    out = Output(args.json)
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
