"""The syllable weight on free products and its Bass-Serre tree.

For ``g = g_1 ... g_n`` in normal form the weight counts positive minus
negative syllables plus index jumps minus index drops between consecutive
syllables.  ``g < h`` iff the weight of ``g^-1 h`` is positive, which is a
left-invariant order extending each factor's order.

:class:`BassSerreTree` is the tree of cosets on which the product acts; the
rise index from the base vertex to ``g`` along its geodesic equals the
weight, and serves as an independent check of :func:`tau`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import List, Optional, Tuple

from treeorder.errors import InputError
from treeorder.groups import IDENTITY, FreeProduct, NormalForm, Syllable, nf_invert, nf_multiply
from treeorder.trees import DirectedEdgeUse, Geodesic, LocallyOrderedTree, Relation, path_rise


@dataclass(frozen=True)
class TauBreakdown:
    pos_syllables: int
    neg_syllables: int
    jumps: int
    drops: int

    @property
    def total(self) -> int:
        return self.pos_syllables - self.neg_syllables + self.jumps - self.drops


def tau(g: NormalForm, product: FreeProduct) -> TauBreakdown:
    pos = neg = jumps = drops = 0
    for s in g.syllables:
        if product.factor(s.factor_index).sign(s.element) > 0:
            pos += 1
        else:
            neg += 1
    for a, b in zip(g.syllables, g.syllables[1:]):
        if product.index_rank(a.factor_index) < product.index_rank(b.factor_index):
            jumps += 1
        else:
            drops += 1
    return TauBreakdown(pos, neg, jumps, drops)


def fp_compare(g: NormalForm, h: NormalForm, product: FreeProduct) -> Relation:
    if g == h:
        return Relation.EQ
    return Relation.LT if tau(nf_multiply(nf_invert(g, product), h, product), product).total > 0 else Relation.GT


def is_positive(g: NormalForm, product: FreeProduct) -> bool:
    return tau(g, product).total > 0


# -- Bass-Serre tree -----------------------------------------------------

ZERO = "zero"
FACTOR = "factor"


@dataclass(frozen=True)
class BassSerreVertex:
    """A coset ``gG_i``; zero-vertices are elements (``factor_index`` is None).

    Factor vertices use the representative with any trailing ``G_i``
    syllable removed, so equal cosets compare equal.
    """

    kind: str
    representative: NormalForm
    factor_index: Optional[int] = None

    def __post_init__(self):
        if self.kind == ZERO:
            if self.factor_index is not None:
                raise InputError("zero-vertices carry no factor index")
        elif self.kind == FACTOR:
            if self.factor_index is None:
                raise InputError("factor vertices need a factor index")
            syl = self.representative.syllables
            if syl and syl[-1].factor_index == self.factor_index:
                raise InputError("factor vertex representative is not canonical")
        else:
            raise InputError(f"unknown vertex kind {self.kind!r}")


@dataclass(frozen=True)
class BassSerreEdge:
    """The edge ``(g, i)`` from the element ``g`` to the coset ``gG_i``."""

    element: NormalForm
    factor_index: int


def zero_vertex(g: NormalForm) -> BassSerreVertex:
    return BassSerreVertex(ZERO, g)


def coset_vertex(g: NormalForm, i: int) -> BassSerreVertex:
    syl = g.syllables
    if syl and syl[-1].factor_index == i:
        g = NormalForm(syl[:-1])
    return BassSerreVertex(FACTOR, g, i)


BASE_VERTEX = zero_vertex(IDENTITY)


class BassSerreTree(LocallyOrderedTree):
    """Implicit Bass-Serre tree of a free product with trivial edge groups.

    Edges point from zero-vertices to factor vertices.  At a zero-vertex the
    edges ``(g, i)`` are ordered by the index order; at ``gG_i`` the edges
    ``(gh, i)`` are ordered by ``h`` in the factor order.
    """

    def __init__(self, product: FreeProduct):
        self.product = product

    def has_vertex(self, v) -> bool:
        return isinstance(v, BassSerreVertex)

    def endpoints(self, e: BassSerreEdge) -> Tuple[BassSerreVertex, BassSerreVertex]:
        return zero_vertex(e.element), coset_vertex(e.element, e.factor_index)

    def _coset_offset(self, v: BassSerreVertex, e: BassSerreEdge):
        rep = v.representative.syllables
        syl = e.element.syllables
        if e.factor_index != v.factor_index or syl[: len(rep)] != rep or len(syl) > len(rep) + 1:
            raise InputError("edge is not adjacent to this vertex")
        factor = self.product.factor(v.factor_index)
        return syl[-1].element if len(syl) > len(rep) else factor.identity

    def local_compare(self, v: BassSerreVertex, e: BassSerreEdge, f: BassSerreEdge) -> int:
        if v.kind == ZERO:
            if e.element != v.representative or f.element != v.representative:
                raise InputError("edge is not adjacent to this vertex")
            return self.product.index_rank(e.factor_index) - self.product.index_rank(f.factor_index)
        factor = self.product.factor(v.factor_index)
        return factor.compare(self._coset_offset(v, e), self._coset_offset(v, f))

    def root_path(self, v: BassSerreVertex) -> Geodesic:
        """Geodesic from the base vertex ``1`` to ``v``."""
        g = v.representative
        vertices = [BASE_VERTEX]
        steps = []
        for j, s in enumerate(g.syllables):
            before = g.prefix(j)
            after = g.prefix(j + 1)
            vertices.append(coset_vertex(before, s.factor_index))
            steps.append(DirectedEdgeUse(BassSerreEdge(before, s.factor_index), 1))
            vertices.append(zero_vertex(after))
            steps.append(DirectedEdgeUse(BassSerreEdge(after, s.factor_index), -1))
        if v.kind == FACTOR:
            vertices.append(v)
            steps.append(DirectedEdgeUse(BassSerreEdge(g, v.factor_index), 1))
        return Geodesic(tuple(vertices), tuple(steps))

    def geodesic(self, x: BassSerreVertex, y: BassSerreVertex) -> Geodesic:
        px, py = self.root_path(x), self.root_path(y)
        c = 0
        for a, b in zip(px.vertices, py.vertices):
            if a != b:
                break
            c += 1
        down = Geodesic(px.vertices[c - 1 :], px.steps[c - 1 :]).reversed()
        return Geodesic(down.vertices + py.vertices[c:], down.steps + py.steps[c - 1 :])

    def translate(self, f: NormalForm, v: BassSerreVertex) -> BassSerreVertex:
        """Left action of the group element ``f``."""
        moved = nf_multiply(f, v.representative, self.product)
        return zero_vertex(moved) if v.kind == ZERO else coset_vertex(moved, v.factor_index)


def bass_serre_geodesic(g: NormalForm, product: FreeProduct) -> Geodesic:
    """The length-``2n`` geodesic ``1 -> G_{i_1} <- g_1 -> g_1 G_{i_2} <- ... <- g``."""
    product.check(g)
    return BassSerreTree(product).root_path(zero_vertex(g))


def bass_serre_rise(g: NormalForm, product: FreeProduct) -> int:
    """Rise index from ``1`` to ``g`` computed by walking the Bass-Serre tree."""
    tree = BassSerreTree(product)
    return path_rise(tree, bass_serre_geodesic(g, product)).total


# -- enumeration ---------------------------------------------------------


def normal_forms(product: FreeProduct, max_syllables: int, exponent_bound: int) -> List[NormalForm]:
    """Every normal form with at most ``max_syllables`` syllables drawn from each factor's ball."""
    elements = {i: product.factor(i).elements(exponent_bound) for i in product.index_order.indices}
    out = [IDENTITY]
    layer: List[Tuple[Syllable, ...]] = [()]
    for _ in range(max_syllables):
        nxt = []
        for syl in layer:
            last = syl[-1].factor_index if syl else None
            for i in product.index_order.indices:
                if i == last:
                    continue
                nxt.extend(syl + (Syllable(i, x),) for x in elements[i])
        layer = nxt
        out.extend(NormalForm(s) for s in layer)
    return out


def cone_enumerate(product: FreeProduct, max_syllables: int, exponent_bound: int) -> List[NormalForm]:
    """Positive elements within the bounds, ascending."""
    if max_syllables < 0 or exponent_bound < 0:
        raise InputError("bounds must be nonnegative")
    cone = [g for g in normal_forms(product, max_syllables, exponent_bound) if g and is_positive(g, product)]
    cone.sort(key=cmp_to_key(lambda a, b: int(fp_compare(a, b, product))))
    return cone

