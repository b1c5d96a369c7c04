"""Left orders on free groups from defining words.

A defining word ``u`` lists each of the ``2k`` signed generators once and so
orders the alphabet.  The weight ``tau_u`` is twice a signed count of length-2
subwords (which pairs count depends on ``u``) plus the sign of the last
letter; the positive cone is ``{g : tau_u(g) > 0}``.

The same order comes from the right Cayley graph of ``F_k``, an oriented
tree whose local order at each vertex reads outgoing ``a`` edges as ``a``
and incoming ones as ``a^-1``.  :class:`CayleyTree` implements that tree so
that :func:`cayley_compare` can cross-check :func:`fg_compare`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from treeorder import kernels
from treeorder.errors import InputError
from treeorder.groups import Letter, ReducedWord, parse_letter, word_invert, word_multiply
from treeorder.trees import DirectedEdgeUse, Geodesic, LocallyOrderedTree, Relation, path_rise


@dataclass(frozen=True)
class DefiningWord:
    letters: Tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        expected = {Letter(i, s) for i in range(1, self.rank + 1) for s in (1, -1)}
        if len(self.letters) != 2 * self.rank or set(self.letters) != expected:
            raise InputError(
                f"defining word must use each of the {2 * self.rank} letters of rank {self.rank} exactly once"
            )
        object.__setattr__(self, "_pos", {l: p for p, l in enumerate(self.letters)})
        table = [0] * (2 * self.rank)
        for p, l in enumerate(self.letters):
            table[l.code] = p
        object.__setattr__(self, "_code_pos", tuple(table))

    def position(self, letter: Letter) -> int:
        return self._pos[letter]

    @property
    def code_positions(self) -> Tuple[int, ...]:
        """Position in ``u`` indexed by letter code."""
        return self._code_pos

    def precedes(self, x: Letter, y: Letter) -> bool:
        return self._pos[x] < self._pos[y]

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str, rank: int) -> "DefiningWord":
        return cls(tuple(parse_letter(tok) for tok in text.split()), rank)

    @classmethod
    def lexicographic(cls, rank: int) -> "DefiningWord":
        """``a1 .. ak ak^-1 .. a1^-1``."""
        pos = [Letter(i, 1) for i in range(1, rank + 1)]
        neg = [Letter(i, -1) for i in range(rank, 0, -1)]
        return cls(tuple(pos + neg), rank)


def all_defining_words(rank: int) -> List[DefiningWord]:
    alphabet = [Letter(i, s) for i in range(1, rank + 1) for s in (1, -1)]
    return [DefiningWord(p, rank) for p in itertools.permutations(alphabet)]


def digram_counts(g: ReducedWord) -> Counter:
    return Counter(zip(g.letters, g.letters[1:]))


@dataclass(frozen=True)
class WeightBreakdown:
    tau_prime: int
    omega: int

    @property
    def total(self) -> int:
        return self.tau_prime + self.omega


def _check_rank(g: ReducedWord, u: DefiningWord) -> None:
    if g.rank != u.rank:
        raise InputError(f"rank mismatch: word has rank {g.rank}, defining word rank {u.rank}")


def tau_u(g: ReducedWord, u: DefiningWord) -> WeightBreakdown:
    _check_rank(g, u)
    total = kernels.tau_u_codes(g.codes, u.code_positions)
    omega = g.letters[-1].sign if g.letters else 0
    return WeightBreakdown(total - omega, omega)


def tau_u_from_digrams(g: ReducedWord, u: DefiningWord) -> WeightBreakdown:
    """The weight summed term by term over all generator pairs ``(a, b)``."""
    _check_rank(g, u)
    counts = digram_counts(g)
    gens = [Letter(i, 1) for i in range(1, u.rank + 1)]
    s = 0
    for a in gens:
        for b in gens:
            if u.precedes(a.inverse(), b.inverse()):
                s += counts[(a, b.inverse())]
            if u.precedes(b, a):
                s -= counts[(a.inverse(), b)]
            if u.precedes(a.inverse(), b):
                s += counts[(a, b)]
            if u.precedes(b.inverse(), a):
                s -= counts[(a.inverse(), b.inverse())]
    omega = g.letters[-1].sign if g.letters else 0
    return WeightBreakdown(2 * s, omega)


def fg_compare(g: ReducedWord, h: ReducedWord, u: DefiningWord) -> Relation:
    _check_rank(g, u)
    _check_rank(h, u)
    if g == h:
        return Relation.EQ
    return Relation.LT if tau_u(word_multiply(word_invert(g), h), u).total > 0 else Relation.GT


def positive_cone(words: Iterable[ReducedWord], u: DefiningWord) -> List[ReducedWord]:
    return [g for g in words if tau_u(g, u).total > 0]


# -- Cayley tree ---------------------------------------------------------


@dataclass(frozen=True)
class CayleyEdge:
    """The edge labelled ``a_generator`` from ``origin`` to ``origin * a_generator``."""

    origin: ReducedWord
    generator: int


class CayleyTree(LocallyOrderedTree):
    def __init__(self, u: DefiningWord):
        self.u = u
        self.rank = u.rank

    def has_vertex(self, v) -> bool:
        return isinstance(v, ReducedWord) and v.rank == self.rank

    def endpoints(self, e: CayleyEdge) -> Tuple[ReducedWord, ReducedWord]:
        return e.origin, word_multiply(e.origin, ReducedWord((Letter(e.generator, 1),), self.rank))

    def edge_letter(self, v: ReducedWord, e: CayleyEdge) -> Letter:
        """The alphabet letter an adjacent edge stands for at ``v``."""
        origin, terminus = self.endpoints(e)
        if v == origin:
            return Letter(e.generator, 1)
        if v == terminus:
            return Letter(e.generator, -1)
        raise InputError("edge is not adjacent to this vertex")

    def local_compare(self, v: ReducedWord, e: CayleyEdge, f: CayleyEdge) -> int:
        return self.u.position(self.edge_letter(v, e)) - self.u.position(self.edge_letter(v, f))

    def geodesic(self, x: ReducedWord, y: ReducedWord) -> Geodesic:
        a, b = x.letters, y.letters
        c = 0
        while c < min(len(a), len(b)) and a[c] == b[c]:
            c += 1
        vertices = [x]
        steps = []
        for j in range(len(a), c, -1):
            last = a[j - 1]
            shorter = ReducedWord(a[: j - 1], self.rank)
            if last.sign > 0:
                steps.append(DirectedEdgeUse(CayleyEdge(shorter, last.generator), -1))
            else:
                steps.append(DirectedEdgeUse(CayleyEdge(ReducedWord(a[:j], self.rank), last.generator), 1))
            vertices.append(shorter)
        for j in range(c, len(b)):
            nxt = b[j]
            longer = ReducedWord(b[: j + 1], self.rank)
            if nxt.sign > 0:
                steps.append(DirectedEdgeUse(CayleyEdge(ReducedWord(b[:j], self.rank), nxt.generator), 1))
            else:
                steps.append(DirectedEdgeUse(CayleyEdge(longer, nxt.generator), -1))
            vertices.append(longer)
        return Geodesic(tuple(vertices), tuple(steps))

    def rise(self, x: ReducedWord, y: ReducedWord) -> int:
        """Rise index along the geodesic, read off edge labels without building vertices.

        Stepping from ``w`` to ``w*s`` uses the edge that reads as ``s`` at
        ``w`` and as ``s^-1`` at ``w*s``; its orientation agrees with the
        step iff ``s`` is positive.
        """
        return kernels.cayley_rise_codes(x.codes, y.codes, self.u.code_positions)


def cayley_rise(g: ReducedWord, h: ReducedWord, u: DefiningWord) -> int:
    _check_rank(g, u)
    _check_rank(h, u)
    return CayleyTree(u).rise(g, h)


def cayley_walk_rise(g: ReducedWord, h: ReducedWord, u: DefiningWord) -> int:
    """Same as :func:`cayley_rise` but through the generic tree machinery."""
    tree = CayleyTree(u)
    return path_rise(tree, tree.geodesic(g, h)).total


def cayley_compare(g: ReducedWord, h: ReducedWord, u: DefiningWord) -> Relation:
    _check_rank(g, u)
    _check_rank(h, u)
    if g == h:
        return Relation.EQ
    return Relation.LT if CayleyTree(u).rise(g, h) > 0 else Relation.GT


def verify_defining_word(words: Sequence[ReducedWord], u: DefiningWord, pairs: bool = True) -> List[str]:
    """Cross-check ``tau_u`` against the Cayley tree on a finite set of words.

    Per word: weight equals the rise from ``1`` walked through the generic
    tree code, is odd when nontrivial, and flips sign under inversion.  With
    ``pairs``, every ordered pair is compared both ways.  Returns failure
    messages; empty means everything agreed.
    """
    failures = []
    tree = CayleyTree(u)
    identity = ReducedWord((), u.rank)
    for g in words:
        t = tau_u(g, u).total
        walk = path_rise(tree, tree.geodesic(identity, g)).total
        if walk != t:
            failures.append(f"tau_u({g}) = {t} but rise(1, g) = {walk}")
        if g.letters and t % 2 == 0:
            failures.append(f"tau_u({g}) = {t} is even")
        inv = tau_u(word_invert(g), u).total
        if inv != -t:
            failures.append(f"tau_u({g}^-1) = {inv}, expected {-t}")
    if pairs:
        for g in words:
            for h in words:
                if fg_compare(g, h, u) is not cayley_compare(g, h, u):
                    failures.append(f"fg_compare and cayley_compare disagree on {g} vs {h}")
    return failures
