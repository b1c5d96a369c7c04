"""Free-group words and free-product normal forms.

Free groups ``F_k`` are handled as reduced words over signed letters
``a1 .. ak``.  Free products are handled through syllable normal forms over a
family of left-ordered factor groups supplied as :class:`OrderedGroupFactor`
plugins; :class:`IntegerFactor` and :class:`LexIntegerLattice` ship here.
"""

from __future__ import annotations

import abc
import itertools
import re
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple

from treeorder.errors import InputError

# -- free groups ---------------------------------------------------------


class Letter(NamedTuple):
    generator: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    @property
    def code(self) -> int:
        """Dense integer code: ``a_i -> 2(i-1)``, ``a_i^-1 -> 2(i-1)+1``."""
        return 2 * (self.generator - 1) + (self.sign < 0)

    def __str__(self) -> str:
        return f"a{self.generator}" if self.sign > 0 else f"a{self.generator}^-1"


def letter_from_code(code: int) -> Letter:
    return Letter(code // 2 + 1, -1 if code & 1 else 1)


def _check_letter(letter: Letter, rank: int) -> None:
    if letter.sign not in (1, -1):
        raise InputError(f"letter sign must be +1 or -1, got {letter.sign!r}")
    if not 1 <= letter.generator <= rank:
        raise InputError(f"generator a{letter.generator} out of range for rank {rank}")


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word in ``F_rank``; the empty word is the identity."""

    letters: Tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise InputError(f"rank must be positive, got {self.rank}")
        prev = None
        for letter in self.letters:
            _check_letter(letter, self.rank)
            if prev is not None and prev.generator == letter.generator and prev.sign == -letter.sign:
                raise InputError(f"word is not reduced: {prev}{letter} cancels")
            prev = letter
        object.__setattr__(self, "_codes", tuple(2 * (l.generator - 1) + (l.sign < 0) for l in self.letters))

    @classmethod
    def _trusted(cls, letters: Tuple[Letter, ...], rank: int, codes: Tuple[int, ...]) -> "ReducedWord":
        # skips validation; callers guarantee a reduced word
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "rank", rank)
        object.__setattr__(w, "_codes", codes)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def codes(self) -> Tuple[int, ...]:
        return self._codes

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        return word_multiply(self, other)

    def __invert__(self) -> "ReducedWord":
        return word_invert(self)


def identity_word(rank: int) -> ReducedWord:
    return ReducedWord((), rank)


def _free_reduce(letters: Iterable[Letter]) -> List[Letter]:
    out: List[Letter] = []
    for letter in letters:
        if out and out[-1].generator == letter.generator and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return out


def reduce(letters: Iterable[Sequence[int]], rank: int) -> ReducedWord:
    """Freely reduce a letter sequence (stack cancellation)."""
    checked = []
    for item in letters:
        letter = Letter(*item)
        _check_letter(letter, rank)
        checked.append(letter)
    return ReducedWord(tuple(_free_reduce(checked)), rank)


def word_multiply(g: ReducedWord, h: ReducedWord) -> ReducedWord:
    if g.rank != h.rank:
        raise InputError(f"rank mismatch: {g.rank} vs {h.rank}")
    a, b = g._codes, h._codes
    i, j = len(a), 0
    while i > 0 and j < len(b) and a[i - 1] == b[j] ^ 1:
        i -= 1
        j += 1
    return ReducedWord._trusted(g.letters[:i] + h.letters[j:], g.rank, a[:i] + b[j:])


def word_invert(g: ReducedWord) -> ReducedWord:
    return ReducedWord._trusted(
        tuple(Letter(l.generator, -l.sign) for l in reversed(g.letters)),
        g.rank,
        tuple(c ^ 1 for c in reversed(g._codes)),
    )


def ball(rank: int, radius: int) -> List[ReducedWord]:
    """All reduced words of length at most ``radius``, shortlex by letter code."""
    words = [identity_word(rank)]
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for code in range(2 * rank):
                if w and w[-1] == code ^ 1:
                    continue
                nxt.append(w + (code,))
        frontier = nxt
        words.extend(ReducedWord(tuple(map(letter_from_code, w)), rank) for w in frontier)
    return words


_LETTER_RE = re.compile(r"a(\d+)(\^-1)?$")


def parse_letter(token: str) -> Letter:
    m = _LETTER_RE.match(token)
    if not m:
        raise InputError(f"bad letter token {token!r} (expected a<i> or a<i>^-1)")
    return Letter(int(m.group(1)), -1 if m.group(2) else 1)


def parse_word(text: str, rank: int) -> ReducedWord:
    """Parse ``"a1 a2^-1 ..."`` (or ``"1"`` for the identity) and reduce it."""
    tokens = text.split()
    if tokens == ["1"]:
        return identity_word(rank)
    return reduce((parse_letter(tok) for tok in tokens), rank)


def format_word(g: ReducedWord) -> str:
    return " ".join(map(str, g.letters)) if g.letters else "1"


# -- ordered factor groups -----------------------------------------------


class OrderedGroupFactor(abc.ABC):
    """A group with a left-invariant total order.

    Elements must be hashable.  Left-invariance is the plugin's promise;
    :func:`spot_check_factor` samples it.
    """

    name = "G"

    @property
    @abc.abstractmethod
    def identity(self) -> Hashable: ...

    @abc.abstractmethod
    def multiply(self, a, b): ...

    @abc.abstractmethod
    def invert(self, a): ...

    @abc.abstractmethod
    def compare(self, a, b) -> int:
        """Negative, zero or positive as ``a`` is below, equal to or above ``b``."""

    def is_identity(self, a) -> bool:
        return a == self.identity

    def sign(self, a) -> int:
        c = self.compare(a, self.identity)
        return (c > 0) - (c < 0)

    def elements(self, bound: int) -> List[Hashable]:
        """Nontrivial elements within ``bound``, ascending; only for enumerable factors."""
        raise InputError(f"factor {self.name} cannot be enumerated")

    def parse(self, text: str):
        raise InputError(f"factor {self.name} has no text syntax")

    def format(self, a) -> str:
        return str(a)


class IntegerFactor(OrderedGroupFactor):
    """The integers under addition with the usual order."""

    name = "Z"

    @property
    def identity(self) -> int:
        return 0

    def multiply(self, a: int, b: int) -> int:
        return a + b

    def invert(self, a: int) -> int:
        return -a

    def compare(self, a: int, b: int) -> int:
        return (a > b) - (a < b)

    def elements(self, bound: int) -> List[int]:
        return [m for m in range(-bound, bound + 1) if m]

    def parse(self, text: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise InputError(f"bad integer {text!r}") from None

    def format(self, a: int) -> str:
        return f"{a:+d}"

    def __eq__(self, other):
        return isinstance(other, IntegerFactor)

    def __hash__(self):
        return hash("Z")


class LexIntegerLattice(OrderedGroupFactor):
    """``Z^n`` under addition, ordered lexicographically."""

    def __init__(self, dim: int):
        if dim < 1:
            raise InputError("lattice dimension must be positive")
        self.dim = dim
        self.name = f"Z^{dim}"

    @property
    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.dim

    def multiply(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def invert(self, a):
        return tuple(-x for x in a)

    def compare(self, a, b) -> int:
        return (a > b) - (a < b)

    def elements(self, bound: int):
        rng = range(-bound, bound + 1)
        return [v for v in itertools.product(rng, repeat=self.dim) if any(v)]

    def parse(self, text: str):
        try:
            v = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise InputError(f"bad lattice element {text!r}") from None
        if len(v) != self.dim:
            raise InputError(f"expected {self.dim} coordinates, got {text!r}")
        return v

    def format(self, a) -> str:
        return ",".join(f"{x:+d}" for x in a)

    def __eq__(self, other):
        return isinstance(other, LexIntegerLattice) and other.dim == self.dim

    def __hash__(self):
        return hash(("Z^", self.dim))


def spot_check_factor(factor: OrderedGroupFactor, samples: Sequence[Any]) -> bool:
    """Check totality and left-invariance (``a < b`` implies ``ca < cb``) on samples."""
    for a in samples:
        for b in samples:
            c_ab = factor.compare(a, b)
            if (c_ab == 0) != (a == b) or (c_ab > 0) != (factor.compare(b, a) < 0):
                return False
            for c in samples:
                lhs = factor.compare(factor.multiply(c, a), factor.multiply(c, b))
                if (lhs > 0) - (lhs < 0) != (c_ab > 0) - (c_ab < 0):
                    return False
    return True


def parse_factor(spec: str) -> OrderedGroupFactor:
    spec = spec.strip()
    if spec == "Z":
        return IntegerFactor()
    m = re.fullmatch(r"Z\^(\d+)", spec)
    if m:
        return LexIntegerLattice(int(m.group(1)))
    raise InputError(f"unknown factor {spec!r} (built-ins: Z, Z^n)")


# -- free products -------------------------------------------------------


@dataclass(frozen=True)
class IndexOrder:
    """A total order on factor indices given by list position."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        if len(set(self.indices)) != len(self.indices):
            raise InputError("factor indices must be distinct")
        if 0 in self.indices:
            raise InputError("index 0 is reserved for the trivial base group")

    def rank(self, i: int) -> int:
        try:
            return self.indices.index(i)
        except ValueError:
            raise InputError(f"unknown factor index {i}") from None

    def __contains__(self, i) -> bool:
        return i in self.indices


class Syllable(NamedTuple):
    factor_index: int
    element: Any


@dataclass(frozen=True)
class NormalForm:
    """Syllables with distinct adjacent indices; ``()`` is the identity."""

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.syllables, self.syllables[1:]):
            if a.factor_index == b.factor_index:
                raise InputError("adjacent syllables must come from different factors")

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def prefix(self, n: int) -> "NormalForm":
        return NormalForm(self.syllables[:n])


IDENTITY = NormalForm()


class FreeProduct:
    """The free product of indexed ordered factors with an order on the indices.

    ``factors`` maps index to factor plugin; ``order`` lists the indices in
    ascending index order (defaults to sorted keys).
    """

    def __init__(self, factors: Mapping[int, OrderedGroupFactor], order: Sequence[int] | None = None):
        self.factors: Dict[int, OrderedGroupFactor] = dict(factors)
        if not self.factors:
            raise InputError("a free product needs at least one factor")
        self.index_order = IndexOrder(tuple(order) if order is not None else tuple(sorted(self.factors)))
        if set(self.index_order.indices) != set(self.factors):
            raise InputError("index order must list exactly the factor indices")
        self._rank = {i: r for r, i in enumerate(self.index_order.indices)}

    @classmethod
    def from_spec(cls, factors: str, order: str | None = None) -> "FreeProduct":
        """``"Z,Z,Z"`` gives factors 1..3; ``order`` like ``"3,1,2"`` reorders indices."""
        parts = [p for p in factors.split(",") if p.strip()]
        family = {i + 1: parse_factor(p) for i, p in enumerate(parts)}
        idx = None
        if order:
            try:
                idx = [int(x) for x in order.split(",")]
            except ValueError:
                raise InputError(f"bad index order {order!r}") from None
        return cls(family, idx)

    def __repr__(self) -> str:
        names = ", ".join(f"{i}:{self.factors[i].name}" for i in self.index_order.indices)
        return f"FreeProduct({names})"

    def factor(self, i: int) -> OrderedGroupFactor:
        try:
            return self.factors[i]
        except KeyError:
            raise InputError(f"unknown factor index {i}") from None

    def index_rank(self, i: int) -> int:
        try:
            return self._rank[i]
        except KeyError:
            raise InputError(f"unknown factor index {i}") from None

    def syllable(self, i: int, element) -> NormalForm:
        if self.factor(i).is_identity(element):
            return IDENTITY
        return NormalForm((Syllable(i, element),))

    def normalize(self, syllables: Iterable[Sequence[Any]]) -> NormalForm:
        """Merge equal-index neighbours and drop identities until normal."""
        out: List[Syllable] = []
        for item in syllables:
            i, x = item
            f = self.factor(i)
            if f.is_identity(x):
                continue
            if out and out[-1].factor_index == i:
                merged = f.multiply(out[-1].element, x)
                out.pop()
                if not f.is_identity(merged):
                    out.append(Syllable(i, merged))
            else:
                out.append(Syllable(i, x))
        return NormalForm(tuple(out))

    def check(self, g: NormalForm) -> None:
        for s in g.syllables:
            if self.factor(s.factor_index).is_identity(s.element):
                raise InputError("syllables must be nontrivial")

    def multiply(self, g: NormalForm, h: NormalForm) -> NormalForm:
        return nf_multiply(g, h, self)

    def invert(self, g: NormalForm) -> NormalForm:
        return nf_invert(g, self)

    def parse(self, text: str) -> NormalForm:
        return parse_normal_form(text, self)

    def format(self, g: NormalForm) -> str:
        return format_normal_form(g, self)


def nf_multiply(g: NormalForm, h: NormalForm, product: FreeProduct) -> NormalForm:
    a = list(g.syllables)
    b = list(h.syllables)
    j = 0
    while a and j < len(b) and a[-1].factor_index == b[j].factor_index:
        i = a[-1].factor_index
        f = product.factor(i)
        merged = f.multiply(a.pop().element, b[j].element)
        j += 1
        if not f.is_identity(merged):
            a.append(Syllable(i, merged))
            break
    return NormalForm(tuple(a) + tuple(b[j:]))


def nf_invert(g: NormalForm, product: FreeProduct) -> NormalForm:
    return NormalForm(
        tuple(Syllable(s.factor_index, product.factor(s.factor_index).invert(s.element)) for s in reversed(g.syllables))
    )


def parse_normal_form(text: str, product: FreeProduct) -> NormalForm:
    """Parse ``"1:+2 2:-1"`` (or ``"1"``); the result is renormalized."""
    tokens = text.split()
    if tokens == ["1"]:
        return IDENTITY
    items = []
    for tok in tokens:
        idx, sep, rest = tok.partition(":")
        if not sep:
            raise InputError(f"bad syllable token {tok!r} (expected <index>:<element>)")
        try:
            i = int(idx)
        except ValueError:
            raise InputError(f"bad factor index in {tok!r}") from None
        items.append((i, product.factor(i).parse(rest)))
    return product.normalize(items)


def format_normal_form(g: NormalForm, product: FreeProduct) -> str:
    if not g.syllables:
        return "1"
    return " ".join(f"{s.factor_index}:{product.factor(s.factor_index).format(s.element)}" for s in g.syllables)


def word_to_normal_form(g: ReducedWord, product: FreeProduct) -> NormalForm:
    """Send ``a_i^m`` to the syllable ``(i, m)`` in a product of integer factors."""
    return product.normalize((l.generator, l.sign) for l in g.letters)
