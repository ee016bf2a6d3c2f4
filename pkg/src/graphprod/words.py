"""Elements of a graph product of cyclic groups, stored as syllable words.

A syllable is ``v^k`` for a vertex ``v`` with cyclic label.  Exponents of
finite-order vertices live in ``1..n-1``; a syllable never has exponent 0.
The letter length of ``v^k`` is ``min(k, n - k)`` for order ``n`` and ``|k|``
for infinite order, which is its geodesic length over ``V^{+-1}``.

Reduction is the usual stack algorithm: a new syllable scans back over
syllables whose vertices commute with it and merges with the first syllable
on the same vertex, if any.  The normal form of a reduced word is its
lexicographically least shuffle by vertex name (a Foata-style choice), so
two words define the same element iff their normal forms are identical.

    >>> from graphprod.graphs import LabeledGraph
    >>> g = LabeledGraph.from_spec({"a": "Z", "b": "Z"}, ["a b"])
    >>> str(normal_form(Word.parse(g, "b a b^-1")))
    'a'
"""
from __future__ import annotations

import math
import re
from typing import Iterable

from .core import INFINITE, is_indecomposable
from .errors import (
    ContextMismatchError,
    InfiniteOrderError,
    LabelError,
    NotCPError,
    ParseError,
    UnknownVertexError,
)
from .graphs import NAME_RE, LabeledGraph, full_subgraph, maximal_cliques, star_of

__all__ = [
    "Word",
    "reduce",
    "normal_form",
    "multiply",
    "invert",
    "equal",
    "geodesic_length",
    "support",
    "cyclically_reduce",
    "cyclic_support",
    "is_cp",
    "centralizer_of_cp",
    "element_order",
    "minimal_conjugacy_rep",
    "torsion_artin_split",
    "retract_to_artin",
    "maximal_finite_reps",
]


class _Context:
    """Integer view of a graph: vertices indexed in name order, adjacency as bitmasks."""

    __slots__ = ("graph", "names", "index", "orders", "adj")

    def __init__(self, graph: LabeledGraph):
        self.graph = graph
        self.names = tuple(sorted(graph.vertices))
        self.index = {v: i for i, v in enumerate(self.names)}
        orders = []
        for v in self.names:
            lab = graph.labels[v]
            if not lab.is_cyclic:
                raise LabelError(f"vertex {v} has non-cyclic label {lab}; refine the graph first")
            orders.append(lab.cyclic_order)
        self.orders = tuple(orders)
        self.adj = tuple(
            sum(1 << self.index[w] for w in graph.neighbors(v)) for v in self.names
        )

    def norm(self, i: int, e: int) -> int:
        n = self.orders[i]
        return e % n if n else e

    def letters(self) -> list[tuple[int, int]]:
        """Generators ``v^{+1}, v^{-1}`` as normalized syllables, duplicates removed."""
        out = []
        for i in range(len(self.names)):
            for e in (1, -1):
                s = (i, self.norm(i, e))
                if s not in out:
                    out.append(s)
        return out


def _ctx(graph: LabeledGraph) -> _Context:
    ctx = graph.cache.get("words")
    if ctx is None:
        ctx = graph.cache["words"] = _Context(graph)
    return ctx


# -- integer-level kernels (syllables are (index, exponent) tuples) --------


def _push(ctx: _Context, st: list, s: tuple[int, int]) -> None:
    """Right-multiply the reduced word ``st`` by one syllable, in place."""
    i, e = s
    adj_i = ctx.adj[i]
    j = len(st) - 1
    while j >= 0:
        vj, ej = st[j]
        if vj == i:
            n = ctx.orders[i]
            ne = ej + e
            if n:
                ne %= n
            if ne:
                st[j] = (i, ne)
            else:
                del st[j]
            return
        if not (adj_i >> vj) & 1:
            break
        j -= 1
    st.append(s)


def _reduce(ctx: _Context, syl: Iterable) -> list:
    st: list = []
    for s in syl:
        _push(ctx, st, s)
    return st


def _foata(ctx: _Context, red: list) -> tuple:
    """Least-vertex-first shuffle of a reduced word."""
    rem = list(red)
    out = []
    adj = ctx.adj
    while rem:
        seen = 0
        best = -1
        for k, (v, _) in enumerate(rem):
            if not (seen & ~adj[v]) and (best < 0 or v < rem[best][0]):
                best = k
            seen |= 1 << v
        out.append(rem.pop(best))
    return tuple(out)


def _normal(ctx: _Context, syl: Iterable) -> tuple:
    return _foata(ctx, _reduce(ctx, syl))


def _inverse(ctx: _Context, syl) -> list:
    return [(i, ctx.norm(i, -e)) for i, e in reversed(syl)]


def _letter_length(ctx: _Context, s: tuple[int, int]) -> int:
    i, e = s
    n = ctx.orders[i]
    if n:
        e %= n
        return min(e, n - e)
    return abs(e)


def _length(ctx: _Context, syl) -> int:
    return sum(_letter_length(ctx, s) for s in syl)


def _support_mask(syl) -> int:
    m = 0
    for v, _ in syl:
        m |= 1 << v
    return m


def _merge_position(ctx: _Context, red: list) -> int | None:
    """First syllable that shuffles to the front and shares its vertex with a
    different syllable that shuffles to the back, if any."""
    adj = ctx.adj
    fronts = []
    seen = 0
    for k, (v, _) in enumerate(red):
        if not (seen & ~adj[v]):
            fronts.append(k)
        seen |= 1 << v
    back_vertices = {}
    seen = 0
    for k in range(len(red) - 1, -1, -1):
        v = red[k][0]
        if not (seen & ~adj[v]):
            back_vertices.setdefault(v, k)
        seen |= 1 << v
    for k in fronts:
        l = back_vertices.get(red[k][0])
        if l is not None and l != k:
            return k
    return None


def _cyclic_core(ctx: _Context, syl) -> tuple[list, list]:
    core = _reduce(ctx, syl)
    conj: list = []
    while True:
        k = _merge_position(ctx, core)
        if k is None:
            return conj, core
        s = core[k]
        inv = (s[0], ctx.norm(s[0], -s[1]))
        core = _reduce(ctx, [inv, *core, s])
        _push(ctx, conj, s)


# -- public API --------------------------------------------------------------


_TOKEN_RE = re.compile(r"\S+")


class Word:
    """A syllable sequence in the graph product presented by ``context``.

    ``==`` compares the syllable sequences themselves; use :func:`equal` for
    equality of group elements.
    """

    __slots__ = ("context", "syl", "_ctx")

    def __init__(self, context: LabeledGraph, syllables: Iterable[tuple[str, int]] = ()):
        ctx = _ctx(context)
        syl = []
        for name, e in syllables:
            i = ctx.index.get(name)
            if i is None:
                raise UnknownVertexError(name)
            e = ctx.norm(i, int(e))
            if e:
                syl.append((i, e))
        self.context = context
        self._ctx = ctx
        self.syl = tuple(syl)

    @classmethod
    def _from(cls, ctx: _Context, syl) -> Word:
        w = cls.__new__(cls)
        w.context = ctx.graph
        w._ctx = ctx
        w.syl = tuple(syl)
        return w

    @classmethod
    def identity(cls, context: LabeledGraph) -> Word:
        return cls._from(_ctx(context), ())

    @classmethod
    def generator(cls, context: LabeledGraph, name: str, exponent: int = 1) -> Word:
        return cls(context, [(name, exponent)])

    @classmethod
    def parse(cls, context: LabeledGraph, text: str) -> Word:
        """Parse ``"a b^-1 a^3"``; ``""`` or ``"1"`` is the identity."""
        syllables = []
        for m in _TOKEN_RE.finditer(text):
            tok, col = m.group(), m.start() + 1
            if tok == "1":
                continue
            name, caret, exp = tok.partition("^")
            if not NAME_RE.match(name):
                raise ParseError(f"bad generator name in {tok!r}", column=col)
            if caret:
                if not re.fullmatch(r"-?\d+", exp):
                    raise ParseError(f"bad exponent in {tok!r}", column=col + len(name) + 1)
                k = int(exp)
                if k == 0:
                    raise ParseError(f"zero exponent in {tok!r}", column=col + len(name) + 1)
            else:
                k = 1
            syllables.append((name, k))
        return cls(context, syllables)

    @property
    def syllables(self) -> tuple[tuple[str, int], ...]:
        names = self._ctx.names
        return tuple((names[i], e) for i, e in self.syl)

    @property
    def length(self) -> int:
        """Letter length of this word (geodesic iff the word is reduced)."""
        return _length(self._ctx, self.syl)

    def __len__(self):
        return len(self.syl)

    def __bool__(self):
        return bool(self.syl)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.syl == other.syl and (self.context is other.context or self.context == other.context)

    def __hash__(self):
        return hash(self.syl)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def inverse(self) -> Word:
        return invert(self)

    def __str__(self):
        if not self.syl:
            return "1"
        names = self._ctx.names
        return " ".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in self.syl)

    def __repr__(self):
        return f"Word({str(self)!r})"


def _same_context(w1: Word, w2: Word) -> _Context:
    if w1.context is not w2.context and w1.context != w2.context:
        raise ContextMismatchError("words belong to different graph products")
    return w1._ctx


def reduce(w: Word) -> Word:
    """A reduced word for the same element: no two syllables on one vertex are
    separated only by syllables commuting with them."""
    return Word._from(w._ctx, _reduce(w._ctx, w.syl))


def normal_form(w: Word) -> Word:
    return Word._from(w._ctx, _normal(w._ctx, w.syl))


def multiply(w1: Word, w2: Word) -> Word:
    ctx = _same_context(w1, w2)
    return Word._from(ctx, _normal(ctx, w1.syl + w2.syl))


def invert(w: Word) -> Word:
    return Word._from(w._ctx, _normal(w._ctx, _inverse(w._ctx, w.syl)))


def equal(w1: Word, w2: Word) -> bool:
    ctx = _same_context(w1, w2)
    return not _reduce(ctx, w1.syl + tuple(_inverse(ctx, w2.syl)))


def geodesic_length(w: Word) -> int:
    """Length of the element over the generators ``v^{+-1}``."""
    return _length(w._ctx, _reduce(w._ctx, w.syl))


def support(w: Word) -> frozenset[str]:
    names = w._ctx.names
    return frozenset(names[i] for i, _ in _reduce(w._ctx, w.syl))


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Return ``(conjugator, core)`` with ``core == conjugator^-1 * w * conjugator``.

    While some syllable can be shuffled to the front and another syllable on
    the same vertex can be shuffled to the back, conjugate by the front one so
    the two merge.  Each step removes at least one syllable and never
    increases letter length.
    """
    ctx = w._ctx
    conj, core = _cyclic_core(ctx, w.syl)
    return Word._from(ctx, _foata(ctx, conj)), Word._from(ctx, _foata(ctx, core))


def cyclic_support(w: Word) -> frozenset[str]:
    _, core = _cyclic_core(w._ctx, w.syl)
    names = w._ctx.names
    return frozenset(names[i] for i, _ in core)


def _mask_is_clique(ctx: _Context, mask: int) -> bool:
    i = 0
    m = mask
    while m:
        if m & 1 and (mask & ~ctx.adj[i]) != 1 << i:
            return False
        m >>= 1
        i += 1
    return True


def is_cp(w: Word) -> bool:
    """Whether ``w`` lies in the subgroup of a complete subgraph."""
    ctx = w._ctx
    return _mask_is_clique(ctx, _support_mask(_reduce(ctx, w.syl)))


def centralizer_of_cp(w: Word) -> LabeledGraph:
    """Subgraph whose vertices generate the centralizer of the CP element ``w``.

    The identity is central, so its centralizer is the whole context.
    """
    if not is_cp(w):
        raise NotCPError(f"{normal_form(w)} is not a CP element; conjugate it into a clique subgroup first")
    supp = support(w)
    if not supp:
        return w.context
    return full_subgraph(w.context, star_of(w.context, supp))


def element_order(w: Word) -> int:
    """Order of the element, or ``INFINITE``.

    Finite exactly when a cyclically reduced conjugate is supported on a
    clique of finite-order vertices; that conjugate then lies in a finite
    abelian group and its order is the lcm of the syllable orders.
    """
    ctx = w._ctx
    _, core = _cyclic_core(ctx, w.syl)
    if not _mask_is_clique(ctx, _support_mask(core)):
        return INFINITE
    order = 1
    for i, e in core:
        n = ctx.orders[i]
        if n == INFINITE:
            return INFINITE
        order = math.lcm(order, n // math.gcd(n, e))
    return order


def minimal_conjugacy_rep(w: Word) -> Word:
    """The unique shortest conjugate of a finite-order element."""
    if element_order(w) == INFINITE:
        raise InfiniteOrderError(f"{normal_form(w)} has infinite order; no unique minimal conjugate")
    return cyclically_reduce(w)[1]


def torsion_artin_split(g: LabeledGraph) -> tuple[LabeledGraph, LabeledGraph]:
    """Induced subgraphs on the finite-order and the infinite-order vertices."""
    cached = g.cache.get("split")
    if cached is not None:
        return cached
    bad = [v for v in g.vertices if not is_indecomposable(g.labels[v])]
    if bad:
        raise LabelError(f"labels of {bad} are not directly-indecomposable cyclic; refine the graph first")
    torsion = [v for v in g.vertices if g.labels[v].is_finite]
    artin = [v for v in g.vertices if not g.labels[v].is_finite]
    out = (full_subgraph(g, torsion), full_subgraph(g, artin))
    g.cache["split"] = out
    return out


def retract_to_artin(w: Word) -> Word:
    """Image under the retraction killing every finite-order vertex, as a word
    in the infinite-order subgraph."""
    _, artin = torsion_artin_split(w.context)
    kept = [(v, e) for v, e in w.syllables if v in artin]
    return normal_form(Word(artin, kept))


def maximal_finite_reps(g: LabeledGraph) -> list[frozenset[str]]:
    """Maximal cliques of the torsion subgraph: one per conjugacy class of
    maximal finite subgroups."""
    torsion, _ = torsion_artin_split(g)
    return maximal_cliques(torsion) if len(torsion) else []
