"""Finite simplicial graphs with an abelian group on every vertex.

The file format is line oriented::

    # comment
    vertex a Z/2
    vertex b Z
    edge a b

Vertex names match ``[A-Za-z][A-Za-z0-9_.]*``.  Every graph operation here is
pure; a :class:`LabeledGraph` never changes after construction.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .core import AbelianLabel
from .errors import GraphError, ParseError, UnknownVertexError

__all__ = [
    "LabeledGraph",
    "VertexPartition",
    "IsoWitness",
    "parse_graph",
    "read_graph",
    "full_subgraph",
    "maximal_cliques",
    "is_clique",
    "star_of",
    "t0_classes",
    "is_t0",
    "t0_quotient",
    "labeled_iso",
    "canonical_labeling",
    "canonical_form",
    "canonical_serialization",
]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_.]*$")


class LabeledGraph:
    """A finite simplicial graph with an :class:`AbelianLabel` per vertex.

    ``vertices`` keeps the construction order (used for output); equality and
    hashing ignore it.  The empty graph is allowed as an intermediate value,
    e.g. the torsion part of a torsion-free graph.
    """

    __slots__ = ("vertices", "labels", "edges", "_adj", "_hash", "cache")

    def __init__(self, vertices: Iterable[str], labels: Mapping[str, AbelianLabel], edges: Iterable = ()):
        vertices = tuple(vertices)
        seen = set()
        for v in vertices:
            if not isinstance(v, str) or not NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        if set(labels) != seen:
            missing = seen - set(labels)
            extra = set(labels) - seen
            raise GraphError(f"labels do not match vertices (missing {sorted(missing)}, extra {sorted(extra)})")
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        edge_set = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            for x in (u, v):
                if x not in seen:
                    raise UnknownVertexError(x)
            adj[u].add(v)
            adj[v].add(u)
            edge_set.add(frozenset((u, v)))
        self.vertices = vertices
        self.labels = {v: labels[v] for v in vertices}
        self.edges = frozenset(edge_set)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = None
        # per-graph memo for derived structures (word contexts, cliques)
        self.cache = {}

    # -- basic queries -------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._adj

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def adjacent(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def check_vertices(self, vs: Iterable[str]) -> frozenset[str]:
        vs = frozenset(vs)
        for v in sorted(vs):
            if v not in self._adj:
                raise UnknownVertexError(v)
        return vs

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def relabel(self, mapping: Mapping[str, str]) -> LabeledGraph:
        """Rename vertices through an injective ``mapping``."""
        return LabeledGraph(
            [mapping[v] for v in self.vertices],
            {mapping[v]: self.labels[v] for v in self.vertices},
            [(mapping[u], mapping[v]) for u, v in self.sorted_edges()],
        )

    def _key(self):
        return (
            frozenset(self.labels.items()),
            self.edges,
        )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        vs = ", ".join(f"{v}:{self.labels[v]}" for v in self.vertices)
        es = ", ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"LabeledGraph([{vs}], [{es}])"

    def to_text(self) -> str:
        """Serialize in the graph file format; labels in invariant-factor form."""
        lines = [f"vertex {v} {self.labels[v]}" for v in self.vertices]
        lines += [f"edge {u} {v}" for u, v in self.sorted_edges()]
        return "".join(line + "\n" for line in lines)

    # -- convenience constructors --------------------------------------

    @classmethod
    def from_spec(cls, labels: Mapping[str, str | AbelianLabel], edges: Iterable = ()) -> LabeledGraph:
        """Build from ``{name: "Z/2", ...}`` and ``["a b", ("b", "c"), ...]``; handy in tests."""
        labs = {v: lab if isinstance(lab, AbelianLabel) else AbelianLabel.parse(lab) for v, lab in labels.items()}
        es = [e.split() if isinstance(e, str) else e for e in edges]
        return cls(list(labels), labs, es)


def parse_graph(text: str) -> LabeledGraph:
    """Parse the graph file format, reporting 1-based line/column on errors."""
    vertices: list[str] = []
    labels: dict[str, AbelianLabel] = {}
    edges: list[tuple[str, str]] = []
    edge_seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", raw)]
        kind, kcol = tokens[0]
        if kind == "vertex":
            if len(tokens) != 3:
                raise ParseError("expected 'vertex <name> <abelian-label>'", lineno, kcol)
            (name, ncol), (lab, lcol) = tokens[1], tokens[2]
            if not NAME_RE.match(name):
                raise ParseError(f"invalid vertex name {name!r}", lineno, ncol)
            if name in labels:
                raise ParseError(f"duplicate vertex {name!r}", lineno, ncol)
            try:
                labels[name] = AbelianLabel.parse(lab)
            except ParseError as exc:
                raise exc.at(lineno, lcol - 1) from None
            vertices.append(name)
        elif kind == "edge":
            if len(tokens) != 3:
                raise ParseError("expected 'edge <u> <v>'", lineno, kcol)
            (u, ucol), (v, vcol) = tokens[1], tokens[2]
            for x, col in ((u, ucol), (v, vcol)):
                if x not in labels:
                    raise ParseError(f"edge endpoint {x!r} is not a declared vertex", lineno, col)
            if u == v:
                raise ParseError(f"self-loop at {u!r}", lineno, vcol)
            e = frozenset((u, v))
            if e in edge_seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno, kcol)
            edge_seen.add(e)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown directive {kind!r} (expected 'vertex' or 'edge')", lineno, kcol)
    if not vertices:
        raise ParseError("graph has no vertices")
    return LabeledGraph(vertices, labels, edges)


def read_graph(path) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- subgraphs, cliques, stars ------------------------------------------


def full_subgraph(g: LabeledGraph, vs: Iterable[str]) -> LabeledGraph:
    """Induced labeled subgraph on ``vs`` (vertex order inherited from ``g``)."""
    keep = g.check_vertices(vs)
    order = [v for v in g.vertices if v in keep]
    return LabeledGraph(order, {v: g.labels[v] for v in order}, [e for e in g.edges if e <= keep])


def is_clique(g: LabeledGraph, vs: Iterable[str]) -> bool:
    vs = list(g.check_vertices(vs))
    return all(g.adjacent(u, v) for u, v in combinations(vs, 2))


def maximal_cliques(g: LabeledGraph) -> list[frozenset[str]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    cached = g.cache.get("mcs")
    if cached is not None:
        return list(cached)
    adj = {v: g.neighbors(v) for v in g.vertices}
    out: list[frozenset[str]] = []

    def expand(r: frozenset, p: set, x: set):
        if not p and not x:
            out.append(r)
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), u))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if g.vertices:
        expand(frozenset(), set(g.vertices), set())
    out.sort(key=lambda c: sorted(c))
    g.cache["mcs"] = tuple(out)
    return out


def star_of(g: LabeledGraph, vs: Iterable[str]) -> frozenset[str]:
    """``vs`` together with every vertex adjacent to all of ``vs``; ``vs`` must be a clique."""
    vs = g.check_vertices(vs)
    if not vs:
        raise GraphError("star_of needs a non-empty vertex set")
    if not is_clique(g, vs):
        raise GraphError(f"{sorted(vs)} does not span a clique")
    common = frozenset.intersection(*(g.neighbors(v) for v in vs))
    return vs | common


# -- the T0 relation -----------------------------------------------------


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint vertex classes covering a graph, ordered by least member."""

    classes: tuple[frozenset[str], ...]

    def class_of(self, v: str) -> frozenset[str]:
        for c in self.classes:
            if v in c:
                return c
        raise UnknownVertexError(v)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def t0_classes(g: LabeledGraph) -> VertexPartition:
    """Group vertices lying in exactly the same maximal cliques."""
    cliques = maximal_cliques(g)
    groups: dict[frozenset[int], set[str]] = {}
    for v in g.vertices:
        sig = frozenset(i for i, c in enumerate(cliques) if v in c)
        groups.setdefault(sig, set()).add(v)
    classes = sorted((frozenset(c) for c in groups.values()), key=min)
    return VertexPartition(tuple(classes))


def is_t0(g: LabeledGraph) -> bool:
    return all(len(c) == 1 for c in t0_classes(g))


def t0_quotient(g: LabeledGraph) -> LabeledGraph:
    """Collapse each T0 class to one vertex labeled by the direct product of its members.

    A class is named after its least member; labels are stored in
    invariant-factor form.
    """
    part = t0_classes(g)
    rep = {c: min(c) for c in part}
    order = sorted(part, key=lambda c: g.vertices.index(rep[c]))
    labels = {}
    for c in order:
        lab = None
        for v in sorted(c):
            lab = g.labels[v] if lab is None else lab * g.labels[v]
        labels[rep[c]] = lab.canonical()
    edges = []
    for c1, c2 in combinations(order, 2):
        linked = g.adjacent(rep[c1], rep[c2])
        for u in c1:
            for v in c2:
                if g.adjacent(u, v) != linked:
                    raise AssertionError(f"T0 classes {sorted(c1)} and {sorted(c2)} are not uniformly adjacent")
        if linked:
            edges.append((rep[c1], rep[c2]))
    return LabeledGraph([rep[c] for c in order], labels, edges)


# -- isomorphism ---------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """A vertex bijection certifying a labeled-graph isomorphism."""

    mapping: Mapping[str, str]

    def __getitem__(self, v):
        return self.mapping[v]

    def inverse(self) -> IsoWitness:
        return IsoWitness({w: v for v, w in self.mapping.items()})

    def then(self, other: IsoWitness) -> IsoWitness:
        """Composition: first ``self``, then ``other``."""
        return IsoWitness({v: other.mapping[w] for v, w in self.mapping.items()})

    def certifies(self, g1: LabeledGraph, g2: LabeledGraph) -> bool:
        m = self.mapping
        if set(m) != set(g1.vertices) or sorted(m.values()) != sorted(g2.vertices):
            return False
        if any(not g1.labels[v].isomorphic(g2.labels[m[v]]) for v in g1.vertices):
            return False
        return all(g1.adjacent(u, v) == g2.adjacent(m[u], m[v]) for u, v in combinations(g1.vertices, 2))


def _color_refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Stable ordered refinement: split cells by the multiset of neighbour colours.

    Colours are ranks of iso-invariant signatures, so the result depends only
    on the isomorphism type of (graph, initial colouring).
    """
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(nbrs))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return colors
        ncells = len(rank)


def _indexed(g: LabeledGraph):
    idx = {v: i for i, v in enumerate(g.vertices)}
    nbrs = [sorted(idx[w] for w in g.neighbors(v)) for v in g.vertices]
    return idx, nbrs


def _initial_colors(graphs, nbrs) -> list[int]:
    keys = []
    offset = 0
    for g in graphs:
        for i, v in enumerate(g.vertices):
            keys.append((g.labels[v].key(), len(nbrs[offset + i])))
        offset += len(g)
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [rank[k] for k in keys]


def labeled_iso(g1: LabeledGraph, g2: LabeledGraph) -> IsoWitness | None:
    """Find a labeled-graph isomorphism ``g1 -> g2`` or return ``None``.

    Colour refinement runs on the disjoint union so colours are comparable
    across the two graphs; a backtracking search then matches colour cells.
    """
    n = len(g1)
    if n != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    _, nb1 = _indexed(g1)
    _, nb2 = _indexed(g2)
    nbrs = nb1 + [[w + n for w in ns] for ns in nb2]
    colors = _color_refine(nbrs, _initial_colors((g1, g2), nbrs))
    c1, c2 = colors[:n], colors[n:]
    if sorted(c1) != sorted(c2):
        return None

    adj1 = [set(ns) for ns in nb1]
    adj2 = [set(ns) for ns in nb2]
    cells: dict[int, list[int]] = {}
    for j, c in enumerate(c2):
        cells.setdefault(c, []).append(j)
    # smallest cells first; ties by vertex name
    order = sorted(range(n), key=lambda i: (len(cells[c1[i]]), c1[i], g1.vertices[i]))
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in cells[c1[i]]:
            if used[j]:
                continue
            if any((order[m] in adj1[i]) != (image[order[m]] in adj2[j]) for m in range(k)):
                continue
            image[i] = j
            used[j] = True
            if extend(k + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    if not extend(0):
        return None
    return IsoWitness({g1.vertices[i]: g2.vertices[image[i]] for i in range(n)})


def canonical_labeling(g: LabeledGraph) -> list[str]:
    """Vertices of ``g`` in canonical order.

    Individualization-refinement: refine, individualize each vertex of the
    first non-singleton cell in turn, recurse, and keep the leaf whose
    (labels, adjacency matrix) key is least.  Within a cell only one vertex
    per twin class is tried, since swapping twins is an automorphism that
    fixes the current colouring.
    """
    n = len(g)
    _, nbrs = _indexed(g)
    adj = [set(ns) for ns in nbrs]
    labkeys = [g.labels[v].key() for v in g.vertices]
    best: list = [None, None]

    def leaf_key(perm):
        bits = tuple(int(perm[b] in adj[perm[a]]) for a in range(n) for b in range(a + 1, n))
        return tuple(labkeys[v] for v in perm), bits

    def search(colors):
        colors = _color_refine(nbrs, colors)
        if len(set(colors)) == n:
            perm = sorted(range(n), key=colors.__getitem__)
            key = leaf_key(perm)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, perm
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min(c for c, vs in cells.items() if len(vs) > 1)
        tried: list[int] = []
        for v in cells[target]:
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            split = [2 * c for c in colors]
            split[v] = 2 * target - 1
            search(split)

    if n:
        search(_initial_colors((g,), nbrs))
        return [g.vertices[i] for i in best[1]]
    return []


def _canonical_names(n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def canonical_form(g: LabeledGraph) -> LabeledGraph:
    """Relabel to ``v0..v{n-1}`` in canonical order; labels in invariant-factor form.

    Two graphs get equal ``to_text()`` output iff they are labeled-isomorphic.
    """
    cached = g.cache.get("canonical")
    if cached is not None:
        return cached
    order = canonical_labeling(g)
    names = _canonical_names(len(order))
    rename = dict(zip(order, names))
    out = LabeledGraph(
        names,
        {rename[v]: g.labels[v].canonical() for v in order},
        [(rename[u], rename[v]) for u, v in g.sorted_edges()],
    )
    g.cache["canonical"] = out
    return out


def canonical_serialization(g: LabeledGraph) -> str:
    return canonical_form(g).to_text()
