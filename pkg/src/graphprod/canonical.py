"""Canonical graph-product decompositions and the isomorphism test.

A graph product of finitely generated abelian groups has two canonical
presentations:

* every vertex group directly-indecomposable cyclic (``refine``), and
* every vertex group finitely generated abelian on a T0 graph
  (``t0_quotient`` of the refinement).

Two presentations define isomorphic groups iff their refinements are
isomorphic as labeled graphs, which is what :func:`groups_isomorphic` checks.
"""
from __future__ import annotations

import enum
from itertools import combinations

from .core import AbelianLabel, is_indecomposable, primary_decompose
from .graphs import IsoWitness, LabeledGraph, canonical_form, is_t0, labeled_iso, t0_quotient

__all__ = [
    "DecompositionKind",
    "decomposition_kind",
    "refine",
    "canonical_indecomposable",
    "canonical_t0_abelian",
    "groups_isomorphic",
]


class DecompositionKind(enum.Enum):
    INDECOMPOSABLE_CYCLIC = "indecomposable-cyclic"
    T0_ABELIAN = "t0-abelian"


def decomposition_kind(g: LabeledGraph) -> set[DecompositionKind]:
    """Which canonical shapes ``g`` already has (possibly both, possibly neither)."""
    kinds = set()
    if all(is_indecomposable(g.labels[v]) for v in g.vertices):
        kinds.add(DecompositionKind.INDECOMPOSABLE_CYCLIC)
    if is_t0(g):
        kinds.add(DecompositionKind.T0_ABELIAN)
    return kinds


def refine(g: LabeledGraph) -> LabeledGraph:
    """Replace each vertex by a clique of its primary cyclic factors.

    Vertex ``v`` with factors ``F1..Fk`` becomes ``v.1..v.k`` (canonical
    factor order); each copy keeps all of ``v``'s external edges.
    """
    cached = g.cache.get("refine")
    if cached is not None:
        return cached
    parts: dict[str, list[str]] = {}
    vertices: list[str] = []
    labels: dict[str, AbelianLabel] = {}
    edges: list[tuple[str, str]] = []
    for v in g.vertices:
        names = []
        for i, order in enumerate(primary_decompose(g.labels[v]), 1):
            name = f"{v}.{i}"
            names.append(name)
            labels[name] = AbelianLabel.cyclic(order)
        parts[v] = names
        vertices.extend(names)
        edges.extend(combinations(names, 2))
    for u, v in g.sorted_edges():
        edges.extend((a, b) for a in parts[u] for b in parts[v])
    out = LabeledGraph(vertices, labels, edges)
    g.cache["refine"] = out
    return out


def canonical_indecomposable(g: LabeledGraph) -> LabeledGraph:
    return canonical_form(refine(g))


def canonical_t0_abelian(g: LabeledGraph) -> LabeledGraph:
    """The T0 presentation with the fewest vertices, in canonical form."""
    return canonical_form(t0_quotient(refine(g)))


def groups_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> IsoWitness | None:
    """Decide whether the two presentations define isomorphic groups.

    The witness maps vertices of ``refine(g1)`` to vertices of ``refine(g2)``.
    """
    return labeled_iso(refine(g1), refine(g2))
