"""Graph products of finitely generated abelian groups.

Normal forms, supports, centralizers, T0-quotients, the two canonical
decompositions, and an isomorphism test for graph-product presentations.
"""
from .canonical import (
    DecompositionKind,
    canonical_indecomposable,
    canonical_t0_abelian,
    decomposition_kind,
    groups_isomorphic,
    refine,
)
from .core import (
    INFINITE,
    AbelianLabel,
    invariant_factors,
    is_indecomposable,
    primary_decompose,
)
from .errors import (
    ContextMismatchError,
    GraphError,
    GraphProductError,
    InfiniteOrderError,
    LabelError,
    NotCPError,
    ParseError,
    RadiusCapError,
    SemanticError,
    UnknownVertexError,
)
from .graphs import (
    IsoWitness,
    LabeledGraph,
    VertexPartition,
    canonical_form,
    canonical_serialization,
    full_subgraph,
    is_t0,
    labeled_iso,
    maximal_cliques,
    parse_graph,
    read_graph,
    star_of,
    t0_classes,
    t0_quotient,
)
from .oracle import Ball, commutation_table, conjugacy_min_length, enumerate_ball
from .words import (
    Word,
    centralizer_of_cp,
    cyclic_support,
    cyclically_reduce,
    element_order,
    equal,
    geodesic_length,
    invert,
    is_cp,
    maximal_finite_reps,
    minimal_conjugacy_rep,
    multiply,
    normal_form,
    reduce,
    retract_to_artin,
    support,
    torsion_artin_split,
)

__version__ = "0.1.0"
