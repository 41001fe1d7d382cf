"""Exact defective colouring and exhaustive triangle-free (planar) graph search."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, find_deletion_isomorph
from .colour import (
    ColouringAssignment,
    Z3Assignment,
    chi_k,
    enumerate_colourings,
    is_edge_critical,
    is_mk_colourable,
    is_vertex_critical,
    lovasz_bound,
    validate_colouring,
    z3_oracle,
)
from .graph import (
    SmallGraph,
    complete_bipartite,
    emit_graph6,
    induced_subgraph,
    is_triangle_free,
    odd_girth,
    parse_graph6,
)
from .planar import face_profile, is_maximal_tfp, is_planar, lemma3_audit, planar_embedding

__all__ = [
    "CanonicalForm",
    "ColouringAssignment",
    "SmallGraph",
    "Z3Assignment",
    "are_isomorphic",
    "canonical_form",
    "chi_k",
    "complete_bipartite",
    "emit_graph6",
    "enumerate_colourings",
    "face_profile",
    "find_deletion_isomorph",
    "induced_subgraph",
    "is_edge_critical",
    "is_maximal_tfp",
    "is_mk_colourable",
    "is_planar",
    "is_triangle_free",
    "is_vertex_critical",
    "lemma3_audit",
    "lovasz_bound",
    "odd_girth",
    "parse_graph6",
    "planar_embedding",
    "validate_colouring",
    "z3_oracle",
]
