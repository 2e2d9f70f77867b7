"""domatlas: domination polynomials and domination roots of small graphs."""

from .atlas import AtlasConfig, AtlasEntry, build_atlas, emit_root_plot_data, verify
from .enumeration import CanonicalForm, canonical_form, enumerate_graphs
from .graph import (
    Graph,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_dominating,
    parse_graph6,
    write_graph6,
)
from .polynomial import (
    DominationPolynomial,
    closed_form_family,
    count_dominating_sets,
    evaluate,
    poly_by_components,
)
from .roots import RootSet, deflate_zero, find_roots, root_statistics

__all__ = [
    "AtlasConfig",
    "AtlasEntry",
    "CanonicalForm",
    "DominationPolynomial",
    "Graph",
    "RootSet",
    "build_atlas",
    "canonical_form",
    "closed_form_family",
    "closed_neighborhood",
    "components",
    "count_dominating_sets",
    "deflate_zero",
    "emit_root_plot_data",
    "enumerate_graphs",
    "evaluate",
    "find_roots",
    "induced_subgraph",
    "is_dominating",
    "parse_graph6",
    "poly_by_components",
    "root_statistics",
    "verify",
    "write_graph6",
]
