"""Matching and vertex-cover theory for k-partite k-uniform hypergraphs."""

from .core import (
    BipartiteGraph,
    KPartiteHypergraph,
    Matching,
    VertexCover,
    VertexRef,
    build,
    degree,
    edges_between,
    link_graph,
    load,
    min_l_degree,
    remove_vertices,
    save,
)
from .constructions import (
    berge_decomposition,
    complete,
    extremal_hknm,
    lemma24_tight_family,
    rainbow_tight_family,
    random_hypergraph,
    random_min_degree,
)
from .links import LinkSystem, extend_matching, extension_lemma_census, link_system, rainbow_extension
from .report import VerificationReport
from .shifting import is_partitely_shifted, shift, shift_closure, shift_trace
from .solvers import (
    bipartite_max_matching,
    bipartite_min_cover,
    brute_nu,
    brute_tau,
    max_matching,
    min_vertex_cover,
    rainbow_matching,
)

__version__ = "0.1.0"
