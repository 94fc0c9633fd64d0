"""Exact solver, generator, and verification suites for quasiperfect domination."""

from .canon import canonical_graph, canonical_label, canonical_ordering, is_isomorphic
from .domination import (
    Certificate,
    DominationChain,
    SolveResult,
    chain_summary,
    domination_chain,
    find_certificates,
    is_k_quasiperfect,
    is_short_chain,
    min_quasiperfect,
    min_quasiperfect_bruteforce,
    quasiperfect_violations,
    solve,
    tree_gamma11_set,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    complement,
    disjoint_union,
    format_edge_list,
    induced_cycles,
    induced_paths_between,
    induced_subgraph,
    join,
    parse_edge_list,
)
from .graph6 import Graph6Error
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "Certificate",
    "DominationChain",
    "Graph",
    "Graph6Error",
    "SolveResult",
    "VertexSet",
    "canonical_graph",
    "canonical_label",
    "canonical_ordering",
    "chain_summary",
    "complement",
    "disjoint_union",
    "domination_chain",
    "find_certificates",
    "format_edge_list",
    "graph6_decode",
    "graph6_encode",
    "induced_cycles",
    "induced_paths_between",
    "induced_subgraph",
    "is_isomorphic",
    "is_k_quasiperfect",
    "is_short_chain",
    "join",
    "min_quasiperfect",
    "min_quasiperfect_bruteforce",
    "parse_edge_list",
    "quasiperfect_violations",
    "solve",
    "tree_gamma11_set",
    "__version__",
]
