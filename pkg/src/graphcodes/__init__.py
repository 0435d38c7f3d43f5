"""Families of labeled graphs with prescribed pairwise symmetric differences.

Constructions meeting each known bound, exact predicate verification with
deterministic witnesses, closed-form upper/lower bounds, and exhaustive
optimum search for tiny vertex counts.
"""

from .core import (
    LabeledGraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    edge_from_index,
    edge_index,
    edge_slots,
    empty_graph,
    graph_from_edges,
    path_graph,
    star_graph,
    sym_diff,
)
from .errors import (
    CapabilityError,
    DomainError,
    GraphCodesError,
    UnsupportedParameterError,
)
from .family import GraphFamily, ImplicitFamily, load_family, save_family
from .linalg import LinearFamily, double_cover_check, enumerate_span, rank
from .predicates import (
    CONNECTED,
    HAMCYCLE,
    HAMPATH,
    K3,
    ODDCYCLE,
    STAR,
    THREE_CONNECTED,
    TWO_CONNECTED,
    Predicate,
    contains_induced,
    contains_subgraph,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    has_odd_cycle,
    has_spanning_star,
    is_connected,
    is_k_connected,
    k_connected,
    parse_predicate,
    vertex_connectivity,
)
from .verify import (
    VerifyReport,
    cross_difference_distinct,
    verify_dual_family,
    verify_dual_sampled,
    verify_family,
    verify_linear_family,
)

__version__ = "0.1.0"
