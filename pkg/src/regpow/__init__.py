"""Regularity of powers of edge ideals of unicyclic graphs.

Closed-form formulas (forests, cycles, unicyclic graphs and their powers)
together with an independent brute-force oracle: polarization plus a
Hochster-style subset scan with exact rational homology.
"""

from .complexes import (
    HomologyProfile,
    SimplicialComplex,
    reduced_homology,
    stanley_reisner,
)
from .enumeration import GraphFamilySpec, canonical_code, count_family, enumerate_family
from .formulas import (
    RegularityReport,
    UnsupportedGraphError,
    analyze_graph,
    conjecture_bounds,
    reg_cycle,
    reg_edge_ideal,
    reg_forest,
    reg_power,
    reg_power_disconnected,
    reg_unicyclic,
)
from .graphs import (
    Graph,
    GraphError,
    UnicyclicDecomposition,
    classify,
    closed_neighborhood,
    connected_components,
    delete_edge,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    neighbors,
    parse_edge_list,
    unicyclic_decomposition,
)
from .matching import (
    induced_matching,
    induced_matching_number,
    is_induced_matching,
    is_matching,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    add,
    colon,
    colon_by_even_connection,
    edge_ideal,
    edge_multiset_factorizations,
    ideal_power,
    is_even_connected,
    minimalize,
    monomial_of_edges,
    polarize,
)
from .oracle import (
    OracleResult,
    ResourceLimitError,
    hochster_scan,
    regularity_colon_graph,
    regularity_graph_power,
    regularity_monomial,
    regularity_squarefree,
)

__version__ = "0.1.0"
