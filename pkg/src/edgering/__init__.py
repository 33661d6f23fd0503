"""Exact computations with edge rings of finite simple graphs:
normality via the odd cycle condition, facets of the edge cone, semigroup
and saturation membership, and verification of the Serre depth condition.
"""

from .cycles import (
    ExceptionalPair,
    OddCycle,
    exceptional_pairs,
    has_bridge,
    minimal_odd_cycles,
    satisfies_odd_cycle_condition,
)
from .facets import (
    Facet,
    cone_dimension,
    facets,
    fundamental_sets,
    generators_on_facet,
    is_regular_vertex,
)
from .families import (
    FamilyGraph,
    RemovalSchedule,
    add_cross_edges,
    build_gab,
    cross_pairs,
    family_graph,
    graph_for_theorem,
    in_set_A,
    max_family_edges,
    max_theorem_edges,
    removal_schedule,
    theorem_edge_range,
)
from .graph import (
    Edge,
    Graph,
    GraphFormatError,
    UnsupportedGraphError,
    VertexSet,
    bipartition,
    connected_components,
    delete_vertex,
    induced_bipartite_graph,
    induced_subgraph,
    is_connected,
    neighborhood,
    parse_graph,
    write_graph,
)
from .semigroup import (
    MembershipWitness,
    Vector,
    cycle_indicator,
    gap_elements,
    in_S,
    in_cone,
    in_lattice,
    in_sbar,
    normalization_generators,
    rho,
)
from .serre import (
    BoundedMembership,
    ClassificationReport,
    ExclusionCertificate,
    HkWitness,
    classify,
    hk_not_s2,
    in_SF_bounded,
    in_S_cap_F,
    vertex_parity_certificate,
)

__version__ = "0.1.0"
