"""Geodesic convexity and partial-cube machinery for small graphs.

Core objects: Graph (immutable, dense integer vertices), VertexSet
(bitsets over a host graph), intervals / hulls / copoints / pre-hull
numbers, the edge relation with its half-spaces and recognizers, graph
constructions (products, expansions, contractions, gated amalgams), and
an exhaustive verification harness with JSON/CSV reports.
"""

from ._kernels import backend_name
from .constructions import (
    Amalgam,
    AmalgamSpec,
    Contraction,
    Expansion,
    Product,
    ProperCover,
    cartesian_product,
    check_proper_cover,
    expansion,
    gated_amalgam,
    gen,
    proper_cover_violation,
    theta_contraction,
)
from .convexity import (
    Copoint,
    HullTrace,
    attaching_points,
    att_convexity_violation,
    convex_hull,
    convexity_violation,
    copoints,
    copoints_at,
    enumerate_convex_sets,
    gate,
    interval,
    is_att_convex,
    is_convex,
    is_gated,
    is_ph_stable,
    ph_leq1_bipartite,
    ph_stability_violation,
    pre_hull,
    pre_hull_number,
)
from .errors import (
    BoundExceededError,
    ConstructionError,
    DisconnectedGraphError,
    GraphFormatError,
    NotPartialCubeError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    VertexSet,
    are_isomorphic_small,
    distances,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    parse_graph,
    serialize_graph,
    two_coloring,
)
from .harness import (
    Corpus,
    CorpusEntry,
    CheckResult,
    VerificationReport,
    enumerate_corpus,
    run_all_checks,
)
from .theta import (
    CubeEmbedding,
    DirectedEdge,
    HalfSpaceData,
    ThetaStructure,
    cube_embedding,
    geodesic_check,
    half_space_data,
    is_partial_cube,
    is_partial_cube_djokovic,
    is_partial_cube_winkler,
    theta_classes,
    theta_related,
    theta_structure,
    u_set,
    w_set,
)

__version__ = "0.1.0"
