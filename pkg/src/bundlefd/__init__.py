"""Exact fault diameters, mixed connectivity, bound verification, and
fault-avoiding routing for Cartesian graph bundles."""

from ._bitgraph import INFINITE
from ._enum import BudgetExceededError, DEFAULT_BUDGET
from .bounds import (
    BoundReport,
    TheoremId,
    Verdict,
    check_baseline_bounds,
    check_diameter_decomposition,
    check_efd_improved,
    check_mixed_connectivity_bound,
    check_mixed_fd_bounds,
    check_vfd_improved,
)
from .bundles import (
    Bundle,
    build_bundle,
    cartesian_product,
    compose_permutations,
    cycle_reflection,
    cycle_rotation,
    dihedral_automorphisms,
    fibre_of,
    format_bundle,
    graph_automorphisms,
    identity_permutation,
    invert_permutation,
    is_automorphism,
    is_degenerate_edge,
    lift_endpoint,
    lift_path,
    parse_bundle,
    product_bundle,
    projection,
    transport,
    twisted_torus,
    validate_bundle,
)
from .cli import twisted_torus_report
from .fault_metrics import (
    FaultDiameterResult,
    edge_fault_diameter,
    mixed_fault_diameter,
    two_stage_decomposition_check,
    vertex_fault_diameter,
)
from .graphs import (
    EdgeListFormatError,
    FaultSet,
    Graph,
    InvalidFaultSetError,
    PathSeq,
    canonical_edge,
    circulant,
    complete,
    complete_minus_edge,
    cycle,
    delete_elements,
    diameter,
    distance,
    edge_connectivity,
    format_edge_list,
    generate,
    hypercube,
    is_connected,
    is_connectivity_pair,
    is_mixed_connected,
    min_edge_cut,
    min_vertex_cut,
    minimum_degree,
    parse_edge_list,
    path_graph,
    shortest_path,
    surviving_vertices,
    vertex_connectivity,
)
from .routing import (
    Branch,
    CaseTrace,
    EdgeRouteCerts,
    HypothesesUnmetError,
    NoPathError,
    RoutingDefectError,
    VertexRouteCerts,
    edge_route_certificates,
    route_edge_faults,
    route_vertex_faults,
    shortest_path_oracle,
    vertex_route_certificates,
)
from .search import GapSearchResult, find_mixed_connectivity_gap

__version__ = "0.1.0"
