"""ribbonpoly: polynomial invariants of cellularly embedded graphs.

Ribbon graphs as signed rotation systems; exact Bollobas-Riordan, Tutte,
and Penrose polynomials; Heegaard graphs of lens spaces with spanning-tree
invariants and classification predicates; and the two shipped minimal
Heegaard diagrams of the Poincare homology sphere.
"""

from .graphfile import GraphFileError, parse_graph_file, write_graph_file
from .lens import (LensParams, OrbitRow, QOrbit, SquareShapeReport,
                   TauCollision, TheoremCheckError,
                   circulant_isomorphic_bruteforce, lens_heegaard_graph,
                   lens_homeomorphic, lens_params, q_orbit, scan_rows_to_csv,
                   scan_tau_orbits, square_shape_check, tau, unit_orbits)
from .exactdet import bareiss_determinant, spanning_tree_count
from .multipoly import MultiPoly, parse_poly
from .polynomials import (DEFAULT_EDGE_CAP, EnumerationCapError,
                          PenroseState, bollobas_riordan, penrose,
                          penrose_eval, penrose_states,
                          penrose_via_medial_states, tutte,
                          tutte_deletion_contraction)
from .ribbon import (RibbonGraph, RibbonGraphError, SubgraphMetrics,
                     boundary_component_count, boundary_walks,
                     build_ribbon_graph, component_count, is_orientable,
                     medial_graph, partial_petrial, random_ribbon_graph,
                     subgraph_metrics)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EDGE_CAP",
    "EnumerationCapError",
    "GraphFileError",
    "LensParams",
    "MultiPoly",
    "OrbitRow",
    "PenroseState",
    "QOrbit",
    "RibbonGraph",
    "RibbonGraphError",
    "SquareShapeReport",
    "SubgraphMetrics",
    "TauCollision",
    "TheoremCheckError",
    "bareiss_determinant",
    "bollobas_riordan",
    "boundary_component_count",
    "boundary_walks",
    "build_ribbon_graph",
    "circulant_isomorphic_bruteforce",
    "component_count",
    "is_orientable",
    "lens_heegaard_graph",
    "lens_homeomorphic",
    "lens_params",
    "medial_graph",
    "parse_graph_file",
    "parse_poly",
    "partial_petrial",
    "penrose",
    "penrose_eval",
    "penrose_states",
    "penrose_via_medial_states",
    "q_orbit",
    "random_ribbon_graph",
    "scan_rows_to_csv",
    "scan_tau_orbits",
    "spanning_tree_count",
    "square_shape_check",
    "subgraph_metrics",
    "tau",
    "tutte",
    "tutte_deletion_contraction",
    "unit_orbits",
    "write_graph_file",
]
