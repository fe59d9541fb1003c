"""Decide, certify, and explain vertex-facet assignments for convex
polytopes given by their vertex-facet incidences."""

from .constructions import (PolytopeSpec, connected_sum, cross_polytope, cube,
                            dual_polytope, free_join, pyramid, simplex,
                            stacked, truncate_simple_vertex)
from .errors import InconsistencyError, InvalidInputError, PolytopeError
from .expressions import parse_construction
from .incidence import IncidenceMatrix, make_matrix
from .lattice import Face, FaceLattice, build_lattice, dual
from .matching import (ASSIGNED, INCIDENT, NO_ASSIGNMENT, NONINCIDENT,
                       MatchingCertificate, VertexFacetGraph, build_graph,
                       decide_assignment, decide_incident_assignment,
                       maximum_matching, non_neighborhood, verify_certificate)
from .models import PolytopeDocument, document_to_matrix, document_to_spec, spec_to_document
from .runner import run_check
from .theorems import (AntiAutomorphismResult, IsomorphismResult,
                       TheoremReport, check_corollary_4_2, check_theorem_a,
                       check_theorem_b, classify, full_report,
                       search_lattice_isomorphism,
                       search_self_dual_antiautomorphism)

__version__ = "0.1.0"

__all__ = [
    "ASSIGNED", "INCIDENT", "NO_ASSIGNMENT", "NONINCIDENT",
    "AntiAutomorphismResult", "Face", "FaceLattice", "IncidenceMatrix",
    "InconsistencyError", "InvalidInputError", "IsomorphismResult",
    "MatchingCertificate", "PolytopeDocument", "PolytopeError",
    "PolytopeSpec", "TheoremReport", "VertexFacetGraph", "build_graph",
    "build_lattice", "check_corollary_4_2", "check_theorem_a",
    "check_theorem_b", "classify", "connected_sum", "cross_polytope", "cube",
    "decide_assignment", "decide_incident_assignment", "document_to_matrix",
    "document_to_spec", "dual", "dual_polytope", "free_join", "full_report",
    "make_matrix", "maximum_matching", "non_neighborhood",
    "parse_construction", "pyramid", "run_check",
    "search_lattice_isomorphism", "search_self_dual_antiautomorphism",
    "simplex", "spec_to_document", "stacked", "truncate_simple_vertex",
    "verify_certificate",
]
