"""Property-based checks over randomly built construction trees."""

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_max_matching_size
from vfassign.constructions import (cross_polytope, cube, dual_polytope,
                                    free_join, pyramid, simplex)
from vfassign.lattice import build_lattice, dual
from vfassign.matching import (ASSIGNED, NONINCIDENT, build_graph,
                               decide_assignment, decide_incident_assignment)
from vfassign.models import document_to_spec, spec_to_document
from vfassign.theorems import check_theorem_a

bases = st.one_of(
    st.integers(min_value=1, max_value=4).map(simplex),
    st.integers(min_value=1, max_value=3).map(cube),
    st.integers(min_value=1, max_value=3).map(cross_polytope),
)


def _combine(children):
    unary = st.one_of(children.map(dual_polytope), children.map(pyramid))
    joins = st.tuples(children, children).filter(
        lambda pair: pair[0].dim + pair[1].dim <= 5).map(
        lambda pair: free_join(*pair))
    return st.one_of(unary, joins)


polytopes = st.recursive(bases, _combine, max_leaves=3)


@given(polytopes)
@settings(max_examples=60, deadline=None)
def test_lattice_invariants(spec):
    l = build_lattice(spec.matrix)
    # the builder enforces graded/diamond/Euler; pin the basic shape here
    assert l.f_vector[0] == spec.matrix.n_vertices
    assert l.f_vector[-1] == spec.matrix.n_facets
    assert len(l.f_vector) == l.dim
    assert l.faces[l.top_index].rank == l.dim + 1


@given(polytopes)
@settings(max_examples=40, deadline=None)
def test_dual_reverses(spec):
    l = build_lattice(spec.matrix)
    assert dual(l).f_vector == tuple(reversed(l.f_vector))


@given(polytopes)
@settings(max_examples=40, deadline=None)
def test_verdict_equals_face_scan(spec):
    cert = decide_assignment(spec.matrix)
    holds, _ = check_theorem_a(build_lattice(spec.matrix))
    assert holds == (cert.outcome == ASSIGNED)


@given(polytopes)
@settings(max_examples=25, deadline=None)
def test_matching_size_is_maximum(spec):
    g = build_graph(spec.matrix, NONINCIDENT)
    if g.n_vertices + g.n_facets > 24:
        return
    cert = decide_assignment(spec.matrix)
    assert len(cert.matching) == brute_max_matching_size(g.adjacency, g.n_vertices)


@given(polytopes)
@settings(max_examples=40, deadline=None)
def test_document_round_trip(spec):
    # facet labels are not part of the document format and come back as
    # F0, F1, ...; everything else survives the round trip
    doc = spec_to_document(spec)
    back = document_to_spec(doc)
    assert back.matrix.vertex_masks == spec.matrix.vertex_masks
    assert back.matrix.facet_masks == spec.matrix.facet_masks
    assert back.matrix.vertex_labels == spec.matrix.vertex_labels
    assert back.name == spec.name


@given(polytopes)
@settings(max_examples=25, deadline=None)
def test_incident_decision_verified(spec):
    # decide_incident_assignment verifies its own certificate; the point
    # here is that no construction tree can make it raise
    cert = decide_incident_assignment(spec.matrix)
    assert cert.outcome in (ASSIGNED, "NO_ASSIGNMENT")
