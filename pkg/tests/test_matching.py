import dataclasses

import pytest

from oracles import brute_hall_violation, brute_max_matching_size, intersection_vertices
from vfassign.bitsets import full_mask
from vfassign.constructions import cross_polytope, cube, free_join, simplex
from vfassign.errors import InconsistencyError, InvalidInputError
from vfassign.matching import (ASSIGNED, BOTH, FACETS, INCIDENT,
                               NO_ASSIGNMENT, NONINCIDENT, VERTICES,
                               build_graph, decide_assignment,
                               decide_incident_assignment, maximum_matching,
                               non_neighborhood, verify_certificate)


def small_specs(corpus_specs, limit=22):
    return [s for s in corpus_specs
            if s.matrix.n_vertices + s.matrix.n_facets <= limit]


def test_graph_modes_complement():
    m = cube(3).matrix
    g_in = build_graph(m, INCIDENT)
    g_non = build_graph(m, NONINCIDENT)
    for v in range(m.n_vertices):
        assert g_in.adjacency[v] ^ g_non.adjacency[v] == full_mask(m.n_facets)


def test_matching_size_against_brute_force(corpus_specs):
    checked = 0
    for spec in small_specs(corpus_specs):
        for mode in (NONINCIDENT, INCIDENT):
            g = build_graph(spec.matrix, mode)
            expected = brute_max_matching_size(g.adjacency, g.n_vertices)
            assert len(maximum_matching(g)) == expected, (spec.name, mode)
            checked += 1
    assert checked >= 30


def test_decide_assignment_simplex():
    cert = decide_assignment(simplex(3).matrix)
    assert cert.outcome == ASSIGNED
    assert cert.covered_side == BOTH
    assert len(cert.matching) == 4


def test_decide_assignment_cube():
    cert = decide_assignment(cube(3).matrix)
    assert cert.outcome == ASSIGNED
    assert cert.covered_side == FACETS
    assert len(cert.matching) == 6


def test_decide_assignment_counterexample():
    m = free_join(cube(3), cross_polytope(3)).matrix
    cert = decide_assignment(m)
    assert cert.outcome == NO_ASSIGNMENT
    assert cert.witness_side == VERTICES
    assert len(cert.matching) == 12
    # recount the witness straight from the adjacency
    g = build_graph(m, NONINCIDENT)
    neighborhood = 0
    for v in cert.hall_witness:
        neighborhood |= g.adjacency[v]
    assert neighborhood.bit_count() < len(cert.hall_witness)
    # brute force agrees nothing bigger exists
    assert brute_max_matching_size(g.adjacency, g.n_vertices) == 12


def test_incident_cube_witness():
    cert = decide_incident_assignment(cube(3).matrix)
    assert cert.outcome == NO_ASSIGNMENT
    assert cert.covered_side == FACETS
    assert cert.warnings  # 8 vertices > 6 facets
    assert cert.hall_witness == (1, 2, 3, 4, 5, 6, 7)
    assert cert.witness_neighborhood == (0, 1, 2, 3, 4, 5)


def test_incident_simplex_assigned():
    for d in range(1, 5):
        cert = decide_incident_assignment(simplex(d).matrix)
        assert cert.outcome == ASSIGNED
        assert not cert.warnings


def test_witness_matches_brute_force(corpus_specs):
    for spec in small_specs(corpus_specs):
        for mode, decide in ((NONINCIDENT, decide_assignment),
                             (INCIDENT, decide_incident_assignment)):
            cert = decide(spec.matrix)
            if cert.outcome == ASSIGNED:
                continue
            g = build_graph(spec.matrix, mode)
            if cert.witness_side == VERTICES:
                adjacency, n = g.adjacency, g.n_vertices
            else:
                adjacency, n = g.facet_adjacency(), g.n_facets
            assert brute_hall_violation(adjacency, n) is not None


def test_decisions_are_deterministic():
    m = free_join(cube(3), cross_polytope(3)).matrix
    assert decide_assignment(m) == decide_assignment(m)
    assert decide_incident_assignment(m) == decide_incident_assignment(m)


def test_non_neighborhood_is_intersection_face():
    m = cube(3).matrix
    g = build_graph(m, NONINCIDENT)
    assert non_neighborhood(g, [0]) == intersection_vertices(m, [0])
    assert non_neighborhood(g, [0, 2]) == intersection_vertices(m, [0, 2])
    assert non_neighborhood(g, [0, 1]) == ()  # opposite facets


def test_non_neighborhood_validation():
    m = cube(3).matrix
    with pytest.raises(InvalidInputError):
        non_neighborhood(build_graph(m, INCIDENT), [0])
    g = build_graph(m, NONINCIDENT)
    with pytest.raises(InvalidInputError):
        non_neighborhood(g, [])
    with pytest.raises(InvalidInputError):
        non_neighborhood(g, [6])


def test_verify_rejects_tampered_matching():
    m = cube(3).matrix
    g = build_graph(m, NONINCIDENT)
    cert = decide_assignment(m)
    # (0, 0) is an incidence, so it is not an edge of the graph
    bad = dataclasses.replace(cert, matching=((0, 0),) + cert.matching[1:])
    with pytest.raises(InconsistencyError):
        verify_certificate(g, bad)


def test_verify_rejects_tampered_witness():
    m = free_join(cube(3), cross_polytope(3)).matrix
    g = build_graph(m, NONINCIDENT)
    cert = decide_assignment(m)
    bad = dataclasses.replace(cert, hall_witness=cert.hall_witness[:-1])
    with pytest.raises(InconsistencyError):
        verify_certificate(g, bad)


def test_verify_rejects_wrong_outcome():
    m = cube(3).matrix
    g = build_graph(m, NONINCIDENT)
    cert = decide_assignment(m)
    bad = dataclasses.replace(cert, outcome=NO_ASSIGNMENT)
    with pytest.raises(InconsistencyError):
        verify_certificate(g, bad)
