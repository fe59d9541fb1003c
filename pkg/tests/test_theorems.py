import pytest

from oracles import brute_theorem_a
from vfassign.constructions import (cross_polytope, cube, dual_polytope,
                                    free_join, pyramid, simplex)
from vfassign.errors import InvalidInputError
from vfassign.incidence import make_matrix
from vfassign.lattice import build_lattice, dual
from vfassign.matching import ASSIGNED
from vfassign.theorems import (FOUND, INCONCLUSIVE, NONE, check_corollary_4_2,
                               check_theorem_a, check_theorem_b, classify,
                               full_report, search_lattice_isomorphism,
                               search_self_dual_antiautomorphism)

BIG_JOIN = free_join(cube(3), cross_polytope(3))


def test_face_scan_holds_on_small_families():
    for spec in (simplex(4), cube(4), cross_polytope(4), pyramid(cube(3))):
        holds, violation = check_theorem_a(build_lattice(spec.matrix))
        assert holds and violation is None


def test_face_scan_matches_brute_force(corpus_specs):
    for spec in corpus_specs:
        if spec.matrix.n_facets > 12:
            continue
        holds, _ = check_theorem_a(build_lattice(spec.matrix))
        assert holds == brute_theorem_a(spec.matrix), spec.name


def test_face_scan_counterexample():
    l = build_lattice(BIG_JOIN.matrix)
    holds, violation = check_theorem_a(l)
    assert not holds
    assert violation.vertex_count == 8
    assert violation.containing_facets == 8
    assert violation.bound == 14
    # the violating face is the cube factor, reported at its lattice rank
    assert violation.rank == 4
    assert l.faces[violation.face].vertex_set == tuple(range(8))


def test_minimal_rank_violator_is_a_3_face():
    # both failing joins violate first at rank 4, i.e. a 3-dimensional face
    for operands in ((cube(3), cross_polytope(3)), (cross_polytope(3), cube(3))):
        l = build_lattice(free_join(*operands).matrix)
        _, violation = check_theorem_a(l)
        assert violation.rank == 4


def test_cover_condition():
    assert check_theorem_b(build_lattice(cube(7).matrix))[0]
    assert check_theorem_b(build_lattice(pyramid(cross_polytope(6)).matrix))[0]
    applies, failures = check_theorem_b(build_lattice(BIG_JOIN.matrix))
    assert not applies
    assert len(failures) == 1
    l = build_lattice(BIG_JOIN.matrix)
    # the lone failure is the cube factor again
    assert l.faces[failures[0]].vertex_set == tuple(range(8))


def test_subset_oracle():
    assert check_corollary_4_2(cube(3).matrix)
    assert not check_corollary_4_2(BIG_JOIN.matrix)
    # hypothesis direction: the octahedron needs the transpose
    with pytest.raises(InvalidInputError, match="transpose"):
        check_corollary_4_2(cross_polytope(3).matrix)
    assert check_corollary_4_2(cross_polytope(3).matrix.transpose())
    # a 22-gon: within the hypothesis but over the exhaustive size cap
    big = make_matrix(22, [[i, (i + 1) % 22] for i in range(22)])
    with pytest.raises(InvalidInputError, match="limit"):
        check_corollary_4_2(big)


def test_classify():
    assert classify(build_lattice(cube(3).matrix)) == (True, False, 3)
    assert classify(build_lattice(cross_polytope(3).matrix)) == (False, True, 3)
    assert classify(build_lattice(simplex(4).matrix)) == (True, True, 4)
    assert classify(build_lattice(pyramid(cube(2)).matrix)) == (False, False, 3)


def test_full_report_consistency(corpus_specs):
    for spec in corpus_specs:
        if spec.matrix.n_vertices + spec.matrix.n_facets > 30:
            continue
        report = full_report(spec.matrix)
        assert report.theorem_a_holds == (report.matching_verdict == ASSIGNED)
        if report.dim <= 6:
            assert report.theorem_b_applies


def test_isomorphism_square_and_diamond():
    square = build_lattice(cube(2).matrix)
    diamond = build_lattice(cross_polytope(2).matrix)
    result = search_lattice_isomorphism(square, diamond)
    assert result.status == FOUND
    assert sorted(result.atom_map) == [0, 1, 2, 3]


def test_isomorphism_distinguishes():
    a = build_lattice(cube(3).matrix)
    b = build_lattice(cross_polytope(3).matrix)
    assert search_lattice_isomorphism(a, b).status == NONE


def test_isomorphism_budget():
    a = build_lattice(cube(3).matrix)
    b = dual(dual(a))
    assert search_lattice_isomorphism(a, b, max_steps=0).status == INCONCLUSIVE


def test_self_dual_simplex():
    for d in range(1, 5):
        l = build_lattice(simplex(d).matrix)
        result = search_self_dual_antiautomorphism(l)
        assert result.status == FOUND
        # deterministic search finds the polarity sending vertex i to the
        # opposite facet, which here is facet i
        assert result.vertex_to_facet == tuple((i, i) for i in range(d + 1))
        for v, f in result.vertex_to_facet:
            assert not l.matrix.incident(v, f)


def test_self_dual_square_pyramid():
    result = search_self_dual_antiautomorphism(build_lattice(pyramid(cube(2)).matrix))
    assert result.status == FOUND


def test_self_dual_rejects_cube():
    result = search_self_dual_antiautomorphism(build_lattice(cube(3).matrix))
    assert result.status == NONE
    assert "differs" in result.reason


def test_self_dual_join_of_cube_and_dual():
    spec = free_join(cube(3), dual_polytope(cube(3)))
    result = search_self_dual_antiautomorphism(build_lattice(spec.matrix))
    assert result.status == FOUND
    # the natural pairing swaps the two factors
    assert result.vertex_to_facet[0] == (0, 0)


def test_self_dual_budget():
    l = build_lattice(simplex(5).matrix)
    result = search_self_dual_antiautomorphism(l, max_steps=0)
    assert result.status == INCONCLUSIVE
