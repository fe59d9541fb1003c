import pytest

from vfassign.errors import InvalidInputError
from vfassign.incidence import make_matrix

# a square: vertices 0..3 in cyclic order, facets are the edges
SQUARE = [[0, 1], [1, 2], [2, 3], [3, 0]]


def test_make_matrix_square():
    m = make_matrix(4, SQUARE)
    assert m.n_vertices == 4
    assert m.n_facets == 4
    assert m.incident(0, 0)
    assert not m.incident(2, 0)
    assert m.facet_vertices(1) == (1, 2)
    assert m.vertex_labels == ("v0", "v1", "v2", "v3")
    assert m.facet_labels == ("F0", "F1", "F2", "F3")


def test_custom_labels():
    m = make_matrix(4, SQUARE, vertex_labels=["a", "b", "c", "d"])
    assert m.vertex_labels == ("a", "b", "c", "d")


def test_transpose_involution():
    m = make_matrix(4, SQUARE)
    t = m.transpose()
    assert t.n_vertices == 4
    assert t.facet_masks == m.vertex_masks
    assert t.transpose() == m


def test_vertex_index_out_of_range():
    with pytest.raises(InvalidInputError, match="outside"):
        make_matrix(4, [[0, 1], [1, 4], [2, 3], [3, 0]])


def test_duplicate_vertex_in_facet():
    with pytest.raises(InvalidInputError, match="twice"):
        make_matrix(4, [[0, 1, 1], [1, 2], [2, 3], [3, 0]])


def test_vertex_in_no_facet():
    with pytest.raises(InvalidInputError, match="lies in no facet"):
        make_matrix(5, SQUARE)


def test_vertex_in_every_facet():
    with pytest.raises(InvalidInputError, match="every facet"):
        make_matrix(3, [[0, 1, 2], [0, 1], [0, 2]])


def test_facet_with_every_vertex():
    with pytest.raises(InvalidInputError, match="contains every vertex"):
        make_matrix(2, [[0, 1], [0], [1]])


def test_empty_facet():
    with pytest.raises(InvalidInputError, match="contains no vertex"):
        make_matrix(4, [[0, 1], [], [2, 3], [3, 0]])


def test_duplicate_facets():
    with pytest.raises(InvalidInputError, match="identical vertex sets"):
        make_matrix(4, [[0, 1], [1, 0], [2, 3], [3, 0]])


def test_duplicate_vertex_rows():
    # vertices 0 and 1 lie in exactly the same facets
    with pytest.raises(InvalidInputError, match="identical facet sets"):
        make_matrix(4, [[0, 1, 2], [0, 1, 3], [2, 3]])


def test_label_count_mismatch():
    with pytest.raises(InvalidInputError, match="label count"):
        make_matrix(4, SQUARE, vertex_labels=["a"])
