"""Vertex-facet incidence matrices, the sole input encoding of a polytope.

Every polytope enters the package as a boolean vertices x facets matrix.
The matrix is stored redundantly as bitsets in both directions because the
whole workload is intersection-heavy: ``facet_masks[j]`` is the vertex set
of facet j, ``vertex_masks[v]`` is the set of facets containing vertex v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitsets import from_indices, full_mask, iter_indices
from .errors import InvalidInputError


@dataclass(frozen=True)
class IncidenceMatrix:
    """Boolean vertex x facet incidence with display labels.

    Instances are immutable and hashable; two matrices are equal exactly
    when they encode the same labelled incidence relation.
    """

    n_vertices: int
    n_facets: int
    vertex_masks: tuple[int, ...]  # per vertex: bitset of facets containing it
    facet_masks: tuple[int, ...]   # per facet: bitset of its vertices
    vertex_labels: tuple[str, ...]
    facet_labels: tuple[str, ...]

    def incident(self, vertex: int, facet: int) -> bool:
        """True if the vertex lies on the facet."""
        return bool(self.vertex_masks[vertex] >> facet & 1)

    def facet_vertices(self, facet: int) -> tuple[int, ...]:
        """Sorted vertex indices of a facet."""
        return tuple(iter_indices(self.facet_masks[facet]))

    def transpose(self) -> "IncidenceMatrix":
        """Swap the roles of vertices and facets.

        The transpose is the incidence matrix of the dual polytope: facets
        become vertices (in the same order) and vice versa.
        """
        return IncidenceMatrix(
            n_vertices=self.n_facets,
            n_facets=self.n_vertices,
            vertex_masks=self.facet_masks,
            facet_masks=self.vertex_masks,
            vertex_labels=self.facet_labels,
            facet_labels=self.vertex_labels,
        )


def make_matrix(
    n_vertices: int,
    facets: Sequence[Iterable[int]],
    vertex_labels: Sequence[str] | None = None,
    facet_labels: Sequence[str] | None = None,
) -> IncidenceMatrix:
    """Build and validate an IncidenceMatrix from facet vertex lists."""
    if n_vertices < 1:
        raise InvalidInputError("a polytope needs at least one vertex")
    if len(facets) < 1:
        raise InvalidInputError("a polytope needs at least one facet")
    facet_masks = []
    for j, facet in enumerate(facets):
        mask = 0
        for v in facet:
            if not 0 <= v < n_vertices:
                raise InvalidInputError(
                    f"facet {j} refers to vertex {v}, outside 0..{n_vertices - 1}"
                )
            if mask >> v & 1:
                raise InvalidInputError(f"facet {j} lists vertex {v} twice")
            mask |= 1 << v
        facet_masks.append(mask)
    vertex_masks = [0] * n_vertices
    for j, mask in enumerate(facet_masks):
        for v in iter_indices(mask):
            vertex_masks[v] |= 1 << j
    if vertex_labels is None:
        vertex_labels = tuple(f"v{i}" for i in range(n_vertices))
    if facet_labels is None:
        facet_labels = tuple(f"F{j}" for j in range(len(facets)))
    if len(vertex_labels) != n_vertices:
        raise InvalidInputError("vertex label count does not match vertex count")
    if len(facet_labels) != len(facets):
        raise InvalidInputError("facet label count does not match facet count")
    matrix = IncidenceMatrix(
        n_vertices=n_vertices,
        n_facets=len(facets),
        vertex_masks=tuple(vertex_masks),
        facet_masks=tuple(facet_masks),
        vertex_labels=tuple(vertex_labels),
        facet_labels=tuple(facet_labels),
    )
    validate_matrix(matrix)
    return matrix


def validate_matrix(m: IncidenceMatrix) -> None:
    """Check the structural invariants every polytope matrix must satisfy.

    Raises InvalidInputError with a diagnostic naming the offending index.
    The deeper lattice-level checks (graded, diamond, Euler) happen in
    build_lattice; this rejects the cheap-to-spot garbage.
    """
    all_vertices = full_mask(m.n_vertices)
    all_facets = full_mask(m.n_facets)
    for v, mask in enumerate(m.vertex_masks):
        if mask == 0:
            raise InvalidInputError(f"vertex {v} lies in no facet")
        if mask == all_facets:
            raise InvalidInputError(f"vertex {v} lies in every facet")
    for j, mask in enumerate(m.facet_masks):
        if mask == 0:
            raise InvalidInputError(f"facet {j} contains no vertex")
        if mask == all_vertices:
            raise InvalidInputError(f"facet {j} contains every vertex")
    seen_facets: dict[int, int] = {}
    for j, mask in enumerate(m.facet_masks):
        if mask in seen_facets:
            raise InvalidInputError(
                f"facets {seen_facets[mask]} and {j} have identical vertex sets"
            )
        seen_facets[mask] = j
    seen_vertices: dict[int, int] = {}
    for v, mask in enumerate(m.vertex_masks):
        if mask in seen_vertices:
            raise InvalidInputError(
                f"vertices {seen_vertices[mask]} and {v} have identical facet sets"
            )
        seen_vertices[mask] = v
